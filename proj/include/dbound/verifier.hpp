#pragma once

#include "dbound/verifier/encoding.hpp"
#include "dbound/verifier/extension.hpp"
#include "dbound/verifier/families.hpp"
#include "dbound/verifier/phi.hpp"
#include "dbound/verifier/quadruples.hpp"
#include "dbound/verifier/signature_mask.hpp"
#include "dbound/verifier/triples.hpp"
