#pragma once

#include "dbound/bigint.hpp"
#include "dbound/core.hpp"
#include "dbound/polynomial.hpp"
#include "dbound/reducer.hpp"
#include "dbound/solver.hpp"
#include "dbound/verifier.hpp"
#include "dbound/witnesses.hpp"
