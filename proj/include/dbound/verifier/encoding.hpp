#pragma once

// Tuples as prime-power products: (x_1..x_n) <-> p_1^x_1 * ... * p_n^x_n.

#include <vector>

#include "dbound/core.hpp"

namespace dbound {

inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (auto p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

inline BigInt encode_tuple(const PosTuple& x) {
  const auto primes = first_primes(x.size());
  BigInt out = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!fits_u64(x[i]) || x[i] > 100000) throw Error("exponent too large to encode");
    out *= ipow(BigInt(primes[i]), static_cast<std::uint64_t>(x[i]));
  }
  return out;
}

// Exponents of a by increasing prime; the primes need not be consecutive.
inline PosTuple decode_index(const BigInt& a) {
  if (a < 2) throw Error("decode_index needs a >= 2");
  std::vector<BigInt> exps;
  BigInt rest = a;
  for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    BigInt e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    exps.push_back(e);
  }
  if (rest > 1) exps.push_back(1);
  return PosTuple(std::move(exps));
}

}  // namespace dbound
