#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dbound {

using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

// Exact square root if v is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("bad integer literal '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw Error("bad integer literal '" + s + "'");
  return BigInt(s);
}

// Fits-in-uint64 test used by fast paths.
inline bool fits_u64(const BigInt& v) {
  return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace dbound
