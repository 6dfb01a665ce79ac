#pragma once

// Signatures of tuples with at most four entries packed into 56 bits:
//   bit i*4 + k                 x_i + 1 = x_k
//   bit 16 + pair(i,j)*4 + k    x_i * x_j = x_k   (i <= j)
// with 0-based positions. Subset tests become mask arithmetic.

#include <array>
#include <cstdint>
#include <span>

#include "dbound/core.hpp"

namespace dbound {

using SignatureMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskArity = 4;

namespace detail {

inline constexpr std::array<std::array<int, 4>, 4> kPairIndex{{
    {0, 1, 2, 3},
    {1, 4, 5, 6},
    {2, 5, 7, 8},
    {3, 6, 8, 9},
}};

}  // namespace detail

constexpr int succ_bit(int i, int k) { return i * 4 + k; }
constexpr int prod_bit(int i, int j, int k) { return 16 + detail::kPairIndex[i][j] * 4 + k; }

constexpr bool dominated(SignatureMask small, SignatureMask big) { return (small & ~big) == 0; }

// Entries must be below 2^32 so that products fit.
inline SignatureMask small_signature(std::span<const std::uint64_t> x) {
  const int n = static_cast<int>(x.size());
  if (n == 0 || n > static_cast<int>(kMaxMaskArity)) throw Error("packed signatures cover arities 1..4");
  SignatureMask m = 0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x[i] + 1 == x[k]) m |= SignatureMask{1} << succ_bit(i, k);
      for (int j = i; j < n; ++j)
        if (x[i] * x[j] == x[k]) m |= SignatureMask{1} << prod_bit(i, j, k);
    }
  return m;
}

// Signature of a strictly increasing quadruple a < b < c < d.
inline SignatureMask increasing_quad_signature(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  SignatureMask m = 0;
  auto set = [&m](int bit) { m |= SignatureMask{1} << bit; };
  if (a + 1 == b) set(succ_bit(0, 1));
  if (b + 1 == c) set(succ_bit(1, 2));
  if (c + 1 == d) set(succ_bit(2, 3));
  // a + 1 = c or d, b + 1 = d are impossible for increasing entries
  if (a == 1) {
    set(prod_bit(0, 0, 0));
    set(prod_bit(0, 1, 1));
    set(prod_bit(0, 2, 2));
    set(prod_bit(0, 3, 3));
  }
  const std::uint64_t aa = a * a, ab = a * b, ac = a * c, bb = b * b, bc = b * c, cc = c * c;
  if (aa == b) set(prod_bit(0, 0, 1));
  if (aa == c) set(prod_bit(0, 0, 2));
  if (aa == d) set(prod_bit(0, 0, 3));
  if (ab == c) set(prod_bit(0, 1, 2));
  if (ab == d) set(prod_bit(0, 1, 3));
  if (ac == d) set(prod_bit(0, 2, 3));
  if (bb == c) set(prod_bit(1, 1, 2));
  if (bb == d) set(prod_bit(1, 1, 3));
  if (bc == d) set(prod_bit(1, 2, 3));
  if (cc == d) set(prod_bit(2, 2, 3));
  return m;
}

inline EquationSystem mask_to_system(SignatureMask m, std::size_t n) {
  EquationSystem out(n);
  const int N = static_cast<int>(n);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (m >> succ_bit(i, k) & 1) out.insert(RelationAtom::succ(i + 1, k + 1));
      for (int j = i; j < N; ++j)
        if (m >> prod_bit(i, j, k) & 1) out.insert(RelationAtom::prod(i + 1, j + 1, k + 1));
    }
  return out;
}

inline SignatureMask system_to_mask(const EquationSystem& sys) {
  if (sys.n() > kMaxMaskArity) throw Error("packed signatures cover arities 1..4");
  SignatureMask m = 0;
  for (const auto& a : sys.atoms()) {
    const int i = static_cast<int>(a.i) - 1, j = static_cast<int>(a.j) - 1, k = static_cast<int>(a.k) - 1;
    if (a.kind == AtomKind::Succ)
      m |= SignatureMask{1} << succ_bit(i, k);
    else if (a.kind == AtomKind::Prod)
      m |= SignatureMask{1} << prod_bit(i, j, k);
    else
      throw Error("packed signatures hold successor and product atoms only");
  }
  return m;
}

}  // namespace dbound
