#pragma once

// Named systems with closed-form extremal solutions: the squaring chain that
// attains f(n) for n <= 5, the divisor systems that attain f(n) for n >= 6,
// the two counterexamples to the older 2^(2^(n-1)) bounds, and the padding
// construction T_n.

#include <string>

#include "dbound/core.hpp"

namespace dbound {

struct WitnessPackage {
  EquationSystem system;
  PosTuple solution;  // the extremal solution
  BigInt claimed_bound;
  std::string label;
};

inline constexpr std::size_t kMaxChainWitness = 24;

inline WitnessPackage theorem1_witness(std::size_t n) {
  if (n == 0) throw Error("the chain witness needs n >= 1");
  if (n > kMaxChainWitness) throw Error("chain witness limited to n <= " + std::to_string(kMaxChainWitness));
  EquationSystem sys(n, {RelationAtom::prod(1, 1, 1)});
  if (n >= 2) sys.insert(RelationAtom::succ(1, 2));
  for (Index i = 2; i + 1 <= n; ++i) sys.insert(RelationAtom::prod(i, i, i + 1));

  std::vector<BigInt> x{1};
  for (std::size_t i = 2; i <= n; ++i) x.push_back(pow2(std::uint64_t{1} << (i - 2)));
  WitnessPackage w{std::move(sys), PosTuple(x), x.back(), "chain n=" + std::to_string(n)};
  if (n <= 5) w.claimed_bound = bound_f(n);
  return w;
}

inline constexpr std::size_t kMaxDivisorWitness = 10;

// Squarings x_i^2 = x_{i+1} (i <= n), x_{n+2} + 1 = x_1, x_{n+3} + 1 = x_{n+2},
// x_{n+3} * x_{n+4} = x_{n+1}.
inline WitnessPackage theorem2_witness(std::size_t n) {
  if (n == 0) throw Error("the divisor witness needs n >= 1");
  if (n > kMaxDivisorWitness) throw Error("divisor witness limited to n <= " + std::to_string(kMaxDivisorWitness));
  const auto N = static_cast<Index>(n);
  EquationSystem sys(n + 4);
  for (Index i = 1; i <= N; ++i) sys.insert(RelationAtom::prod(i, i, i + 1));
  sys.insert(RelationAtom::succ(N + 2, 1));
  sys.insert(RelationAtom::succ(N + 3, N + 2));
  sys.insert(RelationAtom::prod(N + 3, N + 4, N + 1));

  const std::uint64_t e = std::uint64_t{1} << n;  // 2^n
  const BigInt two_e = pow2(e);                   // 2^(2^n)
  const BigInt base = 2 + two_e;
  std::vector<BigInt> x;
  for (std::size_t i = 1; i <= n + 1; ++i) x.push_back(ipow(base, std::uint64_t{1} << (i - 1)));
  x.push_back(1 + two_e);
  x.push_back(two_e);
  x.push_back(ipow(1 + pow2(e - 1), e));
  return {std::move(sys), PosTuple(std::move(x)), ipow(base, e), "divisor n=" + std::to_string(n)};
}

enum class CounterexampleKind { Addition, Unit };

inline constexpr std::size_t kMaxCounterexampleK = 8;

// The extremal x_1 is found by running over the divisors of 2^(2^m): the
// system forces (x_1 - s) * x_{k+5} = x_1^(2^k) with s = 4 (addition variant)
// or s = 2 (unit variant), so x_1 - s divides s^(2^k).
inline WitnessPackage counterexample_witness(CounterexampleKind kind, std::size_t k) {
  const bool addition = kind == CounterexampleKind::Addition;
  if (addition && k < 3) throw Error("the addition counterexample needs k >= 3");
  if (!addition && k < 4) throw Error("the unit counterexample needs k >= 4");
  if (k > kMaxCounterexampleK) throw Error("counterexample limited to k <= " + std::to_string(kMaxCounterexampleK));

  const auto K = static_cast<Index>(k);
  EquationSystem sys(k + 5, Stage::General);
  for (Index i = 1; i <= K; ++i) sys.insert(RelationAtom::prod(i, i, i + 1));
  if (addition) {
    sys.insert(RelationAtom::add(K + 2, K + 2, K + 3));
    sys.insert(RelationAtom::prod(K + 2, K + 2, K + 3));
    sys.insert(RelationAtom::add(K + 4, K + 3, 1));
  } else {
    sys.insert(RelationAtom::unit(K + 2));
    sys.insert(RelationAtom::add(K + 3, K + 2, 1));
    sys.insert(RelationAtom::add(K + 4, K + 2, K + 3));
  }
  sys.insert(RelationAtom::prod(K + 4, K + 5, K + 1));

  const BigInt shift = addition ? 4 : 2;
  const std::uint64_t divisor_log = addition ? (std::uint64_t{1} << (k + 1)) : (std::uint64_t{1} << k);
  const std::uint64_t squarings = std::uint64_t{1} << k;

  std::optional<PosTuple> best;
  for (std::uint64_t d = 0; d <= divisor_log; ++d) {
    const BigInt x1 = shift + pow2(d);
    std::vector<BigInt> x;
    for (std::size_t i = 1; i <= k + 1; ++i) x.push_back(ipow(x1, std::uint64_t{1} << (i - 1)));
    if (addition) {
      x.push_back(2);
      x.push_back(4);
      x.push_back(x1 - 4);
    } else {
      x.push_back(1);
      x.push_back(x1 - 1);
      x.push_back(x1 - 2);
    }
    const BigInt top = ipow(x1, squarings);
    if (top % x[k + 3] != 0) continue;
    x.push_back(top / x[k + 3]);
    PosTuple t(std::move(x));
    if (!satisfies(t, sys)) continue;
    if (!best || t[0] > (*best)[0]) best = std::move(t);
  }
  if (!best) throw Error("no solution found for the counterexample system");
  const std::size_t n = k + 5;
  WitnessPackage w{std::move(sys), *best, pow2(std::uint64_t{1} << (n - 1)),
                   std::string(addition ? "counter-add" : "counter-unit") + " k=" + std::to_string(k)};
  return w;
}

// Layout of T_n: psi's variables x_1..x_s, then the idempotent padding
// variables u_i, then t_1..t_h (h = floor(n/2)), then u, then y.
struct PaddingLayout {
  std::size_t s = 0, n = 0, padding = 0, half = 0;
  Index first_padding() const { return static_cast<Index>(s + 1); }
  Index t(std::size_t i) const { return static_cast<Index>(s + padding + i); }
  Index u() const { return static_cast<Index>(s + padding + half + 1); }
  Index y() const { return static_cast<Index>(n); }
};

inline PaddingLayout padding_layout(std::size_t s, std::size_t n) {
  if (s < 2) throw Error("padding needs psi to have at least the variables x1 and x2");
  if (n <= 2 * s + 2) throw Error("padding needs n > 2s + 2 = " + std::to_string(2 * s + 2));
  PaddingLayout l;
  l.s = s;
  l.n = n;
  l.half = n / 2;
  l.padding = n - l.half - s - 2;
  return l;
}

inline EquationSystem theorem6_padding(const EquationSystem& psi, std::size_t n) {
  if (psi.stage() != Stage::ConjectureForm) throw Error("psi must be in conjecture form");
  const auto l = padding_layout(psi.n(), n);
  EquationSystem out(n);
  for (const auto& a : psi.atoms()) out.insert(a);
  for (std::size_t i = 0; i < l.padding; ++i) {
    const auto v = static_cast<Index>(l.first_padding() + i);
    out.insert(RelationAtom::prod(v, v, v));
  }
  out.insert(RelationAtom::prod(l.t(1), l.t(1), l.t(1)));
  for (std::size_t i = 1; i + 1 <= l.half; ++i) out.insert(RelationAtom::succ(l.t(i), l.t(i + 1)));
  out.insert(RelationAtom::prod(l.t(2), l.t(l.half), l.u()));
  if (n % 2 == 1)
    out.insert(RelationAtom::succ(l.u(), 1));
  else
    out.insert(RelationAtom::prod(l.t(1), l.u(), 1));
  out.insert(RelationAtom::succ(2, l.y()));
  return out;
}

}  // namespace dbound
