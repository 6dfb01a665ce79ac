#include <catch_amalgamated.hpp>

#include "dbound/solver.hpp"
#include "dbound/witnesses.hpp"
#include "support/oracles.hpp"

using namespace dbound;

namespace {

BigInt big(const std::string& s) { return BigInt(s); }

}  // namespace

TEST_CASE("chain witness examples") {
  const auto one = theorem1_witness(1);
  CHECK(one.system == EquationSystem(1, {RelationAtom::prod(1, 1, 1)}));
  CHECK(one.solution == PosTuple{1});
  CHECK(theorem1_witness(2).solution == PosTuple{1, 2});
  const auto five = theorem1_witness(5);
  CHECK(five.solution == PosTuple{1, 2, 4, 16, 256});
  CHECK(five.claimed_bound == 256);
  CHECK_THROWS_AS(theorem1_witness(0), Error);
}

TEST_CASE("chain witnesses have a single solution and attain f") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto w = theorem1_witness(n);
    CHECK(satisfies(w.solution, w.system));
    const auto sols = enumerate_solutions(w.system, 300).solutions;
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == w.solution);
    CHECK(w.solution.max() == big(oracle::gmp_f(static_cast<unsigned>(n))));
  }
  for (std::size_t n = 6; n <= 12; ++n) CHECK(satisfies(theorem1_witness(n).solution, theorem1_witness(n).system));
}

TEST_CASE("divisor witness examples") {
  const auto one = theorem2_witness(1);
  CHECK(one.solution == PosTuple{6, 36, 5, 4, 9});
  CHECK(one.claimed_bound == 36);
  const auto two = theorem2_witness(2);
  CHECK(two.solution[0] == 18);
  CHECK(two.claimed_bound == 104976);
  CHECK(two.system.n() == 6);
}

TEST_CASE("divisor witnesses attain f(n + 4)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto w = theorem2_witness(n);
    INFO("n=" << n);
    CHECK(satisfies(w.solution, w.system));
    CHECK(w.solution.max() == w.claimed_bound);
    CHECK(w.solution[n] == w.claimed_bound);
    if (n >= 2) CHECK(w.claimed_bound == big(oracle::gmp_f(static_cast<unsigned>(n + 4))));
    if (n == 1) CHECK(w.claimed_bound == 36);
    const unsigned long e = 1ul << n;
    CHECK(w.solution[n + 2] == big(oracle::gmp_pow(2, e)));
  }
}

TEST_CASE("divisor witnesses n <= 2 are maximal among solver solutions") {
  for (std::size_t n : {1u, 2u}) {
    const auto w = theorem2_witness(n);
    const auto sols = enumerate_solutions(w.system, 300).solutions;
    BigInt best = 0;
    for (const auto& s : sols) {
      CHECK(s.max() <= w.claimed_bound);
      best = std::max(best, s.max());
    }
    CHECK(best == w.solution.max());
  }
}

TEST_CASE("addition counterexample k=3") {
  const auto w = counterexample_witness(CounterexampleKind::Addition, 3);
  CHECK(w.system.n() == 8);
  CHECK(w.solution[0] == 65540);
  CHECK(w.solution[3] == big(oracle::gmp_pow(65540, 8)));
  CHECK(w.solution.max() > big(oracle::gmp_pow(2, 128)));
  CHECK(satisfies(w.solution, w.system));
  CHECK(w.claimed_bound == big(oracle::gmp_pow(2, 128)));
}

TEST_CASE("unit counterexample k=4") {
  const auto w = counterexample_witness(CounterexampleKind::Unit, 4);
  CHECK(w.system.n() == 9);
  CHECK(w.solution[0] == 65538);
  CHECK(w.solution[4] == big(oracle::gmp_pow(65538, 16)));
  CHECK(w.solution.max() > big(oracle::gmp_pow(2, 256)));
  CHECK(satisfies(w.solution, w.system));
}

TEST_CASE("counterexample maximality against a divisor oracle") {
  // x1 - 4 divides 4^(2^k) = 2^(2^(k+1)); the largest choice is x1 = 4 + 2^(2^(k+1))
  for (std::size_t k = 3; k <= 5; ++k) {
    const auto w = counterexample_witness(CounterexampleKind::Addition, k);
    CHECK(w.solution[0] == 4 + big(oracle::gmp_pow(2, 1ul << (k + 1))));
    CHECK(w.solution.max() > w.claimed_bound);
  }
  for (std::size_t k = 4; k <= 6; ++k) {
    const auto w = counterexample_witness(CounterexampleKind::Unit, k);
    CHECK(w.solution[0] == 2 + big(oracle::gmp_pow(2, 1ul << k)));
    CHECK(w.solution.max() > w.claimed_bound);
  }
}

TEST_CASE("counterexample parameter checks") {
  CHECK_THROWS_AS(counterexample_witness(CounterexampleKind::Addition, 2), Error);
  CHECK_THROWS_AS(counterexample_witness(CounterexampleKind::Unit, 3), Error);
}

TEST_CASE("padding layout and size") {
  const EquationSystem psi(2, {RelationAtom::prod(1, 1, 2)});
  for (std::size_t n = 7; n <= 20; ++n) {
    const auto t = theorem6_padding(psi, n);
    CHECK(t.n() == n);
    const auto l = padding_layout(2, n);
    CHECK(l.s + l.padding + l.half + 2 == n);
  }
  CHECK_THROWS_AS(theorem6_padding(psi, 6), Error);
  CHECK_THROWS_AS(theorem6_padding(EquationSystem(2, {RelationAtom::unit(1)}, Stage::General), 10), Error);
}

TEST_CASE("padded systems force the counter values") {
  const EquationSystem psi(2, {RelationAtom::prod(1, 1, 2)});
  for (std::size_t n : {14u, 15u, 16u, 17u}) {
    INFO("n=" << n);
    const auto t = theorem6_padding(psi, n);
    const auto l = padding_layout(2, n);
    const auto sols = enumerate_solutions(t, 30).solutions;
    REQUIRE_FALSE(sols.empty());
    for (const auto& s : sols) {
      for (std::size_t i = 1; i <= l.half; ++i) CHECK(s[l.t(i) - 1] == i);
      CHECK(s[l.u() - 1] == 2 * (n / 2));
      CHECK(s[0] == n);
      CHECK(s[1] == n * n);
      CHECK(s[l.y() - 1] == n * n + 1);
    }
  }
}
