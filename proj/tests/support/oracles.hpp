#pragma once

// Independent reference computations and random generators for the tests.
// Nothing here calls into the library's solver, signature or bound code.

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <cstring>
#include <string>
#include <vector>

#include "dbound/core.hpp"

namespace oracle {

// f(n) with GMP, straight from the three-branch definition.
inline std::string gmp_f(unsigned n) {
  mpz_t r, base;
  mpz_init(r);
  mpz_init(base);
  if (n == 1) {
    mpz_set_ui(r, 1);
  } else if (n <= 5) {
    mpz_ui_pow_ui(r, 2, 1ul << (n - 2));
  } else {
    const unsigned long e = 1ul << (n - 4);
    mpz_ui_pow_ui(base, 2, e);
    mpz_add_ui(base, base, 2);
    mpz_pow_ui(r, base, e);
  }
  char* s = mpz_get_str(nullptr, 10, r);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
  mpz_clear(r);
  mpz_clear(base);
  return out;
}

// base^e in decimal, via GMP.
inline std::string gmp_pow(unsigned long base, unsigned long e) {
  mpz_t r;
  mpz_init(r);
  mpz_ui_pow_ui(r, base, e);
  char* s = mpz_get_str(nullptr, 10, r);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::strlen(s) + 1);
  mpz_clear(r);
  return out;
}

// An atom in plain machine integers: kind 0 unit, 1 succ, 2 add, 3 prod.
struct RawAtom {
  int kind, i, j, k;
};

inline bool raw_holds(const RawAtom& a, const std::vector<std::int64_t>& x) {
  switch (a.kind) {
    case 0: return x[a.k - 1] == 1;
    case 1: return x[a.i - 1] + 1 == x[a.k - 1];
    case 2: return x[a.i - 1] + x[a.j - 1] == x[a.k - 1];
    default: return x[a.i - 1] * x[a.j - 1] == x[a.k - 1];
  }
}

inline std::vector<RawAtom> raw_atoms(const dbound::EquationSystem& s) {
  std::vector<RawAtom> out;
  for (const auto& a : s.atoms())
    out.push_back({static_cast<int>(a.kind), static_cast<int>(a.i), static_cast<int>(a.j), static_cast<int>(a.k)});
  return out;
}

// Every tuple of [1,box]^n satisfying all atoms, in lexicographic order.
inline std::vector<std::vector<std::int64_t>> box_solutions(std::size_t n, const std::vector<RawAtom>& atoms,
                                                            std::int64_t box) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, 1);
  for (;;) {
    bool ok = true;
    for (const auto& a : atoms) ok = ok && raw_holds(a, x);
    if (ok) out.push_back(x);
    std::size_t p = n;
    while (p > 0 && x[p - 1] == box) x[--p] = 1;
    if (p == 0) return out;
    ++x[p - 1];
  }
}

// Signature of a small tuple by the definition, as a set of raw atoms.
inline std::set<std::array<int, 4>> raw_signature(const std::vector<std::int64_t>& a) {
  std::set<std::array<int, 4>> out;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i] + 1 == a[k]) out.insert({1, i + 1, 0, k + 1});
      for (int j = i; j < n; ++j)
        if (a[i] * a[j] == a[k]) out.insert({3, i + 1, j + 1, k + 1});
    }
  return out;
}

inline std::vector<dbound::BigInt> big(const std::vector<std::int64_t>& v) {
  return std::vector<dbound::BigInt>(v.begin(), v.end());
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Random conjecture-form (or general, when `general`) system.
inline dbound::EquationSystem random_system(Rng& rng, std::size_t n, std::size_t atoms, bool general = false) {
  using dbound::RelationAtom;
  dbound::EquationSystem s(n, general ? dbound::Stage::General : dbound::Stage::ConjectureForm);
  auto var = [&] { return static_cast<dbound::Index>(uniform(rng, 1, static_cast<std::int64_t>(n))); };
  for (std::size_t a = 0; a < atoms; ++a) {
    const int kind = general ? static_cast<int>(uniform(rng, 0, 3)) : (uniform(rng, 0, 1) ? 3 : 1);
    switch (kind) {
      case 0: s.insert(RelationAtom::unit(var())); break;
      case 1: s.insert(RelationAtom::succ(var(), var())); break;
      case 2: s.insert(RelationAtom::add(var(), var(), var())); break;
      default: s.insert(RelationAtom::prod(var(), var(), var())); break;
    }
  }
  return s;
}

inline std::vector<std::int64_t> random_tuple(Rng& rng, std::size_t n, std::int64_t hi) {
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = uniform(rng, 1, hi);
  return v;
}

// Random tuple biased towards related entries (successors, squares, products).
inline std::vector<std::int64_t> related_tuple(Rng& rng, std::size_t n, std::int64_t hi) {
  std::vector<std::int64_t> v{uniform(rng, 1, 6)};
  while (v.size() < n) {
    const auto a = v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
    const auto b = v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
    std::int64_t next = 0;
    switch (uniform(rng, 0, 3)) {
      case 0: next = a + 1; break;
      case 1: next = a * b; break;
      case 2: next = a > 1 ? a - 1 : a + 1; break;
      default: next = uniform(rng, 1, hi); break;
    }
    if (next > hi) next = uniform(rng, 1, hi);
    v.push_back(next);
  }
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace oracle
