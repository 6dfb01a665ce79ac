#pragma once

// Extensions: given x, find y with max(y) > c preserving every relation of x.

#include <numeric>
#include <optional>

#include "dbound/solver.hpp"
#include "dbound/verifier/families.hpp"

namespace dbound {

enum class ExtensionRoute { None, Catalog, Search };

inline std::string to_string(ExtensionRoute r) {
  switch (r) {
    case ExtensionRoute::Catalog: return "catalog";
    case ExtensionRoute::Search: return "search";
    case ExtensionRoute::None: break;
  }
  return "none";
}

struct ExtensionResult {
  std::optional<PosTuple> y;
  ExtensionRoute route = ExtensionRoute::None;
  std::uint64_t nodes = 0;
};

inline std::uint64_t default_extension_cap(std::uint64_t c) { return 2 * c + 2; }

namespace detail {

inline std::optional<PosTuple> catalog_extension(const PosTuple& x, const BigInt& c, const EquationSystem& sig) {
  if (x.size() != 4) return std::nullopt;
  std::array<std::uint64_t, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!fits_u64(x[i]) || x[i] >= (BigInt(1) << 32)) return std::nullopt;
    v[i] = static_cast<std::uint64_t>(x[i]);
  }
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::array<std::uint64_t, 4> sorted{};
  for (std::size_t i = 0; i < 4; ++i) sorted[i] = v[order[i]];
  for (std::size_t i = 0; i + 1 < 4; ++i)
    if (sorted[i] == sorted[i + 1]) return std::nullopt;
  const SignatureMask m = small_signature(sorted);

  for (const auto& f : family_catalog()) {
    if (!dominated(m, f.instance_mask())) continue;
    // max(F(t)) >= t, so some t <= c + 1 clears c
    for (BigInt t = f.t_min; t <= c + 1 + f.t_min; ++t) {
      const auto e = f.at(t);
      if (std::max({e[0], e[1], e[2], e[3]}) <= c) continue;
      std::vector<BigInt> y(4);
      for (std::size_t i = 0; i < 4; ++i) y[order[i]] = e[i];
      if (std::any_of(y.begin(), y.end(), [](const BigInt& a) { return a < 1; })) break;
      PosTuple cand(std::move(y));
      if (satisfies(cand, sig)) return cand;
      break;
    }
  }
  return std::nullopt;
}

// Variables that are not the result of any atom come first, so values are
// pushed forward through successors and products.
inline std::vector<Index> source_first_order(const EquationSystem& sys) {
  std::vector<bool> result(sys.n() + 1, false);
  for (const auto& a : sys.atoms()) result[a.k] = true;
  std::vector<Index> order;
  for (Index v = 1; v <= sys.n(); ++v)
    if (!result[v]) order.push_back(v);
  for (Index v = 1; v <= sys.n(); ++v)
    if (result[v]) order.push_back(v);
  return order;
}

}  // namespace detail

// Catalog lookup first, then the propagation search over derive_signature(x)
// with free values swept from c+1 up to cap and then from 1.
inline ExtensionResult search_extension(const PosTuple& x, const BigInt& c, std::uint64_t cap) {
  if (cap < c + 2) throw Error("extension cap must be at least c + 2");
  ExtensionResult out;
  const EquationSystem sig = derive_signature(x);
  if (auto y = detail::catalog_extension(x, c, sig)) {
    out.y = std::move(y);
    out.route = ExtensionRoute::Catalog;
    return out;
  }
  SolveOptions opt;
  opt.cap = cap;
  opt.sweep_start = static_cast<std::uint64_t>(c) + 1;
  opt.branch_order = detail::source_first_order(sig);
  out.y = find_first_solution(sig, opt, [&c](const PosTuple& y) { return y.max() > c; }, &out.nodes);
  if (out.y) out.route = ExtensionRoute::Search;
  return out;
}

inline std::optional<PosTuple> find_extension(const PosTuple& x, const BigInt& c, std::uint64_t cap) {
  return search_extension(x, c, cap).y;
}

}  // namespace dbound
