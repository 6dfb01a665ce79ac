#pragma once

// Canonical quadruples above 16 and the dominance check that every
// increasing quadruple's signature sits inside one of them.

#include <algorithm>
#include <array>
#include <future>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dbound/verifier/families.hpp"

namespace dbound {

using Quadruple = std::array<std::uint64_t, 4>;

struct CanonicalQuadruple {
  Quadruple q;
  SignatureMask signature;
  auto operator<=>(const CanonicalQuadruple&) const = default;
};

// Candidate fourth entries {1, a+1, a*a, a*b} over a,b,c in [1,limit]; the
// first quadruple of each new signature is kept, then every quadruple whose
// signature is a strict subset of another kept one is dropped.
inline std::vector<CanonicalQuadruple> canonical_quadruples(std::uint64_t limit = 256) {
  if (limit < 17) throw Error("canonical_quadruples needs limit >= 17");
  if (limit > 65535) throw Error("canonical_quadruples limit too large");
  std::vector<CanonicalQuadruple> kept;
  std::unordered_set<SignatureMask> seen;
  SignatureMask last = ~SignatureMask{0};
  for (std::uint64_t a = 1; a <= limit; ++a)
    for (std::uint64_t b = 1; b <= limit; ++b)
      for (std::uint64_t c = 1; c <= limit; ++c) {
        const std::array<std::uint64_t, 4> ys{1, a + 1, a * a, a * b};
        for (auto y : ys) {
          if (a == b || a == c || b == c || y == a || y == b || y == c) continue;
          const auto v = std::max({a, b, c, y});
          if (v <= 16 || v > limit) continue;
          Quadruple x{a, b, c, y};
          std::sort(x.begin(), x.end());
          const auto m = increasing_quad_signature(x[0], x[1], x[2], x[3]);
          if (m == last) continue;
          last = m;
          if (seen.insert(m).second) kept.push_back({x, m});
        }
      }
  std::vector<CanonicalQuadruple> out;
  for (const auto& w : kept) {
    const bool strict_subset = std::any_of(kept.begin(), kept.end(), [&](const CanonicalQuadruple& z) {
      return z.signature != w.signature && dominated(w.signature, z.signature);
    });
    if (!strict_subset) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CoverageReport {
  std::uint64_t limit = 0;
  std::uint64_t scanned = 0;
  std::size_t canonical_count = 0;
  std::size_t distinct_signatures = 0;
  std::vector<Quadruple> undominated;
  std::vector<std::string> family_failures;
  bool catalog_matches = true;  // catalog instances equal the canonical set (limit 256 only)
  bool ok() const { return undominated.empty() && family_failures.empty() && catalog_matches; }
};

inline constexpr std::uint64_t kFamilyGrowthSteps = 20;

// Instance check plus growth over kFamilyGrowthSteps consecutive parameters.
inline std::optional<std::string> check_family(const ParametricFamily& f) {
  const auto at_instance = f.at(f.t_instance);
  for (int i = 0; i < 4; ++i)
    if (at_instance[i] != f.instance[i]) return f.label() + ": instance mismatch";
  const EquationSystem sig = mask_to_system(f.instance_mask(), 4);
  BigInt prev_max = 0;
  for (std::uint64_t t = f.t_min; t < f.t_min + kFamilyGrowthSteps; ++t) {
    const auto v = f.at(t);
    const BigInt mx = std::max({v[0], v[1], v[2], v[3]});
    if (std::any_of(v.begin(), v.end(), [](const BigInt& e) { return e < 1; }))
      return f.label() + ": nonpositive entry at t=" + std::to_string(t);
    if (!sig.satisfied_by(v)) return f.label() + ": signature fails at t=" + std::to_string(t);
    if (mx <= prev_max) return f.label() + ": max does not grow at t=" + std::to_string(t);
    prev_max = mx;
  }
  return std::nullopt;
}

inline CoverageReport verify_coverage(std::uint64_t limit, unsigned jobs = 1) {
  if (limit > 256) throw Error("verify_coverage needs limit <= 256");
  CoverageReport report;
  report.limit = limit;
  std::vector<SignatureMask> canon;
  if (limit >= 17) {
    for (const auto& q : canonical_quadruples(limit)) canon.push_back(q.signature);
  }
  report.canonical_count = canon.size();

  struct Part {
    std::uint64_t scanned = 0;
    std::unordered_map<SignatureMask, bool> memo;
    std::vector<Quadruple> undominated;
  };
  auto covered = [&canon](SignatureMask m) {
    return std::any_of(canon.begin(), canon.end(), [m](SignatureMask c) { return dominated(m, c); });
  };
  constexpr SignatureMask kUnitLeadBits = (SignatureMask{1} << prod_bit(0, 0, 0)) |
                                          (SignatureMask{1} << prod_bit(0, 1, 1)) |
                                          (SignatureMask{1} << prod_bit(0, 2, 2)) |
                                          (SignatureMask{1} << prod_bit(0, 3, 3));
  auto work = [&](unsigned shard, unsigned shards) {
    Part p;
    SignatureMask last = ~SignatureMask{0};
    bool last_ok = false;
    for (std::uint64_t d = 17 + shard; d <= limit; d += shards)
      for (std::uint64_t c = 3; c < d; ++c)
        for (std::uint64_t b = 2; b < c; ++b) {
          SignatureMask base = 0;
          if (b + 1 == c) base |= SignatureMask{1} << succ_bit(1, 2);
          if (c + 1 == d) base |= SignatureMask{1} << succ_bit(2, 3);
          if (b * b == c) base |= SignatureMask{1} << prod_bit(1, 1, 2);
          if (b * b == d) base |= SignatureMask{1} << prod_bit(1, 1, 3);
          if (b * c == d) base |= SignatureMask{1} << prod_bit(1, 2, 3);
          if (c * c == d) base |= SignatureMask{1} << prod_bit(2, 2, 3);
          for (std::uint64_t a = 1; a < b; ++a) {
            ++p.scanned;
            SignatureMask m = base;
            if (a == 1) m |= kUnitLeadBits;
            if (a + 1 == b) m |= SignatureMask{1} << succ_bit(0, 1);
            const std::uint64_t aa = a * a, ab = a * b;
            if (aa == b) m |= SignatureMask{1} << prod_bit(0, 0, 1);
            if (aa == c) m |= SignatureMask{1} << prod_bit(0, 0, 2);
            if (aa == d) m |= SignatureMask{1} << prod_bit(0, 0, 3);
            if (ab == c) m |= SignatureMask{1} << prod_bit(0, 1, 2);
            if (ab == d) m |= SignatureMask{1} << prod_bit(0, 1, 3);
            if (a * c == d) m |= SignatureMask{1} << prod_bit(0, 2, 3);
            if (m == last) {
              if (!last_ok) p.undominated.push_back({a, b, c, d});
              continue;
            }
            auto it = p.memo.find(m);
            if (it == p.memo.end()) it = p.memo.emplace(m, covered(m)).first;
            last = m;
            last_ok = it->second;
            if (!last_ok) p.undominated.push_back({a, b, c, d});
          }
        }
    return p;
  };
  jobs = std::max(1u, jobs);
  std::vector<Part> parts;
  if (jobs == 1) {
    parts.push_back(work(0, 1));
  } else {
    std::vector<std::future<Part>> futs;
    for (unsigned s = 0; s < jobs; ++s) futs.push_back(std::async(std::launch::async, work, s, jobs));
    for (auto& f : futs) parts.push_back(f.get());
  }
  std::unordered_set<SignatureMask> masks;
  for (auto& p : parts) {
    report.scanned += p.scanned;
    for (const auto& [m, ok] : p.memo) masks.insert(m);
    report.undominated.insert(report.undominated.end(), p.undominated.begin(), p.undominated.end());
  }
  report.distinct_signatures = masks.size();
  std::sort(report.undominated.begin(), report.undominated.end());

  const auto& catalog = family_catalog();
  for (const auto& f : catalog)
    if (auto failure = check_family(f)) report.family_failures.push_back(*failure);
  if (limit == 256) {
    std::vector<Quadruple> from_catalog, from_program;
    for (const auto& f : catalog) from_catalog.push_back(f.instance);
    for (const auto& q : canonical_quadruples(256)) from_program.push_back(q.q);
    std::sort(from_catalog.begin(), from_catalog.end());
    report.catalog_matches = from_catalog == from_program;
  }
  return report;
}

}  // namespace dbound
