#pragma once

// Checking Phi(c): every tuple x with f(n) < max(x) <= c must extend to some
// y with max(y) > c. Tuples are grouped by signature and each distinct
// signature is searched once.

#include <chrono>
#include <cstring>
#include <future>
#include <map>
#include <set>
#include <unordered_set>

#include "dbound/verifier/extension.hpp"
#include "dbound/verifier/signature_mask.hpp"

namespace dbound {

enum class EnumerationMode { Exhaustive, Nondecreasing, Increasing };

inline std::string to_string(EnumerationMode m) {
  switch (m) {
    case EnumerationMode::Exhaustive: return "exhaustive";
    case EnumerationMode::Nondecreasing: return "nondecreasing";
    case EnumerationMode::Increasing: return "increasing";
  }
  return "?";
}

inline EnumerationMode parse_mode(const std::string& s) {
  if (s == "exhaustive") return EnumerationMode::Exhaustive;
  if (s == "nondecreasing") return EnumerationMode::Nondecreasing;
  if (s == "increasing") return EnumerationMode::Increasing;
  throw Error("unknown mode '" + s + "'");
}

enum class PhiStatus { Confirmed, Refuted, Inconclusive };

inline std::string to_string(PhiStatus s) {
  switch (s) {
    case PhiStatus::Confirmed: return "confirmed";
    case PhiStatus::Refuted: return "refuted";
    case PhiStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ArityRecord {
  std::size_t n = 0;
  BoundValue f;
  std::uint64_t tuples_examined = 0;
  std::uint64_t extensions_found = 0;
  std::uint64_t distinct_signatures = 0;
  std::uint64_t catalog_extensions = 0;  // distinct signatures settled by the catalog
  std::uint64_t search_extensions = 0;   // distinct signatures settled by search
  std::uint64_t search_nodes = 0;
  // Packed signatures of the sorted tuples (arity <= 4 only).
  std::vector<SignatureMask> canonical_signatures;
};

struct VerificationReport {
  std::uint64_t c = 0;
  EnumerationMode mode = EnumerationMode::Exhaustive;
  std::uint64_t cap = 0;
  std::vector<ArityRecord> arities;
  PhiStatus status = PhiStatus::Confirmed;
  std::optional<PosTuple> witness;  // the failing tuple when not confirmed
  double wall_seconds = 0;
};

struct PhiOptions {
  EnumerationMode mode = EnumerationMode::Exhaustive;
  std::optional<std::size_t> n_max;
  std::optional<std::uint64_t> cap;  // default 2c+2
  unsigned jobs = 1;
};

inline constexpr std::uint64_t kMaxPhiBound = std::uint64_t{1} << 31;
inline constexpr std::size_t kMaxRefutableArity = 4;

namespace detail {

// Calls fn(tuple) for every tuple of arity n over [1,c] with leading entry
// `lead`, allowed by the mode, whose max exceeds `floor`.
template <class Fn>
void for_each_tuple(std::size_t n, std::uint64_t c, std::uint64_t floor, EnumerationMode mode, std::uint64_t lead,
                    Fn&& fn) {
  std::vector<std::uint64_t> x(n, 1);
  x[0] = lead;
  auto min_at = [&](std::size_t i) -> std::uint64_t {
    switch (mode) {
      case EnumerationMode::Exhaustive: return 1;
      case EnumerationMode::Nondecreasing: return x[i - 1];
      case EnumerationMode::Increasing: return x[i - 1] + 1;
    }
    return 1;
  };
  if (n == 1) {
    if (lead > floor) fn(std::span<const std::uint64_t>(x));
    return;
  }
  // odometer over positions 1..n-1
  std::size_t i = 1;
  x[1] = min_at(1);
  while (true) {
    if (x[i] > c) {
      if (i == 1) return;
      --i;
      ++x[i];
      continue;
    }
    if (i + 1 < n) {
      ++i;
      x[i] = min_at(i);
      continue;
    }
    const bool ordered = mode != EnumerationMode::Exhaustive;
    const std::uint64_t mx = ordered ? x[n - 1] : *std::max_element(x.begin(), x.end());
    if (mx > floor) fn(std::span<const std::uint64_t>(x));
    ++x[i];
  }
}

template <class Key>
struct SignatureGroup {
  std::vector<std::uint64_t> representative;  // lexicographically first tuple
  std::uint64_t count = 0;
};

inline std::string generic_key(std::span<const std::uint64_t> x) {
  std::vector<BigInt> v(x.begin(), x.end());
  return to_text(derive_signature(PosTuple(std::move(v))));
}

}  // namespace detail

inline VerificationReport verify_phi(std::uint64_t c, const PhiOptions& opt = {}) {
  if (c < 2) throw Error("verify_phi needs c >= 2");
  if (c > kMaxPhiBound) throw Error("verify_phi bound too large");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.c = c;
  report.mode = opt.mode;
  report.cap = opt.cap.value_or(default_extension_cap(c));
  if (report.cap < c + 2) throw Error("cap must be at least c + 2");
  const unsigned jobs = std::max(1u, opt.jobs);

  for (std::size_t n = 1; bound_below(n, c) && (!opt.n_max || n <= *opt.n_max); ++n) {
    ArityRecord rec;
    rec.n = n;
    rec.f = BoundValue::of(n);
    const auto floor = static_cast<std::uint64_t>(*rec.f.value);  // f(n) < c fits

    using Key = std::string;
    using Groups = std::map<Key, detail::SignatureGroup<Key>>;
    const bool packed = n <= kMaxMaskArity;
    auto key_of = [&](std::span<const std::uint64_t> x) -> Key {
      if (!packed) return detail::generic_key(x);
      const SignatureMask m = (opt.mode == EnumerationMode::Increasing && n == 4)
                                  ? increasing_quad_signature(x[0], x[1], x[2], x[3])
                                  : small_signature(x);
      return Key(reinterpret_cast<const char*>(&m), sizeof m);
    };

    struct Part {
      Groups groups;
      std::vector<SignatureMask> canonical;
    };
    auto work = [&](unsigned shard, unsigned shards) {
      Part p;
      std::unordered_set<SignatureMask> canon;
      Key last_key;
      detail::SignatureGroup<Key>* last_group = nullptr;
      std::vector<std::uint64_t> sorted(n);
      for (std::uint64_t lead = 1 + shard; lead <= c; lead += shards)
        detail::for_each_tuple(n, c, floor, opt.mode, lead, [&](std::span<const std::uint64_t> x) {
          Key k = key_of(x);
          if (!last_group || k != last_key) {
            auto [it, inserted] = p.groups.try_emplace(k);
            if (inserted) it->second.representative.assign(x.begin(), x.end());
            last_group = &it->second;
            last_key = std::move(k);
            if (packed && opt.mode != EnumerationMode::Exhaustive) {
              SignatureMask m;
              std::memcpy(&m, last_key.data(), sizeof m);
              canon.insert(m);
            }
          }
          ++last_group->count;
          if (packed && opt.mode == EnumerationMode::Exhaustive) {
            sorted.assign(x.begin(), x.end());
            std::sort(sorted.begin(), sorted.end());
            canon.insert(small_signature(sorted));
          }
        });
      p.canonical.assign(canon.begin(), canon.end());
      return p;
    };

    // leading entries dealt round-robin; merging keeps the smallest representative
    const unsigned shards = static_cast<unsigned>(std::min<std::uint64_t>(jobs, c));
    std::vector<Part> parts(shards);
    if (shards == 1) {
      parts[0] = work(0, 1);
    } else {
      std::vector<std::future<Part>> futs;
      for (unsigned s = 0; s < shards; ++s) futs.push_back(std::async(std::launch::async, work, s, shards));
      for (unsigned s = 0; s < shards; ++s) parts[s] = futs[s].get();
    }
    Groups groups;
    std::set<SignatureMask> canonical;
    for (auto& p : parts) {
      for (auto& [k, g] : p.groups) {
        auto [it, inserted] = groups.try_emplace(k, g);
        if (inserted) continue;
        it->second.count += g.count;
        if (g.representative < it->second.representative) it->second.representative = g.representative;
      }
      canonical.insert(p.canonical.begin(), p.canonical.end());
    }
    rec.canonical_signatures.assign(canonical.begin(), canonical.end());
    rec.distinct_signatures = groups.size();

    // one extension search per distinct signature
    std::vector<const detail::SignatureGroup<Key>*> todo;
    for (const auto& [k, g] : groups) todo.push_back(&g);
    std::vector<ExtensionResult> results(todo.size());
    auto solve_range = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        std::vector<BigInt> x(todo[i]->representative.begin(), todo[i]->representative.end());
        results[i] = search_extension(PosTuple(std::move(x)), BigInt(c), report.cap);
      }
    };
    {
      const unsigned w = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, todo.size())));
      std::vector<std::future<void>> futs;
      for (unsigned s = 0; s < w; ++s) {
        const auto lo = todo.size() * s / w, hi = todo.size() * (s + 1) / w;
        futs.push_back(std::async(w == 1 ? std::launch::deferred : std::launch::async, solve_range, lo, hi));
      }
      for (auto& f : futs) f.get();
    }

    std::optional<std::vector<std::uint64_t>> failing;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      rec.tuples_examined += todo[i]->count;
      rec.search_nodes += results[i].nodes;
      if (results[i].route == ExtensionRoute::Catalog) ++rec.catalog_extensions;
      if (results[i].route == ExtensionRoute::Search) ++rec.search_extensions;
      if (results[i].y) {
        rec.extensions_found += todo[i]->count;
      } else if (!failing || todo[i]->representative < *failing) {
        failing = todo[i]->representative;
      }
    }
    report.arities.push_back(std::move(rec));
    if (failing) {
      report.witness = PosTuple(std::vector<BigInt>(failing->begin(), failing->end()));
      report.status = n <= kMaxRefutableArity ? PhiStatus::Refuted : PhiStatus::Inconclusive;
      break;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace dbound
