#pragma once

// Enumeration of positive solutions of an EquationSystem inside a box of
// free-variable values, with functional constraint propagation.
//
// A variable is free when propagation has not determined it at the moment it
// is chosen. Free variables are chosen in ascending index order and the cap
// bounds only their values; propagated values may be arbitrarily large.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "dbound/core.hpp"

namespace dbound {

class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::size_t n) : values_(n) {}

  std::size_t n() const { return values_.size(); }
  bool assigned(Index v) const { return values_.at(v - 1).has_value(); }
  const std::optional<BigInt>& value(Index v) const { return values_.at(v - 1); }
  void assign(Index v, BigInt value) {
    if (value < 1) throw Error("assigned values must be positive");
    values_.at(v - 1) = std::move(value);
  }
  bool complete() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
  }

  // Atoms with at least one unassigned participant.
  std::vector<RelationAtom> pending(const EquationSystem& sys) const {
    std::vector<RelationAtom> out;
    for (const auto& a : sys.atoms()) {
      const auto vars = a.variables();
      if (std::any_of(vars.begin(), vars.end(), [&](Index v) { return !assigned(v); })) out.push_back(a);
    }
    return out;
  }

  PosTuple to_tuple() const {
    std::vector<BigInt> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      if (!v) throw Error("assignment is incomplete");
      out.push_back(*v);
    }
    return PosTuple(std::move(out));
  }

  std::vector<std::optional<BigInt>>& raw() { return values_; }
  const std::vector<std::optional<BigInt>>& raw() const { return values_; }

 private:
  std::vector<std::optional<BigInt>> values_;
};

namespace detail {

class Propagator {
 public:
  using Values = std::vector<std::optional<BigInt>>;

  explicit Propagator(const EquationSystem& sys) : atoms_(sys.atoms().begin(), sys.atoms().end()), watch_(sys.n()) {
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      for (Index v : atoms_[a].variables()) watch_[v - 1].push_back(a);
    queued_.assign(atoms_.size(), false);
  }

  std::size_t n() const { return watch_.size(); }

  // Runs every atom to a fixpoint.
  bool propagate_all(Values& values, std::vector<Index>& trail) {
    for (std::size_t a = 0; a < atoms_.size(); ++a) enqueue(a);
    return drain(values, trail);
  }

  // Assigns v and propagates its consequences.
  bool assign(Values& values, std::vector<Index>& trail, Index v, const BigInt& value) {
    if (!set(values, trail, v, value)) {
      clear_queue();
      return false;
    }
    return drain(values, trail);
  }

 private:
  void enqueue(std::size_t a) {
    if (!queued_[a]) {
      queued_[a] = true;
      queue_.push_back(a);
    }
  }

  void clear_queue() {
    for (auto a : queue_) queued_[a] = false;
    queue_.clear();
  }

  bool set(Values& values, std::vector<Index>& trail, Index v, const BigInt& value) {
    if (value < 1) return false;
    auto& slot = values[v - 1];
    if (slot) return *slot == value;
    slot = value;
    trail.push_back(v);
    for (auto a : watch_[v - 1]) enqueue(a);
    return true;
  }

  bool drain(Values& values, std::vector<Index>& trail) {
    while (!queue_.empty()) {
      const auto a = queue_.back();
      queue_.pop_back();
      queued_[a] = false;
      if (!apply(atoms_[a], values, trail)) {
        clear_queue();
        return false;
      }
    }
    return true;
  }

  bool apply(const RelationAtom& atom, Values& values, std::vector<Index>& trail) {
    const auto& [kind, i, j, k] = atom;
    auto known = [&](Index v) { return values[v - 1].has_value(); };
    auto val = [&](Index v) -> const BigInt& { return *values[v - 1]; };
    switch (kind) {
      case AtomKind::Unit:
        return set(values, trail, k, 1);
      case AtomKind::Succ:
        if (i == k) return false;
        if (known(i)) return set(values, trail, k, val(i) + 1);
        if (known(k)) return val(k) > 1 && set(values, trail, i, val(k) - 1);
        return true;
      case AtomKind::Add:
        if (i == k || j == k) return false;  // forces a zero summand
        if (i == j) {
          if (known(i)) return set(values, trail, k, val(i) * 2);
          if (known(k)) {
            if (val(k) % 2 != 0) return false;
            return set(values, trail, i, val(k) / 2);
          }
          return true;
        }
        if (known(i) && known(j)) return set(values, trail, k, val(i) + val(j));
        if (known(k) && known(i)) return set(values, trail, j, val(k) - val(i));
        if (known(k) && known(j)) return set(values, trail, i, val(k) - val(j));
        return true;
      case AtomKind::Prod:
        if (i == j && j == k) return !known(i) || val(i) * val(i) == val(i);
        if (i == j) {
          if (known(i)) return set(values, trail, k, val(i) * val(i));
          if (known(k)) {
            auto r = exact_sqrt(val(k));
            return r && set(values, trail, i, *r);
          }
          return true;
        }
        if (known(i) && known(j)) return set(values, trail, k, val(i) * val(j));
        if (known(k) && known(i)) {
          if (val(k) % val(i) != 0) return false;
          return set(values, trail, j, val(k) / val(i));
        }
        if (known(k) && known(j)) {
          if (val(k) % val(j) != 0) return false;
          return set(values, trail, i, val(k) / val(j));
        }
        return true;
    }
    return true;
  }

  std::vector<RelationAtom> atoms_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<std::size_t> queue_;
  std::vector<bool> queued_;
};

}  // namespace detail

// Closes a partial assignment under the propagation rules. Returns nullopt on
// contradiction.
inline std::optional<PartialAssignment> propagate(const EquationSystem& sys, const PartialAssignment& partial) {
  if (partial.n() != sys.n()) throw Error("partial assignment arity does not match system arity");
  detail::Propagator prop(sys);
  PartialAssignment out = partial;
  std::vector<Index> trail;
  if (!prop.propagate_all(out.raw(), trail)) return std::nullopt;
  return out;
}

struct SolveOptions {
  std::uint64_t cap = 1;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  // Optional per-variable caps (0 means "use cap").
  std::vector<std::uint64_t> var_caps;
  // Values fixed before the search starts.
  std::vector<std::pair<Index, BigInt>> seed;
  // Free values are tried from sweep_start up to the cap, then from 1 to
  // sweep_start - 1.
  std::uint64_t sweep_start = 1;
  // Branching order over variables; unlisted variables follow in ascending order.
  std::vector<Index> branch_order;
};

struct SolveResult {
  std::vector<PosTuple> solutions;
  bool truncated = false;
  std::uint64_t nodes = 0;
};

namespace detail {

class Search {
 public:
  using Visitor = std::function<bool(const std::vector<std::optional<BigInt>>&)>;  // false stops

  Search(const EquationSystem& sys, const SolveOptions& opt) : prop_(sys), opt_(opt), values_(sys.n()) {
    if (opt.cap == 0) throw Error("cap must be positive");
  }

  // Root propagation; false if the system has no solution at all.
  bool init() {
    for (const auto& [v, x] : opt_.seed) {
      if (v == 0 || v > values_.size()) throw Error("seed variable out of range");
      if (!prop_.assign(values_, trail_, v, x)) return false;
    }
    return prop_.propagate_all(values_, trail_);
  }

  std::optional<Index> next_free() const {
    for (auto v : opt_.branch_order)
      if (v >= 1 && v <= values_.size() && !values_[v - 1]) return v;
    for (std::size_t v = 0; v < values_.size(); ++v)
      if (!values_[v]) return static_cast<Index>(v + 1);
    return std::nullopt;
  }

  std::uint64_t cap_of(Index v) const {
    if (v - 1 < opt_.var_caps.size() && opt_.var_caps[v - 1] != 0) return opt_.var_caps[v - 1];
    return opt_.cap;
  }

  // Value list of a free variable in sweep order.
  std::vector<std::uint64_t> sweep(Index v) const {
    const std::uint64_t cap = cap_of(v);
    const std::uint64_t start = std::clamp<std::uint64_t>(opt_.sweep_start, 1, cap + 1);
    std::vector<std::uint64_t> out;
    out.reserve(cap);
    for (std::uint64_t x = start; x <= cap; ++x) out.push_back(x);
    for (std::uint64_t x = 1; x < start && x <= cap; ++x) out.push_back(x);
    return out;
  }

  // Depth-first enumeration; `root_values` restricts the first free variable.
  bool run(const Visitor& visit, const std::vector<std::uint64_t>* root_values = nullptr) {
    ++nodes_;
    auto v = next_free();
    if (!v) return visit(values_);
    const auto values = root_values ? *root_values : sweep(*v);
    for (auto x : values) {
      const auto mark = trail_.size();
      if (prop_.assign(values_, trail_, *v, BigInt(x))) {
        if (!run(visit)) {
          undo(mark);
          return false;
        }
      }
      undo(mark);
    }
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::optional<BigInt>>& values() const { return values_; }

 private:
  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back() - 1].reset();
      trail_.pop_back();
    }
  }

  Propagator prop_;
  const SolveOptions& opt_;
  std::vector<std::optional<BigInt>> values_;
  std::vector<Index> trail_;
  std::uint64_t nodes_ = 0;
};

inline PosTuple to_tuple(const std::vector<std::optional<BigInt>>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(*x);
  return PosTuple(std::move(out));
}

}  // namespace detail

inline SolveResult enumerate_solutions(const EquationSystem& sys, const SolveOptions& opt) {
  SolveResult result;
  detail::Search root(sys, opt);
  if (!root.init()) return result;
  const std::size_t want = opt.limit ? *opt.limit + 1 : std::numeric_limits<std::size_t>::max();

  const auto first = root.next_free();
  if (!first) {
    result.solutions.push_back(detail::to_tuple(root.values()));
  } else {
    const auto all = root.sweep(*first);
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(all.size())));
    // contiguous shards of the first free variable keep lexicographic order
    std::vector<std::vector<std::uint64_t>> shards(jobs);
    for (std::size_t s = 0; s < jobs; ++s) {
      const auto lo = all.size() * s / jobs, hi = all.size() * (s + 1) / jobs;
      shards[s].assign(all.begin() + static_cast<std::ptrdiff_t>(lo), all.begin() + static_cast<std::ptrdiff_t>(hi));
    }
    auto work = [&](const std::vector<std::uint64_t>& shard) {
      SolveResult part;
      detail::Search s(sys, opt);
      s.init();
      s.run(
          [&](const auto& values) {
            part.solutions.push_back(detail::to_tuple(values));
            return part.solutions.size() < want;
          },
          &shard);
      part.nodes = s.nodes();
      return part;
    };
    std::vector<SolveResult> parts(jobs);
    if (jobs == 1) {
      parts[0] = work(shards[0]);
    } else {
      std::vector<std::future<SolveResult>> futs;
      for (const auto& shard : shards) futs.push_back(std::async(std::launch::async, work, std::cref(shard)));
      for (std::size_t s = 0; s < jobs; ++s) parts[s] = futs[s].get();
    }
    for (auto& p : parts) {
      result.nodes += p.nodes;
      for (auto& t : p.solutions) result.solutions.push_back(std::move(t));
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  if (opt.limit && result.solutions.size() > *opt.limit) {
    result.solutions.resize(*opt.limit);
    result.truncated = true;
  }
  return result;
}

inline SolveResult enumerate_solutions(const EquationSystem& sys, std::uint64_t cap,
                                       std::optional<std::size_t> limit = std::nullopt, unsigned jobs = 1) {
  SolveOptions opt;
  opt.cap = cap;
  opt.limit = limit;
  opt.jobs = jobs;
  return enumerate_solutions(sys, opt);
}

// First solution in search order accepted by `accept`, if any.
inline std::optional<PosTuple> find_first_solution(const EquationSystem& sys, const SolveOptions& opt,
                                                   const std::function<bool(const PosTuple&)>& accept,
                                                   std::uint64_t* nodes = nullptr) {
  detail::Search s(sys, opt);
  std::optional<PosTuple> hit;
  if (s.init()) {
    s.run([&](const auto& values) {
      PosTuple t = detail::to_tuple(values);
      if (!accept(t)) return true;
      hit = std::move(t);
      return false;
    });
  }
  if (nodes) *nodes = s.nodes();
  return hit;
}

// x^(2^n) = 2^(2^n) + (x-2) * sum_{k<2^n} 2^(2^n-1-k) x^k, evaluated exactly.
inline bool verify_identity_theorem2(const BigInt& x, unsigned n) {
  if (n > 6) throw Error("identity check is limited to n <= 6");
  const std::uint64_t e = std::uint64_t{1} << n;
  BigInt sum = 0;
  BigInt xk = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    sum += pow2(e - 1 - k) * xk;
    xk *= x;
  }
  return ipow(x, e) == pow2(e) + (x - 2) * sum;
}

}  // namespace dbound
