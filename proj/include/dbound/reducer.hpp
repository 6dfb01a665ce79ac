#pragma once

// Lowering of polynomial equations D = 0 to systems over E_n, then to systems
// built only from x_i + 1 = x_k and x_i * x_j = x_k.
//
// Pass 1 (skolem_reduce) builds a computation graph of D: a unit variable,
// constants by doubling chains over the binary digits, powers by repeated
// squaring, monomials by products, and the positive and negative parts of D
// accumulated by addition chains. The two accumulators are tied by
// P * 1 = N. Every introduced variable is a function of x_1..x_p, so each
// solution of D = 0 extends uniquely.
//
// Pass 2 (eliminate_units) replaces x = 1 by x * x = x.
// Pass 3 (eliminate_additions) replaces each x + y = z by the ten-atom gadget
// built on  x + y = z  <=>  S(zx) * S(zy) = S(z^2 * S(xy)).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dbound/core.hpp"
#include "dbound/polynomial.hpp"

namespace dbound {

struct PassOutput {
  std::string name;
  EquationSystem system;
};

struct ReductionTrace {
  Polynomial input;
  std::vector<PassOutput> passes;
  // introduced variable -> subterm it denotes
  std::map<Index, std::string> provenance;

  const EquationSystem& final_system() const { return passes.back().system; }
  std::size_t final_n() const { return passes.back().system.n(); }
};

namespace detail {

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t p) : n_(p), sys_(p + 1, Stage::General) {
    for (std::size_t i = 1; i <= p; ++i) power_cache_[{static_cast<Index>(i), 1}] = static_cast<Index>(i);
  }

  Index one() {
    if (!one_) {
      one_ = fresh("1");
      atom(RelationAtom::unit(*one_));
      constant_cache_[1] = *one_;
    }
    return *one_;
  }

  Index constant(const BigInt& c) {
    if (auto it = constant_cache_.find(c); it != constant_cache_.end()) return it->second;
    const Index u = one();
    // binary digits from the most significant one
    const auto top = boost::multiprecision::msb(c);
    BigInt value = 1;
    Index v = u;
    for (auto bit = static_cast<long>(top) - 1; bit >= 0; --bit) {
      value *= 2;
      v = cached_constant(value, [&](Index out) { atom(RelationAtom::add(v, v, out)); });
      if (boost::multiprecision::bit_test(c, static_cast<unsigned>(bit))) {
        value += 1;
        const Index prev = v;
        v = cached_constant(value, [&](Index out) { atom(RelationAtom::add(prev, u, out)); });
      }
    }
    return v;
  }

  // x_i^e by squaring and multiplying.
  Index power(Index i, std::uint32_t e) {
    if (auto it = power_cache_.find({i, e}); it != power_cache_.end()) return it->second;
    Index result = 0;
    std::uint32_t have = 0;
    Index square = i;
    std::uint32_t square_exp = 1;
    for (std::uint32_t rest = e; rest; rest >>= 1) {
      if (rest & 1) {
        if (!result) {
          result = square;
          have = square_exp;
        } else {
          have += square_exp;
          result = cached_power(i, have, [&](Index out) { atom(RelationAtom::prod(result, square, out)); });
        }
      }
      if (rest >> 1) {
        const Index prev = square;
        square_exp *= 2;
        square = cached_power(i, square_exp, [&](Index out) { atom(RelationAtom::prod(prev, prev, out)); });
      }
    }
    return result;
  }

  // Product of powers for a non-constant monomial.
  Index monomial(const Exponents& e) {
    if (auto it = monomial_cache_.find(e); it != monomial_cache_.end()) return it->second;
    Index acc = 0;
    Exponents partial(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      const Index pw = power(static_cast<Index>(i + 1), e[i]);
      partial[i] = e[i];
      if (!acc) {
        acc = pw;
      } else if (auto it = monomial_cache_.find(partial); it != monomial_cache_.end()) {
        acc = it->second;
        continue;
      } else {
        const Index out = fresh(monomial_label(partial));
        atom(RelationAtom::prod(acc, pw, out));
        acc = out;
      }
      monomial_cache_[partial] = acc;
    }
    return acc;
  }

  // |c| * monomial, c != 0.
  Index term(const Exponents& e, const BigInt& magnitude) {
    const bool is_const = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (is_const) return constant(magnitude);
    const Index m = monomial(e);
    if (magnitude == 1) return m;
    const Index c = constant(magnitude);
    const Index out = fresh(magnitude.str() + "*" + monomial_label(e));
    atom(RelationAtom::prod(c, m, out));
    return out;
  }

  Index sum(const std::vector<Index>& parts, const std::vector<std::string>& labels) {
    Index acc = parts.front();
    std::string label = labels.front();
    for (std::size_t t = 1; t < parts.size(); ++t) {
      label += " + " + labels[t];
      const Index out = fresh(label);
      atom(RelationAtom::add(acc, parts[t], out));
      acc = out;
    }
    return acc;
  }

  void atom(const RelationAtom& a) {
    sys_.grow(std::max<std::size_t>(n_, sys_.n()));
    sys_.insert(a);
  }

  Index fresh(std::string label) {
    const auto v = static_cast<Index>(++n_);
    provenance_[v] = std::move(label);
    sys_.grow(n_);
    return v;
  }

  static std::string monomial_label(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  EquationSystem finish() {
    EquationSystem out(n_, Stage::General);
    for (const auto& a : sys_.atoms()) out.insert(a);
    return out;
  }

  std::map<Index, std::string>& provenance() { return provenance_; }

 private:
  template <typename Emit>
  Index cached_constant(const BigInt& value, Emit emit) {
    if (auto it = constant_cache_.find(value); it != constant_cache_.end()) return it->second;
    const Index out = fresh(value.str());
    emit(out);
    constant_cache_[value] = out;
    return out;
  }

  template <typename Emit>
  Index cached_power(Index i, std::uint32_t e, Emit emit) {
    if (auto it = power_cache_.find({i, e}); it != power_cache_.end()) return it->second;
    const Index out = fresh("x" + std::to_string(i) + "^" + std::to_string(e));
    emit(out);
    power_cache_[{i, e}] = out;
    return out;
  }

  std::size_t n_ = 0;
  EquationSystem sys_;
  std::optional<Index> one_;
  std::map<BigInt, Index> constant_cache_;
  std::map<std::pair<Index, std::uint32_t>, Index> power_cache_;
  std::map<Exponents, Index> monomial_cache_;
  std::map<Index, std::string> provenance_;
};

}  // namespace detail

inline ReductionTrace skolem_reduce(const Polynomial& d) {
  if (d.is_zero()) throw Error("cannot reduce the zero polynomial");
  const std::size_t p = d.vars();
  for (std::size_t i = 1; i <= p; ++i)
    if (d.degree_in(i) == 0) throw Error("x" + std::to_string(i) + " does not occur in the polynomial");

  detail::GraphBuilder g(p);
  g.one();
  std::vector<Index> pos, neg;
  std::vector<std::string> pos_labels, neg_labels;
  for (const auto& [e, c] : d.terms()) {
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    const Index v = g.term(e, mag);
    std::string label = detail::GraphBuilder::monomial_label(e);
    label = label.empty() ? mag.str() : (mag == 1 ? label : mag.str() + "*" + label);
    (c > 0 ? pos : neg).push_back(v);
    (c > 0 ? pos_labels : neg_labels).push_back(label);
  }
  if (pos.empty() || neg.empty()) {
    // one side is the empty sum: require s + s = s, i.e. s = 0
    const Index s = pos.empty() ? g.sum(neg, neg_labels) : g.sum(pos, pos_labels);
    g.atom(RelationAtom::add(s, s, s));
  } else {
    const Index lhs = g.sum(pos, pos_labels);
    const Index rhs = g.sum(neg, neg_labels);
    g.atom(RelationAtom::prod(lhs, g.one(), rhs));
  }

  ReductionTrace trace;
  trace.input = d;
  trace.passes.push_back({"skolem", g.finish()});
  trace.provenance = g.provenance();
  return trace;
}

inline EquationSystem eliminate_units(const EquationSystem& t) {
  EquationSystem out(t.n(), Stage::General);
  for (const auto& a : t.atoms()) out.insert(a.kind == AtomKind::Unit ? RelationAtom::prod(a.k, a.k, a.k) : a);
  return out;
}

namespace detail {

// Replaces the smallest addition atom; fresh variables get n+1..n+9.
inline EquationSystem eliminate_one_addition(const EquationSystem& t, std::map<Index, std::string>* provenance) {
  const auto it = std::find_if(t.atoms().begin(), t.atoms().end(),
                               [](const RelationAtom& a) { return a.kind == AtomKind::Add; });
  if (it == t.atoms().end()) return t;
  const RelationAtom add = *it;
  const Index x = add.i, y = add.j, z = add.k;
  const auto base = static_cast<Index>(t.n());
  const Index z1 = base + 1, z2 = base + 2, z1s = base + 3, z2s = base + 4, vs = base + 5, u = base + 6,
              tt = base + 7, ts = base + 8, v = base + 9;
  EquationSystem out(t.n() + 9, Stage::General);
  for (const auto& a : t.atoms())
    if (a != add) out.insert(a);
  out.insert(RelationAtom::prod(z, x, z1));
  out.insert(RelationAtom::prod(z, y, z2));
  out.insert(RelationAtom::succ(z1, z1s));
  out.insert(RelationAtom::succ(z2, z2s));
  out.insert(RelationAtom::prod(z1s, z2s, vs));
  out.insert(RelationAtom::prod(z, z, u));
  out.insert(RelationAtom::prod(x, y, tt));
  out.insert(RelationAtom::succ(tt, ts));
  out.insert(RelationAtom::succ(v, vs));
  out.insert(RelationAtom::prod(u, ts, v));
  if (provenance) {
    auto X = "x" + std::to_string(x), Y = "x" + std::to_string(y), Z = "x" + std::to_string(z);
    auto& pv = *provenance;
    pv[z1] = Z + "*" + X;
    pv[z2] = Z + "*" + Y;
    pv[z1s] = "S(" + Z + "*" + X + ")";
    pv[z2s] = "S(" + Z + "*" + Y + ")";
    pv[vs] = "S(" + Z + "*" + X + ")*S(" + Z + "*" + Y + ")";
    pv[u] = Z + "*" + Z;
    pv[tt] = X + "*" + Y;
    pv[ts] = "S(" + X + "*" + Y + ")";
    pv[v] = Z + "*" + Z + "*S(" + X + "*" + Y + ")";
  }
  return out;
}

}  // namespace detail

inline EquationSystem eliminate_additions(const EquationSystem& t, std::map<Index, std::string>* provenance = nullptr) {
  if (t.count(AtomKind::Unit) != 0) throw Error("eliminate units before eliminating additions");
  EquationSystem cur = t;
  while (cur.count(AtomKind::Add) != 0) cur = detail::eliminate_one_addition(cur, provenance);
  EquationSystem out(cur.n(), Stage::ConjectureForm);
  for (const auto& a : cur.atoms()) out.insert(a);
  return out;
}

inline ReductionTrace to_conjecture_form(const Polynomial& d) {
  ReductionTrace trace = skolem_reduce(d);
  trace.passes.push_back({"units", eliminate_units(trace.passes.back().system)});
  trace.passes.push_back({"additions", eliminate_additions(trace.passes.back().system, &trace.provenance)});
  return trace;
}

enum class Domain { Positive, Nonnegative, Integer };

inline std::string to_string(Domain d) {
  switch (d) {
    case Domain::Positive: return "positive";
    case Domain::Nonnegative: return "nonnegative";
    case Domain::Integer: return "integer";
  }
  return {};
}

inline Domain parse_domain(const std::string& s) {
  if (s == "positive") return Domain::Positive;
  if (s == "nonnegative") return Domain::Nonnegative;
  if (s == "integer") return Domain::Integer;
  throw Error("unknown domain '" + s + "' (expected positive, nonnegative or integer)");
}

inline constexpr std::size_t kMaxIntegerTransformVars = 10;

// nonnegative: D(x_1 - 1, ..., x_p - 1)
// integer:     product over sign patterns of D(+-(x_1 - 1), ..., +-(x_p - 1))
inline Polynomial domain_transform(const Polynomial& d, Domain domain) {
  const std::size_t p = d.vars();
  if (p == 0) throw Error("polynomial has no variables");
  auto shifted = [&](std::size_t i, bool negate) {
    Polynomial s = Polynomial::variable(p, i) - Polynomial::constant(p, 1);
    return negate ? -s : s;
  };
  switch (domain) {
    case Domain::Positive:
      return d;
    case Domain::Nonnegative: {
      std::vector<Polynomial> images;
      for (std::size_t i = 1; i <= p; ++i) images.push_back(shifted(i, false));
      return d.compose(images);
    }
    case Domain::Integer: {
      if (p > kMaxIntegerTransformVars)
        throw Error("integer-domain transform is limited to " + std::to_string(kMaxIntegerTransformVars) +
                    " variables");
      Polynomial product = Polynomial::constant(p, 1);
      // pattern bit i set means exponent i_{i+1} = 1, i.e. a negated shift
      for (std::uint32_t pattern = (1u << p); pattern-- > 0;) {
        std::vector<Polynomial> images;
        for (std::size_t i = 1; i <= p; ++i) images.push_back(shifted(i, ((pattern >> (i - 1)) & 1u) != 0));
        product = product * d.compose(images);
      }
      return product;
    }
  }
  return d;
}

struct ConjecturalBound {
  Domain domain = Domain::Positive;
  std::size_t n = 0;
  BoundValue bound;
  // quantity the bound applies to
  std::string applies_to;
};

inline ConjecturalBound conjectural_bound(const Polynomial& d, Domain domain) {
  const Polynomial q = domain_transform(d, domain);
  const ReductionTrace trace = to_conjecture_form(q);
  ConjecturalBound out;
  out.domain = domain;
  out.n = trace.final_n();
  out.bound = BoundValue::of(out.n);
  switch (domain) {
    case Domain::Positive: out.applies_to = "x_i"; break;
    case Domain::Nonnegative: out.applies_to = "x_i + 1"; break;
    case Domain::Integer: out.applies_to = "|x_i| + 1"; break;
  }
  return out;
}

enum class Membership { Member, NonMember, Inconclusive };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NonMember: return "non-member";
    case Membership::Inconclusive: return "inconclusive";
  }
  return {};
}

struct MembershipResult {
  Membership status = Membership::Inconclusive;
  std::optional<std::vector<BigInt>> witness;  // x_1..x_m
  BoundValue box_bound;                          // g(b) + 1 = f(n)
  std::uint64_t searched_edge = 0;               // box [0, searched_edge]^m
};

namespace detail {

inline bool box_search(const Polynomial& w, std::size_t m, std::uint64_t edge, std::vector<BigInt>& point) {
  std::vector<std::uint64_t> idx(m, 0);
  for (;;) {
    for (std::size_t i = 0; i < m; ++i) point[i + 1] = idx[i];
    if (w.evaluate(point) == 0) return true;
    std::size_t i = 0;
    while (i < m && idx[i] == edge) idx[i++] = 0;
    if (i == m) return false;
    ++idx[i];
  }
}

}  // namespace detail

// Is there x in N^m with W(b, x) = 0? The box [0, g(b)]^m suffices when the
// solutions are finitely many and the conjectured bound holds; g(b) comes from
// the nonnegative-domain bound of W(b, x_1..x_m).
inline MembershipResult bounded_membership(const Polynomial& w, const BigInt& b, std::uint64_t cap) {
  if (w.vars() == 0) throw Error("W needs at least the parameter variable");
  if (b < 0) throw Error("b must be non-negative");
  if (cap == 0) throw Error("cap must be positive");
  const std::size_t m = w.vars() - 1;

  if (m == 0) {
    MembershipResult r;
    r.status = w.evaluate(std::vector<BigInt>{b}) == 0 ? Membership::Member : Membership::NonMember;
    if (r.status == Membership::Member) r.witness = std::vector<BigInt>{};
    r.box_bound = BoundValue::of(1);
    return r;
  }

  // specialise x_1 := b, keeping only variables that still occur
  std::vector<Polynomial> images{Polynomial::constant(m, b)};
  for (std::size_t i = 1; i <= m; ++i) images.push_back(Polynomial::variable(m, i));
  const Polynomial spec = w.compose(images);
  std::vector<std::size_t> occurring;
  for (std::size_t i = 1; i <= m; ++i)
    if (spec.degree_in(i) > 0) occurring.push_back(i);

  MembershipResult r;
  std::vector<BigInt> point(m + 1, 0);
  point[0] = b;
  if (spec.is_zero()) {
    r.status = Membership::Member;
    r.witness = std::vector<BigInt>(m, 0);
    r.box_bound = BoundValue::of(1);
    return r;
  }
  if (occurring.empty()) {
    r.status = Membership::NonMember;  // nonzero constant
    r.box_bound = BoundValue::of(1);
    return r;
  }

  // bound for the occurring variables
  Polynomial reduced(occurring.size());
  for (const auto& [e, c] : spec.terms()) {
    Exponents re;
    for (auto i : occurring) re.push_back(e[i - 1]);
    reduced.add_term(re, c);
  }
  const ConjecturalBound cb = conjectural_bound(reduced, Domain::Nonnegative);
  r.box_bound = cb.bound;

  // g(b) = f(n) - 1
  bool covers = false;
  std::uint64_t edge = cap;
  if (cb.bound.value) {
    const BigInt g = *cb.bound.value - 1;
    if (g <= BigInt(cap)) {
      covers = true;
      edge = static_cast<std::uint64_t>(g);
    }
  }
  r.searched_edge = edge;
  if (detail::box_search(w, m, edge, point)) {
    r.status = Membership::Member;
    r.witness = std::vector<BigInt>(point.begin() + 1, point.end());
    return r;
  }
  r.status = covers ? Membership::NonMember : Membership::Inconclusive;
  return r;
}

}  // namespace dbound
