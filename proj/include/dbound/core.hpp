#pragma once

// Relation systems over indexed variables, positive tuples, signatures and
// the height bound f(n).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dbound/bigint.hpp"

namespace dbound {

using Index = std::uint32_t;  // 1-based variable index

enum class AtomKind : std::uint8_t { Unit, Succ, Add, Prod };

// One equation over indexed variables:
//   Unit(k)     x_k = 1
//   Succ(i,k)   x_i + 1 = x_k
//   Add(i,j,k)  x_i + x_j = x_k
//   Prod(i,j,k) x_i * x_j = x_k
// Add and Prod are kept with i <= j so equal equations compare equal.
struct RelationAtom {
  AtomKind kind = AtomKind::Unit;
  Index i = 0;
  Index j = 0;
  Index k = 0;

  static RelationAtom unit(Index k) { return make(AtomKind::Unit, 0, 0, k); }
  static RelationAtom succ(Index i, Index k) { return make(AtomKind::Succ, i, 0, k); }
  static RelationAtom add(Index i, Index j, Index k) {
    return make(AtomKind::Add, std::min(i, j), std::max(i, j), k);
  }
  static RelationAtom prod(Index i, Index j, Index k) {
    return make(AtomKind::Prod, std::min(i, j), std::max(i, j), k);
  }

  auto operator<=>(const RelationAtom&) const = default;

  bool is_conjecture_form() const { return kind == AtomKind::Succ || kind == AtomKind::Prod; }

  Index max_index() const { return std::max({i, j, k}); }

  // Variables the atom mentions, without repetition.
  std::vector<Index> variables() const {
    std::vector<Index> v;
    auto push = [&v](Index x) {
      if (x != 0 && std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    push(i);
    push(j);
    push(k);
    return v;
  }

  // Values are 0-based: values[idx - 1] is x_idx.
  bool holds(std::span<const BigInt> values) const {
    const auto at = [&](Index idx) -> const BigInt& { return values[idx - 1]; };
    switch (kind) {
      case AtomKind::Unit: return at(k) == 1;
      case AtomKind::Succ: return at(i) + 1 == at(k);
      case AtomKind::Add: return at(i) + at(j) == at(k);
      case AtomKind::Prod: return at(i) * at(j) == at(k);
    }
    return false;
  }

  RelationAtom relabeled(std::span<const Index> perm) const {
    // perm[old - 1] = new
    auto m = [&](Index x) -> Index { return x == 0 ? 0 : perm[x - 1]; };
    switch (kind) {
      case AtomKind::Unit: return unit(m(k));
      case AtomKind::Succ: return succ(m(i), m(k));
      case AtomKind::Add: return add(m(i), m(j), m(k));
      case AtomKind::Prod: return prod(m(i), m(j), m(k));
    }
    return *this;
  }

 private:
  static RelationAtom make(AtomKind kind, Index i, Index j, Index k) {
    RelationAtom a;
    a.kind = kind;
    a.i = i;
    a.j = j;
    a.k = k;
    if (k == 0 || (kind != AtomKind::Unit && i == 0) || ((kind == AtomKind::Add || kind == AtomKind::Prod) && j == 0))
      throw Error("variable indices are 1-based");
    return a;
  }
};

inline std::string to_string(const RelationAtom& a) {
  auto x = [](Index v) { return "x" + std::to_string(v); };
  switch (a.kind) {
    case AtomKind::Unit: return x(a.k) + " = 1";
    case AtomKind::Succ: return x(a.i) + " + 1 = " + x(a.k);
    case AtomKind::Add: return x(a.i) + " + " + x(a.j) + " = " + x(a.k);
    case AtomKind::Prod: return x(a.i) + " * " + x(a.j) + " = " + x(a.k);
  }
  return {};
}

enum class Stage : std::uint8_t { General, ConjectureForm };

// A finite set of atoms over x_1..x_n. The arity is explicit so that
// variables without atoms are representable.
class EquationSystem {
 public:
  EquationSystem() = default;
  explicit EquationSystem(std::size_t n, Stage stage = Stage::ConjectureForm) : n_(n), stage_(stage) {
    if (n == 0) throw Error("an equation system needs at least one variable");
  }
  EquationSystem(std::size_t n, std::initializer_list<RelationAtom> atoms, Stage stage = Stage::ConjectureForm)
      : EquationSystem(n, stage) {
    for (const auto& a : atoms) insert(a);
  }

  std::size_t n() const { return n_; }
  Stage stage() const { return stage_; }
  const std::set<RelationAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  bool contains(const RelationAtom& a) const { return atoms_.count(a) != 0; }

  std::size_t count(AtomKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(atoms_.begin(), atoms_.end(), [kind](const RelationAtom& a) { return a.kind == kind; }));
  }

  void insert(const RelationAtom& a) {
    if (a.max_index() > n_)
      throw Error("atom '" + to_string(a) + "' mentions a variable beyond n = " + std::to_string(n_));
    if (stage_ == Stage::ConjectureForm && !a.is_conjecture_form())
      throw Error("atom '" + to_string(a) + "' is not allowed in a conjecture-form system");
    atoms_.insert(a);
  }

  void erase(const RelationAtom& a) { atoms_.erase(a); }

  // Widen the variable range; used when passes introduce fresh variables.
  void grow(std::size_t n) {
    if (n < n_) throw Error("cannot shrink an equation system");
    n_ = n;
  }

  void set_stage(Stage s) {
    if (s == Stage::ConjectureForm)
      for (const auto& a : atoms_)
        if (!a.is_conjecture_form()) throw Error("system still contains '" + to_string(a) + "'");
    stage_ = s;
  }

  // True iff every atom holds; works for any integer assignment of length n.
  bool satisfied_by(std::span<const BigInt> values) const {
    if (values.size() != n_) throw Error("assignment arity does not match system arity");
    return std::all_of(atoms_.begin(), atoms_.end(), [&](const RelationAtom& a) { return a.holds(values); });
  }

  EquationSystem relabeled(std::span<const Index> perm) const {
    EquationSystem out(n_, stage_);
    for (const auto& a : atoms_) out.insert(a.relabeled(perm));
    return out;
  }

  friend bool operator==(const EquationSystem& a, const EquationSystem& b) {
    return a.n_ == b.n_ && a.atoms_ == b.atoms_;
  }

 private:
  std::size_t n_ = 1;
  Stage stage_ = Stage::ConjectureForm;
  std::set<RelationAtom> atoms_;
};

// A non-empty sequence of positive integers.
class PosTuple {
 public:
  PosTuple() = default;
  explicit PosTuple(std::vector<BigInt> values) : values_(std::move(values)) { validate(); }
  PosTuple(std::initializer_list<BigInt> values) : values_(values) { validate(); }

  template <typename Int>
    requires std::is_integral_v<Int>
  static PosTuple from(std::span<const Int> v) {
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (Int x : v) out.emplace_back(x);
    return PosTuple(std::move(out));
  }

  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<BigInt>& values() const { return values_; }
  std::span<const BigInt> span() const { return values_; }
  const BigInt& max() const { return *std::max_element(values_.begin(), values_.end()); }

  auto operator<=>(const PosTuple&) const = default;
  bool operator==(const PosTuple&) const = default;

 private:
  void validate() const {
    if (values_.empty()) throw Error("a tuple needs at least one entry");
    for (const auto& v : values_)
      if (v < 1) throw Error("tuple entries must be positive, got " + v.str());
  }

  std::vector<BigInt> values_;
};

inline std::string to_string(const PosTuple& t, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += sep;
    s += t[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// f(n)

// f(n) is evaluated exactly up to this arity; f(14) already has about a
// million bits.
inline constexpr std::size_t kMaxExactBoundArity = 14;

inline BigInt bound_f(std::size_t n) {
  if (n == 0) throw Error("f(n) is undefined for n = 0");
  if (n > kMaxExactBoundArity)
    throw Error("f(" + std::to_string(n) + ") is too large to evaluate exactly (limit n <= " +
                std::to_string(kMaxExactBoundArity) + ")");
  if (n == 1) return 1;
  if (n <= 5) return pow2(std::uint64_t{1} << (n - 2));
  const std::uint64_t e = std::uint64_t{1} << (n - 4);
  return ipow(2 + pow2(e), e);
}

// f(n) for any n: exact when small, closed form otherwise.
struct BoundValue {
  std::size_t n = 1;
  std::optional<BigInt> value;

  static BoundValue of(std::size_t n) {
    if (n == 0) throw Error("f(n) is undefined for n = 0");
    BoundValue b;
    b.n = n;
    if (n <= kMaxExactBoundArity) b.value = bound_f(n);
    return b;
  }

  std::string closed_form() const {
    if (n == 1) return "1";
    if (n <= 5) return "2^(2^" + std::to_string(n - 2) + ")";
    return "(2+2^(2^" + std::to_string(n - 4) + "))^(2^" + std::to_string(n - 4) + ")";
  }

  // log2 f(n), accurate to double precision.
  double log2() const {
    if (n == 1) return 0.0;
    if (n <= 5) return std::ldexp(1.0, static_cast<int>(n - 2));
    const double e = std::ldexp(1.0, static_cast<int>(n - 4));
    // log2(2 + 2^e) = e + log2(1 + 2^(1-e))
    if (n >= 12) return e * e;  // 2^(1-e) is below double resolution
    return e * (e + std::log2(1.0 + std::ldexp(1.0, static_cast<int>(1 - e))));
  }

  std::string str() const { return value ? value->str() : closed_form(); }
};

// f(n) < c, without evaluating huge f(n).
inline bool bound_below(std::size_t n, const BigInt& c) {
  if (n <= kMaxExactBoundArity) return bound_f(n) < c;
  if (c <= 0) return false;
  // f(n) >= 2^log2 and c < 2^(msb(c)+1)
  return BoundValue::of(n).log2() < static_cast<double>(boost::multiprecision::msb(c));
}

// ---------------------------------------------------------------------------
// Signatures

// P(a): every successor and product relation that holds among the entries.
inline EquationSystem derive_signature(const PosTuple& a) {
  const std::size_t n = a.size();
  EquationSystem out(n, Stage::ConjectureForm);
  std::map<BigInt, std::vector<Index>> where;
  for (std::size_t k = 0; k < n; ++k) where[a[k]].push_back(static_cast<Index>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = where.find(a[i] + 1); it != where.end())
      for (Index k : it->second) out.insert(RelationAtom::succ(static_cast<Index>(i + 1), k));
    for (std::size_t j = i; j < n; ++j) {
      if (auto it = where.find(a[i] * a[j]); it != where.end())
        for (Index k : it->second)
          out.insert(RelationAtom::prod(static_cast<Index>(i + 1), static_cast<Index>(j + 1), k));
    }
  }
  return out;
}

inline bool satisfies(const PosTuple& x, const EquationSystem& t) {
  if (x.size() != t.n())
    throw Error("tuple arity " + std::to_string(x.size()) + " does not match system arity " + std::to_string(t.n()));
  return t.satisfied_by(x.span());
}

inline bool is_subsystem(const EquationSystem& a, const EquationSystem& b) {
  if (a.n() != b.n()) throw Error("cannot compare systems of different arity");
  return std::includes(b.atoms().begin(), b.atoms().end(), a.atoms().begin(), a.atoms().end());
}

// ---------------------------------------------------------------------------
// Text format
//
//   vars <n>            optional first statement
//   x<i> = 1
//   x<i> + 1 = x<k>
//   x<i> + x<j> = x<k>
//   x<i> * x<j> = x<k>
//   # comment

namespace detail {

inline std::vector<std::string> tokenize_system_line(const std::string& line, std::size_t lineno) {
  std::vector<std::string> toks;
  std::size_t p = 0;
  while (p < line.size()) {
    char ch = line[p];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++p;
    } else if (ch == '+' || ch == '*' || ch == '=') {
      toks.emplace_back(1, ch);
      ++p;
    } else if (std::isalnum(static_cast<unsigned char>(ch))) {
      std::size_t q = p;
      while (q < line.size() && std::isalnum(static_cast<unsigned char>(line[q]))) ++q;
      toks.push_back(line.substr(p, q - p));
      p = q;
    } else {
      throw Error("line " + std::to_string(lineno) + ": unexpected character '" + std::string(1, ch) + "'");
    }
  }
  return toks;
}

inline std::optional<Index> variable_token(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'x') return std::nullopt;
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
  if (tok.size() > 10) return std::nullopt;
  const auto v = std::stoul(tok.substr(1));
  if (v == 0) return std::nullopt;
  return static_cast<Index>(v);
}

}  // namespace detail

inline EquationSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> declared;
  std::vector<RelationAtom> atoms;
  std::size_t lineno = 0;
  bool seen_statement = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto toks = detail::tokenize_system_line(line, lineno);
    const auto where = "line " + std::to_string(lineno) + ": ";
    auto var = [&](const std::string& t) {
      auto v = detail::variable_token(t);
      if (!v) throw Error(where + "expected a variable like x1, got '" + t + "'");
      return *v;
    };
    if (toks[0] == "vars") {
      if (seen_statement || declared) throw Error(where + "'vars' must be the first statement");
      if (toks.size() != 2) throw Error(where + "expected 'vars <n>'");
      for (char ch : toks[1])
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw Error(where + "bad variable count");
      declared = std::stoul(toks[1]);
      if (*declared == 0) throw Error(where + "variable count must be positive");
      seen_statement = true;
      continue;
    }
    seen_statement = true;
    if (toks.size() == 3 && toks[1] == "=" && toks[2] == "1") {
      atoms.push_back(RelationAtom::unit(var(toks[0])));
    } else if (toks.size() == 5 && toks[1] == "+" && toks[2] == "1" && toks[3] == "=") {
      atoms.push_back(RelationAtom::succ(var(toks[0]), var(toks[4])));
    } else if (toks.size() == 5 && toks[1] == "+" && toks[3] == "=") {
      atoms.push_back(RelationAtom::add(var(toks[0]), var(toks[2]), var(toks[4])));
    } else if (toks.size() == 5 && toks[1] == "*" && toks[3] == "=") {
      atoms.push_back(RelationAtom::prod(var(toks[0]), var(toks[2]), var(toks[4])));
    } else {
      throw Error(where + "unrecognized equation '" + line + "'");
    }
  }
  Index max_index = 0;
  bool general = false;
  for (const auto& a : atoms) {
    max_index = std::max(max_index, a.max_index());
    general = general || !a.is_conjecture_form();
  }
  const std::size_t n = declared ? *declared : max_index;
  if (n == 0) throw Error("system declares no variables");
  if (declared && max_index > *declared)
    throw Error("atom mentions x" + std::to_string(max_index) + " but only " + std::to_string(n) +
                " variables are declared");
  EquationSystem sys(n, general ? Stage::General : Stage::ConjectureForm);
  for (const auto& a : atoms) sys.insert(a);
  return sys;
}

inline std::string to_text(const EquationSystem& sys) {
  std::string out = "vars " + std::to_string(sys.n()) + "\n";
  for (const auto& a : sys.atoms()) out += to_string(a) + "\n";
  return out;
}

}  // namespace dbound
