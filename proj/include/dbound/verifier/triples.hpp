#pragma once

// The 6 x 4 grid of triple systems: a row system from successor/square atoms
// on x1, x2 plus a column system from the products landing on x3.

#include <functional>

#include "dbound/solver.hpp"

namespace dbound {

enum class TripleClass { NotInF, InfiniteFamily, UniquelySolved, Unresolved };

inline std::string to_string(TripleClass k) {
  switch (k) {
    case TripleClass::NotInF: return "not-in-F";
    case TripleClass::InfiniteFamily: return "infinite-family";
    case TripleClass::UniquelySolved: return "uniquely-solved";
    case TripleClass::Unresolved: return "unresolved";
  }
  return "?";
}

struct TripleCell {
  std::size_t row = 0, column = 0;
  std::string row_label, column_label;
  EquationSystem system{3};
  TripleClass kind = TripleClass::Unresolved;
  std::optional<PosTuple> member;  // some 1 < a1 < a2 < a3 with P(a) equal to the system
  std::string family;              // parametric template when infinite
  std::vector<PosTuple> solutions; // full solution set when uniquely solved
};

struct TripleTable {
  std::vector<TripleCell> cells;               // row-major, 24 entries
  std::vector<PosTuple> unit_lead_finite;      // triples (1, a2, a3) with finitely many solutions
  std::size_t count(TripleClass k) const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [k](const TripleCell& c) { return c.kind == k; }));
  }
};

inline constexpr std::uint64_t kTripleMemberLimit = 64;
inline constexpr std::uint64_t kTripleFamilySteps = 20;
inline constexpr std::uint64_t kTripleSolveCap = 200;

namespace detail {

using TripleTemplate = std::function<std::array<BigInt, 3>(const BigInt&)>;

struct TripleRowSpec {
  const char* label;
  std::vector<RelationAtom> atoms;
};

inline std::vector<TripleRowSpec> triple_rows() {
  using A = RelationAtom;
  return {
      {"{}", {}},
      {"{x1+1=x2}", {A::succ(1, 2)}},
      {"{x1*x1=x2}", {A::prod(1, 1, 2)}},
      {"{x2+1=x3}", {A::succ(2, 3)}},
      {"{x1+1=x2, x2+1=x3}", {A::succ(1, 2), A::succ(2, 3)}},
      {"{x1*x1=x2, x2+1=x3}", {A::prod(1, 1, 2), A::succ(2, 3)}},
  };
}

inline std::vector<TripleRowSpec> triple_columns() {
  using A = RelationAtom;
  return {
      {"{}", {}},
      {"{x1*x1=x3}", {A::prod(1, 1, 3)}},
      {"{x1*x2=x3}", {A::prod(1, 2, 3)}},
      {"{x2*x2=x3}", {A::prod(2, 2, 3)}},
  };
}

struct NamedTemplate {
  std::string label;
  TripleTemplate eval;
};

// Parametric solutions for the infinite cells; parameters s, t, u are taken
// as k, k+1, k+2.
inline std::optional<NamedTemplate> triple_template(std::size_t row, std::size_t col) {
  auto T = [](std::string label, TripleTemplate f) { return std::optional<NamedTemplate>({std::move(label), std::move(f)}); };
  using V = std::array<BigInt, 3>;
  switch (row * 4 + col) {
    case 0: return T("(s,t,u)", [](const BigInt& k) { return V{k, k + 1, k + 2}; });
    case 1: return T("(s,t,s^2)", [](const BigInt& k) { return V{k, k + 1, k * k}; });
    case 2: return T("(s,t,s*t)", [](const BigInt& k) { return V{k, k + 1, k * (k + 1)}; });
    case 3: return T("(s,t,t^2)", [](const BigInt& k) { return V{k, k + 1, (k + 1) * (k + 1)}; });
    case 4: return T("(s,s+1,u)", [](const BigInt& k) { return V{k, k + 1, k + 2}; });
    case 5: return T("(s,s+1,s^2)", [](const BigInt& k) { return V{k, k + 1, k * k}; });
    case 6: return T("(s,s+1,s*(s+1))", [](const BigInt& k) { return V{k, k + 1, k * (k + 1)}; });
    case 7: return T("(s,s+1,(s+1)^2)", [](const BigInt& k) { return V{k, k + 1, (k + 1) * (k + 1)}; });
    case 8: return T("(s,s^2,u)", [](const BigInt& k) { return V{k, k * k, k + 2}; });
    case 10: return T("(s,s^2,s^3)", [](const BigInt& k) { return V{k, k * k, k * k * k}; });
    case 11: return T("(s,s^2,s^4)", [](const BigInt& k) { return V{k, k * k, k * k * k * k}; });
    case 12: return T("(s,t,t+1)", [](const BigInt& k) { return V{k, k + 1, k + 2}; });
    case 13: return T("(s,s^2-1,s^2)", [](const BigInt& k) { return V{k, k * k - 1, k * k}; });
    case 16: return T("(s,s+1,s+2)", [](const BigInt& k) { return V{k, k + 1, k + 2}; });
    case 20: return T("(s,s^2,s^2+1)", [](const BigInt& k) { return V{k, k * k, k * k + 1}; });
    default: return std::nullopt;
  }
}

inline std::optional<PosTuple> find_member(const EquationSystem& sys) {
  for (std::uint64_t a3 = 4; a3 <= kTripleMemberLimit; ++a3)
    for (std::uint64_t a2 = 3; a2 < a3; ++a2)
      for (std::uint64_t a1 = 2; a1 < a2; ++a1) {
        PosTuple a(std::vector<BigInt>{a1, a2, a3});
        if (derive_signature(a) == sys) return a;
      }
  return std::nullopt;
}

inline bool template_unbounded(const NamedTemplate& t, const EquationSystem& sys) {
  BigInt prev = 0;
  for (std::uint64_t k = 2; k < 2 + kTripleFamilySteps; ++k) {
    const auto v = t.eval(k);
    if (!sys.satisfied_by(v)) return false;
    const BigInt mx = std::max({v[0], v[1], v[2]});
    if (mx <= prev) return false;
    prev = mx;
  }
  return true;
}

// Finite at desk scale: no solution with free entries up to twice the limit
// leaves [1, limit].
inline bool bounded_finite(const EquationSystem& sys) {
  SolveOptions opt;
  opt.cap = 2 * kTripleMemberLimit;
  return !find_first_solution(sys, opt, [](const PosTuple& s) { return s.max() > kTripleMemberLimit; });
}

}  // namespace detail

inline TripleTable classify_triples() {
  TripleTable table;
  const auto rows = detail::triple_rows();
  const auto cols = detail::triple_columns();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      TripleCell cell;
      cell.row = r;
      cell.column = c;
      cell.row_label = rows[r].label;
      cell.column_label = cols[c].label;
      for (const auto& a : rows[r].atoms) cell.system.insert(a);
      for (const auto& a : cols[c].atoms) cell.system.insert(a);
      cell.member = detail::find_member(cell.system);
      if (!cell.member) {
        cell.kind = TripleClass::NotInF;
      } else if (auto t = detail::triple_template(r, c); t && detail::template_unbounded(*t, cell.system)) {
        cell.kind = TripleClass::InfiniteFamily;
        cell.family = t->label;
      } else {
        // one free variable at most; the search sees every solution whose
        // free entry is at most the cap
        SolveOptions opt;
        opt.cap = kTripleSolveCap;
        auto sols = enumerate_solutions(cell.system, opt).solutions;
        const bool bounded = std::all_of(sols.begin(), sols.end(), [](const PosTuple& s) { return s.max() < kTripleSolveCap / 2; });
        if (sols.size() == 1 && bounded) {
          cell.kind = TripleClass::UniquelySolved;
          cell.solutions = std::move(sols);
        }
      }
      table.cells.push_back(std::move(cell));
    }

  // triples (1, a2, a3): every a2 > 2 leaves x2 free
  for (std::uint64_t a3 = 3; a3 <= kTripleMemberLimit; ++a3)
    for (std::uint64_t a2 = 2; a2 < a3; ++a2) {
      PosTuple a(std::vector<BigInt>{1, a2, a3});
      if (detail::bounded_finite(derive_signature(a))) table.unit_lead_finite.push_back(a);
    }
  return table;
}

}  // namespace dbound
