#pragma once

// One-parameter quadruple families, one per canonical quadruple.

#include <array>
#include <string>
#include <vector>

#include "dbound/polynomial.hpp"
#include "dbound/verifier/signature_mask.hpp"

namespace dbound {

struct ParametricFamily {
  std::array<std::string, 4> labels;  // entries written in t
  std::array<Polynomial, 4> entries;  // polynomials in x1 = t
  std::array<std::uint64_t, 4> instance{};
  std::uint64_t t_instance = 0;
  std::uint64_t t_min = 0;  // lowest valid parameter

  std::array<BigInt, 4> at(const BigInt& t) const {
    const std::array<BigInt, 1> arg{t};
    return {entries[0].evaluate(arg), entries[1].evaluate(arg), entries[2].evaluate(arg), entries[3].evaluate(arg)};
  }
  std::string label() const { return "(" + labels[0] + "," + labels[1] + "," + labels[2] + "," + labels[3] + ")"; }
  SignatureMask instance_mask() const { return small_signature(instance); }
};

namespace detail {

struct FamilyRow {
  const char* e[4];
  std::array<std::uint64_t, 4> instance;
};

// clang-format off
inline constexpr FamilyRow kFamilyRows[] = {
  {{"1", "2", "3", "t"}, {1, 2, 3, 17}},
  {{"1", "2", "4", "t"}, {1, 2, 4, 17}},
  {{"2", "3", "4", "t"}, {2, 3, 4, 17}},
  {{"t", "t+1", "t*(t+1)", "t*(t+1)^2"}, {2, 3, 6, 18}},
  {{"1", "2", "t", "2*t"}, {1, 2, 9, 18}},
  {{"1", "t", "t+1", "t*(t+1)"}, {1, 4, 5, 20}},
  {{"t", "t^2", "t^2+1", "t^2*(t^2+1)"}, {2, 4, 5, 20}},
  {{"t", "t+1", "(t+1)^2", "t*(t+1)^2"}, {2, 3, 9, 18}},
  {{"t", "t+1", "t+2", "(t+1)*(t+2)"}, {3, 4, 5, 20}},
  {{"1", "2", "t", "t^2"}, {1, 2, 5, 25}},
  {{"1", "t", "t+1", "(t+1)^2"}, {1, 4, 5, 25}},
  {{"t", "t+1", "t+2", "t*(t+1)"}, {4, 5, 6, 20}},
  {{"1", "2", "t", "t+1"}, {1, 2, 16, 17}},
  {{"t", "t^2", "t^2+1", "(t^2+1)^2"}, {2, 4, 5, 25}},
  {{"1", "t", "t+1", "t^2"}, {1, 5, 6, 25}},
  {{"t", "t+1", "t+2", "(t+2)^2"}, {3, 4, 5, 25}},
  {{"1", "t", "t^2", "t^2+1"}, {1, 4, 16, 17}},
  {{"t", "t^2", "t^4", "t^4+1"}, {2, 4, 16, 17}},
  {{"t", "t+1", "t+2", "t*(t+2)"}, {4, 5, 6, 24}},
  {{"1", "t", "t^2", "t^3"}, {1, 3, 9, 27}},
  {{"t", "t+1", "(t+1)^2", "(t+1)^2+1"}, {3, 4, 16, 17}},
  {{"t", "t+1", "t+2", "(t+1)^2"}, {4, 5, 6, 25}},
  {{"t", "t+1", "(t+1)^2", "(t+1)^3"}, {2, 3, 9, 27}},
  {{"t", "t+1", "t^2", "t^2+1"}, {4, 5, 16, 17}},
  {{"t", "t+1", "t^2", "t^3"}, {3, 4, 9, 27}},
  {{"t", "t+1", "t+2", "t^2"}, {5, 6, 7, 25}},
  {{"t", "t^2-1", "t^2", "t*(t^2-1)"}, {3, 8, 9, 24}},
  {{"t", "t+1", "t^2", "t*(t+1)"}, {4, 5, 16, 20}},
  {{"t", "t^2", "t^3", "t^5"}, {2, 4, 8, 32}},
  {{"t", "t+1", "t*(t+1)", "t^2*(t+1)^2"}, {2, 3, 6, 36}},
  {{"t", "t^2-1", "t^2", "t^3"}, {3, 8, 9, 27}},
  {{"t", "t+1", "t*(t+1)-1", "t*(t+1)"}, {4, 5, 19, 20}},
  {{"1", "t", "t+1", "t+2"}, {1, 15, 16, 17}},
  {{"t", "t^2", "t^2+1", "t^3"}, {3, 9, 10, 27}},
  {{"t", "t+1", "t^2", "(t+1)^2"}, {4, 5, 16, 25}},
  {{"t", "t+1", "t*(t+1)", "t*(t+1)+1"}, {4, 5, 20, 21}},
  {{"t", "t+1", "t^2", "(t+1)*t^2"}, {3, 4, 9, 36}},
  {{"t", "t^2", "t^2+1", "t*(t^2+1)"}, {3, 9, 10, 30}},
  {{"t", "t^2-1", "t^2", "t^2+1"}, {4, 15, 16, 17}},
  {{"t", "t^2", "t^4", "t^5"}, {2, 4, 16, 32}},
  {{"t", "t+1", "t*(t+1)", "(t+1)^2"}, {4, 5, 20, 25}},
  {{"1", "t", "t^2-1", "t^2"}, {1, 5, 24, 25}},
  {{"t", "t+1", "t*(t+1)", "t^2*(t+1)"}, {3, 4, 12, 36}},
  {{"t", "t^2", "t^2+1", "t^2+2"}, {4, 16, 17, 18}},
  {{"t", "t+1", "(t+1)^2-1", "(t+1)^2"}, {4, 5, 24, 25}},
  {{"t", "t+1", "t^2-1", "t^2"}, {5, 6, 24, 25}},
  {{"t", "t+1", "t+2", "t+3"}, {14, 15, 16, 17}},
  {{"t", "t^2", "t^3-1", "t^3"}, {3, 9, 26, 27}},
  {{"t", "t^2", "t^3", "t^3+1"}, {3, 9, 27, 28}},
  {{"t", "t^2-2", "t^2-1", "t^2"}, {5, 23, 24, 25}},
  {{"t", "t^2", "t^3", "t^6"}, {2, 4, 8, 64}},
  {{"t", "t^2-1", "t^2", "(t^2-1)^2"}, {3, 8, 9, 64}},
  {{"t", "t^2", "t^4", "t^6"}, {2, 4, 16, 64}},
  {{"t", "t^2-1", "t^2", "(t^2-1)*t^2"}, {3, 8, 9, 72}},
  {{"t^2", "t^3", "t^4", "t^6"}, {4, 8, 16, 64}},
  {{"1", "t", "t^2", "t^4"}, {1, 3, 9, 81}},
  {{"t", "t+1", "(t+1)^2", "(t+1)^4"}, {2, 3, 9, 81}},
  {{"t", "t+1", "t^2", "t^4"}, {3, 4, 9, 81}},
  {{"t", "t^2-1", "t^2", "t^4"}, {3, 8, 9, 81}},
  {{"t", "t^2", "t^2+1", "t^4"}, {3, 9, 10, 81}},
  {{"t", "t^2", "t^3", "t^4"}, {3, 9, 27, 81}},
  {{"t", "t^2", "t^4-1", "t^4"}, {3, 9, 80, 81}},
  {{"t", "t^2", "t^4", "t^8"}, {2, 4, 16, 256}},
};
// clang-format on

inline Polynomial parse_in_t(const std::string& label) {
  std::string text;
  for (char ch : label) {
    if (ch == 't')
      text += "x1";
    else
      text += ch;
  }
  auto p = parse_polynomial(text);
  if (p.vars() == 0) return Polynomial::constant(1, p.coefficient({}));
  return p;
}

inline std::vector<ParametricFamily> build_catalog() {
  std::vector<ParametricFamily> out;
  for (const auto& row : kFamilyRows) {
    ParametricFamily f;
    for (int i = 0; i < 4; ++i) {
      f.labels[i] = row.e[i];
      f.entries[i] = parse_in_t(f.labels[i]);
    }
    f.instance = row.instance;
    for (std::uint64_t t = 1; t <= 300 && f.t_instance == 0; ++t) {
      const auto v = f.at(t);
      bool match = true;
      for (int i = 0; i < 4; ++i) match = match && v[i] == row.instance[i];
      if (match) f.t_instance = t;
    }
    if (f.t_instance == 0) throw Error("family " + f.label() + " misses its instance");
    f.t_min = f.t_instance;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

inline const std::vector<ParametricFamily>& family_catalog() {
  static const std::vector<ParametricFamily> catalog = detail::build_catalog();
  return catalog;
}

}  // namespace dbound
