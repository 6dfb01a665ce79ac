#pragma once

// Multivariate integer polynomials and the expression parser that feeds the
// reduction pipeline.

#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dbound/bigint.hpp"

namespace dbound {

using Exponents = std::vector<std::uint32_t>;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}

  static Polynomial constant(std::size_t vars, const BigInt& c) {
    Polynomial p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t vars, std::size_t index) {
    if (index == 0 || index > vars) throw Error("variable index out of range");
    Polynomial p(vars);
    Exponents e(vars, 0);
    e[index - 1] = 1;
    p.add_term(e, 1);
    return p;
  }

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != vars_) throw Error("exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::uint32_t degree_in(std::size_t index) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index - 1]);
    return d;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
      std::uint32_t s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  BigInt evaluate(std::span<const BigInt> x) const {
    if (x.size() != vars_) throw Error("evaluation point has the wrong arity");
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
      BigInt term = c;
      for (std::size_t i = 0; i < vars_; ++i)
        if (e[i]) term *= ipow(x[i], e[i]);
      sum += term;
    }
    return sum;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    r.require_same(b);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.vars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.vars_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  Polynomial pow(std::uint32_t k) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // Substitute polynomials (all over `vars` variables) for x_1..x_p.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_) throw Error("need one image per variable");
    const std::size_t out_vars = images.empty() ? 0 : images.front().vars();
    Polynomial r(out_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(out_vars, c);
      for (std::size_t i = 0; i < vars_; ++i)
        if (e[i]) term = term * images[i].pow(e[i]);
      r = r + term;
    }
    return r;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  void require_same(const Polynomial& b) const {
    if (vars_ != b.vars_) throw Error("polynomials over different variable counts");
  }

  std::size_t vars_ = 0;
  std::map<Exponents, BigInt> terms_;
};

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // highest degree first reads naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// expr := term (('+'|'-') term)* ; term := unary ('*' unary)* ;
// unary := ('-'|'+') unary | power ; power := primary ('^' literal)* ;
// primary := literal | x<i> | '(' expr ')'
class PolynomialParser {
 public:
  explicit PolynomialParser(const std::string& text) : s_(text) {}

  Polynomial parse() {
    vars_ = scan_max_index();
    if (vars_ == 0) vars_ = 1;
    Polynomial lhs = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Polynomial rhs = expr();
      lhs = lhs - rhs;
    }
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return lhs;
  }

 private:
  std::size_t scan_max_index() const {
    std::size_t best = 0;
    for (std::size_t p = 0; p < s_.size(); ++p) {
      if (s_[p] != 'x') continue;
      std::size_t q = p + 1;
      std::size_t v = 0;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        v = v * 10 + static_cast<std::size_t>(s_[q] - '0');
        if (v > 100000) throw ParseError("variable index too large", p);
        ++q;
      }
      best = std::max(best, v);
    }
    return best;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    for (;;) {
      skip_ws();
      if (peek() != '^') return base;
      const std::size_t at = ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("exponent must be a non-negative integer literal", at);
      BigInt e = literal();
      if (e > 1000) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<std::uint32_t>(e));
    }
  }

  Polynomial primary() {
    skip_ws();
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial::constant(vars_, literal());
    if (ch == 'x') {
      const std::size_t at = pos_++;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a variable index", pos_);
      BigInt idx = literal();
      if (idx == 0) throw ParseError("variables are numbered from x1", at);
      return Polynomial::variable(vars_, static_cast<std::size_t>(idx));
    }
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (ch == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + ch + "'", pos_);
  }

  BigInt literal() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t vars_ = 0;
};

}  // namespace detail

// Parses "lhs [= rhs]" into lhs - rhs over x1..xp, p the highest index used.
inline Polynomial parse_polynomial(const std::string& text) { return detail::PolynomialParser(text).parse(); }

}  // namespace dbound
