#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl2w/rational.hpp"

namespace sl2w {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree with no trailing zeros. The zero polynomial has an empty
/// coefficient vector. The variable is anonymous; a name ("c", "x") is chosen
/// at rendering time.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs)
      : c_(coeffs.begin(), coeffs.end()) { trim(); }

  /// The monomial x.
  static Polynomial variable() { return Polynomial{Rational(0), Rational(1)}; }

  bool is_zero() const { return c_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  std::span<const Rational> coeffs() const { return c_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Rational& s, Polynomial p) {
    if (s.is_zero()) return {};
    for (auto& x : p.c_) x *= s;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return s * std::move(p); }
  Polynomial& operator*=(const Rational& s) { return *this = std::move(*this) * s; }
  Polynomial& operator/=(const Rational& s) { return *this *= Rational(1) / s; }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  /// Substitution p(q(x)), expanded exactly (Horner in the polynomial ring).
  Polynomial substitute(const Polynomial& q) const {
    Polynomial r;
    for (size_t i = c_.size(); i-- > 0;) r = r * q + Polynomial(c_[i]);
    return r;
  }

  /// Quotient of exact division by x. The constant term must vanish.
  Polynomial divide_by_variable() const {
    if (!coeff(0).is_zero())
      throw std::logic_error("Polynomial: not divisible by the variable");
    if (is_zero()) return {};
    return Polynomial(std::vector<Rational>(c_.begin() + 1, c_.end()));
  }

  bool has_odd_terms() const {
    for (size_t i = 1; i < c_.size(); i += 2)
      if (!c_[i].is_zero()) return true;
    return false;
  }

  /// Plain rendering in descending degree, e.g. "c^2/480 - c/720".
  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      const Rational& a = c_[i];
      if (a.is_zero()) continue;
      if (out.empty()) {
        if (a.sign() < 0) out += "-";
      } else {
        out += a.sign() < 0 ? " - " : " + ";
      }
      out += term_string(a.abs(), i, var);
    }
    return out;
  }

  /// JSON rendering: {"coeffs": [[num,den], ...]} ascending in degree,
  /// numerator and denominator as decimal strings.
  std::string to_json() const {
    std::string out = "{\"coeffs\":[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += "[\"" + c_[i].numerator().str() + "\",\"" + c_[i].denominator().str() + "\"]";
    }
    out += "]}";
    return out;
  }

 private:
  static std::string term_string(const Rational& a, size_t k, const std::string& var) {
    const BigInt num = a.numerator();
    const BigInt den = a.denominator();
    if (k == 0) return a.to_string();
    std::string s;
    if (num != 1) s += num.str();
    s += var;
    if (k > 1) s += "^" + std::to_string(k);
    if (den != 1) s += "/" + den.str();
    return s;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Values of the sl2 weight system live in Z(sl2), the polynomial ring in the
/// Casimir variable c.
using CasimirPoly = Polynomial;

/// Unique polynomial of degree < points.size() through the given nodes.
/// The x-values must be pairwise distinct.
inline Polynomial lagrange_interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("lagrange_interpolate: duplicate x-value");
  Polynomial result;
  for (size_t i = 0; i < points.size(); ++i) {
    Polynomial basis(points[i].second);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      // basis *= (x - x_j) / (x_i - x_j)
      Polynomial lin{-points[j].first, Rational(1)};
      basis = basis * lin;
      basis /= points[i].first - points[j].first;
    }
    result += basis;
  }
  return result;
}

/// Change of variable c = (x^2 - 1)/2: given an even polynomial p(x), returns
/// r with r((x^2-1)/2) = p(x), by substituting x^2 = 2c + 1 exactly.
inline CasimirPoly rebase_even_to_casimir(const Polynomial& p) {
  if (p.has_odd_terms())
    throw std::invalid_argument("rebase_even_to_casimir: odd-degree term present");
  const Polynomial xsq{Rational(1), Rational(2)};  // 2c + 1
  Polynomial result, power(Rational(1));
  for (size_t k = 0; 2 * k < static_cast<size_t>(p.degree() + 1); ++k) {
    result += p.coeff(2 * k) * power;
    power = power * xsq;
  }
  return result;
}

}  // namespace sl2w
