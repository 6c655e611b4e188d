#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace sl2w {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Backed by boost::multiprecision, so numerator
/// and denominator grow as needed.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(BigInt n) : v_(std::move(n)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                 : boost::multiprecision::cpp_rational(num, den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline BigInt pow2(unsigned n) { return BigInt(1) << n; }

}  // namespace sl2w
