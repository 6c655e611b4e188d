#pragma once

#include <stdexcept>
#include <vector>

#include "sl2w/polynomial.hpp"
#include "sl2w/rational.hpp"

namespace sl2w {

/// Bernoulli polynomial B_n(x), defined by z e^{zx}/(e^z - 1) = sum B_n(x) z^n/n!.
/// Computed by the Cauchy-product recurrence
///   B_n(x) = x^n - sum_{j<n} C(n,j) B_j(x) / (n - j + 1),
/// obtained by multiplying the generating identity by (e^z - 1)/z and matching
/// coefficients of z^n. Degree n, top coefficient 1.
inline Polynomial bernoulli_poly(unsigned n) {
  std::vector<Polynomial> b(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    std::vector<Rational> mono(m + 1);
    mono[m] = Rational(1);
    Polynomial p(std::move(mono));
    for (unsigned j = 0; j < m; ++j)
      p -= (Rational(binomial(m, j)) / Rational(static_cast<long long>(m) - j + 1)) * b[j];
    b[m] = p;
  }
  return b[n];
}

/// Bernoulli number B_n = B_n(0), with B_1 = -1/2.
inline Rational bernoulli_number(unsigned n) { return bernoulli_poly(n).coeff(0); }

namespace detail {

// Product of two even series (coefficient vectors indexed by the power of
// x^2), truncated to `order` terms of x^2.
inline std::vector<Rational> even_mul(const std::vector<Rational>& p,
                                      const std::vector<Rational>& q, unsigned order) {
  std::vector<Rational> r(order + 1);
  for (unsigned i = 0; i <= order && i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order && j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

}  // namespace detail

/// Coefficient of x^{2n} in (1/2) ln((e^{x/2} - e^{-x/2})/(x/2)), computed by
/// exact series composition truncated at x^{2*order} (order >= n). The sinh
/// ratio expands as sum_k x^{2k} / (4^k (2k+1)!), and ln(1+u) is applied as
/// u - u^2/2 + ... with exact truncation.
inline Rational modified_bernoulli_at_order(unsigned two_n, unsigned order) {
  if (two_n % 2 != 0 || two_n < 2)
    throw std::invalid_argument("modified_bernoulli: index must be even and >= 2");
  const unsigned n = two_n / 2;
  if (order < n) throw std::invalid_argument("modified_bernoulli: order too small");

  std::vector<Rational> u(order + 1);  // ratio minus 1, in powers of x^2
  for (unsigned k = 1; k <= order; ++k)
    u[k] = Rational(1) / Rational(pow2(2 * k) * factorial(2 * k + 1));
  std::vector<Rational> log(order + 1), upow = u;
  for (unsigned m = 1; m <= order; ++m) {
    Rational c = Rational(m % 2 == 1 ? 1 : -1) / Rational(static_cast<long long>(m));
    for (unsigned k = 0; k <= order; ++k) log[k] += c * upow[k];
    upow = detail::even_mul(upow, u, order);
  }
  return Rational(1, 2) * log[n];
}

/// Modified Bernoulli number b_{2n}, the x^{2n} coefficient of
/// (1/2) ln((e^{x/2} - e^{-x/2})/(x/2)).
inline Rational modified_bernoulli(unsigned two_n) {
  return modified_bernoulli_at_order(two_n, two_n / 2);
}

/// Shifted Bernoulli polynomial q_n, defined by
///   q_n((x^2 - 1)/2) = (2/(2n+1)!) B_{2n+1}((1+x)/2) / x.
/// B_{2n+1}((1+x)/2) is odd in x with zero constant term, so the division is
/// exact and the quotient is even; the quotient is rebased to the Casimir
/// variable via x^2 = 2c + 1. Degree n, top coefficient 1/(2^n (2n+1)!).
inline CasimirPoly q_poly(unsigned n) {
  if (n < 1) throw std::invalid_argument("q_poly: n must be >= 1");
  Polynomial shifted =
      bernoulli_poly(2 * n + 1).substitute(Polynomial{Rational(1, 2), Rational(1, 2)});
  Polynomial quotient = shifted.divide_by_variable();
  if (quotient.has_odd_terms())
    throw std::logic_error("q_poly: quotient is not even in x");
  CasimirPoly q = rebase_even_to_casimir(quotient);
  q *= Rational(2) / Rational(factorial(2 * n + 1));
  return q;
}

}  // namespace sl2w
