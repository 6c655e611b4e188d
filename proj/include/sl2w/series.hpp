#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sl2w/bernoulli.hpp"
#include "sl2w/even_series.hpp"
#include "sl2w/wheels.hpp"

namespace sl2w {

/// The approximation series 1 + sum_n h^{2n} W(Sigma_n) / (2^n (2n)! (2n+1)!),
/// at weight-system level (term n is a polynomial in c).
inline EvenSeries main_series(unsigned N, const Evaluator& ev, unsigned threads = 1) {
  EvenSeries s(N);
  s.set_term(0, CasimirPoly(Rational(1)));
  for (unsigned n = 1; n <= N; ++n) {
    Rational denom(pow2(n) * factorial(2 * n) * factorial(2 * n + 1));
    s.set_term(n, (Rational(1) / denom) * eval_sigma(n, ev, threads));
  }
  return s;
}

/// W of the Kontsevich integral of the unknot: sum_n q_n(c) h^{2n}.
inline EvenSeries q_series(unsigned N) {
  EvenSeries s(N);
  s.set_term(0, CasimirPoly(Rational(1)));
  for (unsigned n = 1; n <= N; ++n) s.set_term(n, q_poly(n));
  return s;
}

/// All multisets of positive integers summing to n, as weakly decreasing
/// sequences in lexicographically decreasing order ({n} first).
inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned rest, unsigned maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

using BernoulliFn = std::function<Rational(unsigned)>;

/// Image of the wheels exponential 1 + exp(sum b_{2n} h^{2n} w_{2n}) under W,
/// expanded combinatorially: term n sums over multisets {n_1,...,n_k} with
/// sum n_i = n the value (prod_i b_{2 n_i}) / (prod_j mult_j!) *
/// W(w_{2n_1} u ... u w_{2n_k}). The symmetry factor 1/prod(mult_j!) converts
/// the exponential's 1/k! over ordered tuples into a sum over multisets.
inline EvenSeries wheels_exp_series_with(unsigned N, const Evaluator& ev,
                                         const BernoulliFn& b, unsigned threads = 1) {
  EvenSeries s(N);
  s.set_term(0, CasimirPoly(Rational(1)));
  for (unsigned n = 1; n <= N; ++n) {
    CasimirPoly term;
    for (const auto& parts : partitions(n)) {
      Rational coeff(1);
      std::map<unsigned, unsigned> mult;
      for (unsigned p : parts) {
        coeff *= b(2 * p);
        ++mult[p];
      }
      for (const auto& [part, m] : mult) coeff /= Rational(factorial(m));
      term += coeff * eval_wheel_union(WheelMonomial(parts), ev, threads);
    }
    s.set_term(n, term);
  }
  return s;
}

inline EvenSeries wheels_exp_series(unsigned N, const Evaluator& ev,
                                    unsigned threads = 1) {
  return wheels_exp_series_with(N, ev, [](unsigned k) { return modified_bernoulli(k); },
                                threads);
}

struct TermReport {
  unsigned n = 0;
  CasimirPoly main, q, wheels;
  bool equal = false;     // three-way termwise equality
  bool theorem4 = false;  // both wheel identities plus degree/top-coefficient checks
};

/// Per-order comparison of the three series, with the two wheel-formula
/// identities. Serializes to
///   {"order": N, "terms": [{"n":..., "main":..., "q":..., "wheels":...,
///     "equal": bool, "theorem4": bool}], "pass": bool}
/// with polynomials in the CasimirPoly JSON form.
struct Report {
  unsigned order = 0;
  std::vector<TermReport> terms;
  bool pass = false;

  std::string to_json() const {
    std::string out = "{\"order\":" + std::to_string(order) + ",\"terms\":[";
    for (size_t i = 0; i < terms.size(); ++i) {
      const TermReport& t = terms[i];
      if (i) out += ",";
      out += "{\"n\":" + std::to_string(t.n) + ",\"main\":" + t.main.to_json() +
             ",\"q\":" + t.q.to_json() + ",\"wheels\":" + t.wheels.to_json() +
             ",\"equal\":" + (t.equal ? "true" : "false") +
             ",\"theorem4\":" + (t.theorem4 ? "true" : "false") + "}";
    }
    out += "],\"pass\":";
    out += pass ? "true" : "false";
    out += "}";
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const TermReport& t : terms) {
      out += "n=" + std::to_string(t.n) + ": main = " + t.main.to_string("c") +
             " | q = " + t.q.to_string("c") + " | wheels = " + t.wheels.to_string("c") +
             " | equal=" + (t.equal ? "yes" : "NO") +
             " theorem4=" + (t.theorem4 ? "yes" : "NO") + "\n";
    }
    out += pass ? "PASS\n" : "FAIL\n";
    return out;
  }
};

inline Report verify_with(unsigned N, const Evaluator& ev, const BernoulliFn& b,
                          unsigned threads = 1) {
  if (N < 1) throw std::invalid_argument("verify: order must be >= 1");
  Report rep;
  rep.order = N;
  EvenSeries main = main_series(N, ev, threads);
  EvenSeries qs = q_series(N);
  EvenSeries wheels = wheels_exp_series_with(N, ev, b, threads);
  rep.pass = true;
  for (unsigned n = 1; n <= N; ++n) {
    TermReport t;
    t.n = n;
    t.main = main.term(n);
    t.q = qs.term(n);
    t.wheels = wheels.term(n);
    t.equal = t.main == t.q && t.q == t.wheels;

    const CasimirPoly qn = q_poly(n);
    const CasimirPoly wheel = eval_wheel_union(WheelMonomial({n}), ev, threads);
    const CasimirPoly sigma = eval_sigma(n, ev, threads);
    const Rational wheel_scale(pow2(2 * n + 1) * factorial(2 * n + 1));
    const Rational sigma_scale(pow2(n) * factorial(2 * n) * factorial(2 * n + 1));
    bool identities = wheel == wheel_scale * qn && sigma == sigma_scale * qn;
    bool shape = qn.degree() == static_cast<int>(n) && qn.coeff(0).is_zero() &&
                 qn.leading() == Rational(1) / Rational(pow2(n) * factorial(2 * n + 1)) &&
                 sigma.degree() == static_cast<int>(n) &&
                 sigma.leading() == Rational(factorial(2 * n));
    t.theorem4 = identities && shape;

    rep.pass = rep.pass && t.equal && t.theorem4;
    rep.terms.push_back(std::move(t));
  }
  return rep;
}

/// Executable form of the term-by-term verification: main = q = wheels for
/// each order, plus the wheel-formula identities. Failures are reported, not
/// thrown.
inline Report verify(unsigned N, const Evaluator& ev, unsigned threads = 1) {
  return verify_with(N, ev, [](unsigned k) { return modified_bernoulli(k); }, threads);
}

}  // namespace sl2w
