#pragma once

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl2w/diagram.hpp"
#include "sl2w/diagram_sum.hpp"
#include "sl2w/polynomial.hpp"
#include "sl2w/rational.hpp"

namespace sl2w {

/// Small dense matrix of exact rationals, row-major.
struct RatMatrix {
  unsigned dim = 0;
  std::vector<Rational> a;

  explicit RatMatrix(unsigned d) : dim(d), a(d * d) {}
  Rational& at(unsigned i, unsigned j) { return a[i * dim + j]; }
  const Rational& at(unsigned i, unsigned j) const { return a[i * dim + j]; }

  static RatMatrix identity(unsigned d) {
    RatMatrix m(d);
    for (unsigned i = 0; i < d; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    RatMatrix r(x.dim);
    for (unsigned i = 0; i < x.dim; ++i)
      for (unsigned k = 0; k < x.dim; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (unsigned j = 0; j < x.dim; ++j)
          r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }

  RatMatrix scaled(const Rational& s) const {
    RatMatrix r = *this;
    for (auto& v : r.a) v *= s;
    return r;
  }

  Rational trace() const {
    Rational t(0);
    for (unsigned i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }

  /// Returns the scalar s with M = s*I, or throws if M is not scalar.
  Rational as_scalar() const {
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = 0; j < dim; ++j)
        if (i != j ? !at(i, j).is_zero() : at(i, j) != at(0, 0))
          throw std::logic_error("oracle: word sum is not a scalar matrix");
    return at(0, 0);
  }
};

/// The irreducible sl2 representation of highest weight lambda on basis
/// v_0..v_lambda: h v_j = (lambda - 2j) v_j, f v_j = v_{j+1},
/// e v_j = j (lambda - j + 1) v_{j-1}.
struct IrrepAction {
  unsigned lambda;
  RatMatrix e, f, h;
};

inline IrrepAction irrep_action(unsigned lambda) {
  const unsigned d = lambda + 1;
  IrrepAction rep{lambda, RatMatrix(d), RatMatrix(d), RatMatrix(d)};
  for (unsigned j = 0; j < d; ++j) {
    rep.h.at(j, j) = Rational(static_cast<long long>(lambda) - 2ll * j);
    if (j + 1 < d) rep.f.at(j + 1, j) = Rational(1);
    if (j >= 1)
      rep.e.at(j - 1, j) =
          Rational(static_cast<long long>(j) * (lambda - j + 1));
  }
  return rep;
}

/// Scalar by which the Casimir c = ef + fe + h^2/2 acts on the irrep of
/// highest weight lambda, under the trace form of the 2-dim representation.
inline Rational casimir_value(unsigned lambda) {
  return Rational(static_cast<long long>(lambda) * (lambda + 2), 2);
}

/// A dual pair of bases of sl2 for the trace form Phi(x, y) = Tr(xy) in the
/// 2-dim representation, each element stored as coefficients over (e, f, h).
struct DualBasisPair {
  std::array<std::array<Rational, 3>, 3> a, b;
};

/// Primary pair: a = (e, f, h), b = (f, e, h/2).
inline DualBasisPair standard_dual_pair() {
  DualBasisPair p;
  p.a = {{{Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(1), Rational(0)},
          {Rational(0), Rational(0), Rational(1)}}};
  p.b = {{{Rational(0), Rational(1), Rational(0)},
          {Rational(1), Rational(0), Rational(0)},
          {Rational(0), Rational(0), Rational(1, 2)}}};
  return p;
}

/// Alternate all-rational pair: a = (e+f, e-f, h), b = ((e+f)/2, -(e-f)/2, h/2).
inline DualBasisPair alternate_dual_pair() {
  DualBasisPair p;
  p.a = {{{Rational(1), Rational(1), Rational(0)},
          {Rational(1), Rational(-1), Rational(0)},
          {Rational(0), Rational(0), Rational(1)}}};
  p.b = {{{Rational(1, 2), Rational(1, 2), Rational(0)},
          {Rational(-1, 2), Rational(1, 2), Rational(0)},
          {Rational(0), Rational(0), Rational(1, 2)}}};
  return p;
}

namespace detail {

inline RatMatrix materialize(const std::array<Rational, 3>& coeffs,
                             const IrrepAction& rep) {
  RatMatrix m(rep.lambda + 1);
  m += rep.e.scaled(coeffs[0]);
  m += rep.f.scaled(coeffs[1]);
  m += rep.h.scaled(coeffs[2]);
  return m;
}

}  // namespace detail

/// Checks Phi(a_i, b_j) = delta_ij for the pair, with Phi the trace form in
/// the 2-dim representation.
inline bool dual_pair_is_valid(const DualBasisPair& pair) {
  IrrepAction rep = irrep_action(1);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      Rational phi =
          (detail::materialize(pair.a[i], rep) * detail::materialize(pair.b[j], rep))
              .trace();
      if (phi != Rational(i == j ? 1 : 0)) return false;
    }
  return true;
}

/// Brute-force word sum straight from the weight-system definition: every
/// chord is labelled 1..3; the first endpoint carries a_i, the second b_i;
/// the word of 2n matrices is multiplied in circle order and summed over all
/// 3^n labelings. The result must act as a scalar on the irrep, and that
/// scalar is returned.
inline Rational word_scalar(const ChordDiagram& d, unsigned lambda,
                            const DualBasisPair& pair = standard_dual_pair()) {
  if (!dual_pair_is_valid(pair))
    throw std::logic_error("oracle: bases are not dual for the trace form");
  const unsigned n = d.chords();
  const unsigned dim = lambda + 1;
  if (n == 0) return Rational(1);

  IrrepAction rep = irrep_action(lambda);
  std::array<RatMatrix, 3> amat = {detail::materialize(pair.a[0], rep),
                                   detail::materialize(pair.a[1], rep),
                                   detail::materialize(pair.a[2], rep)};
  std::array<RatMatrix, 3> bmat = {detail::materialize(pair.b[0], rep),
                                   detail::materialize(pair.b[1], rep),
                                   detail::materialize(pair.b[2], rep)};

  // first_occurrence[p]: position p carries a (true) or b (false)
  const std::vector<int>& w = d.word();
  std::vector<bool> first(w.size());
  std::vector<bool> seen(n + 1, false);
  for (size_t p = 0; p < w.size(); ++p) {
    first[p] = !seen[w[p]];
    seen[w[p]] = true;
  }

  RatMatrix sum(dim);
  std::vector<unsigned> label(n, 0);  // generator index per chord, base-3 counter
  while (true) {
    RatMatrix prod = RatMatrix::identity(dim);
    for (size_t p = 0; p < w.size(); ++p) {
      const unsigned g = label[w[p] - 1];
      prod = prod * (first[p] ? amat[g] : bmat[g]);
    }
    sum += prod;
    size_t k = 0;
    while (k < n && label[k] == 2) label[k++] = 0;
    if (k == n) break;
    ++label[k];
  }
  return sum.as_scalar();
}

/// Independent evaluation of W(d): word sums at lambda = 0..n interpolated
/// through the nodes (casimir_value(lambda), scalar) to the unique polynomial
/// of degree <= n in c.
inline CasimirPoly eval_oracle(const ChordDiagram& d,
                               const DualBasisPair& pair = standard_dual_pair()) {
  const unsigned n = d.chords();
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(n + 1);
  for (unsigned lambda = 0; lambda <= n; ++lambda)
    pts.emplace_back(casimir_value(lambda), word_scalar(d, lambda, pair));
  return lagrange_interpolate(pts);
}

/// Memoizing wrapper around eval_oracle (standard dual pair), keyed by
/// canonical form. Shares the same thread-safety contract as Evaluator.
class OracleEvaluator {
 public:
  CasimirPoly eval(const ChordDiagram& d) const {
    ChordDiagram canon = d.canonical();
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = memo_.find(canon.word());
      if (it != memo_.end()) return it->second;
    }
    CasimirPoly value = eval_oracle(canon);
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(canon.word(), value);
    return value;
  }

  CasimirPoly eval_sum(const DiagramSum& s) const {
    CasimirPoly total;
    for (const auto& [d, coeff] : s.terms()) total += coeff * eval(d);
    return total;
  }

 private:
  mutable std::map<std::vector<int>, CasimirPoly> memo_;
  mutable std::mutex mu_;
};

}  // namespace sl2w
