#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sl2w/polynomial.hpp"

namespace sl2w {

/// Truncated power series in h containing only even powers: terms()[k] is the
/// coefficient polynomial of h^{2k}, for k = 0..order(). Operations preserve
/// the truncation order of their operands and never extend it; combining two
/// series truncates to the shorter one. Equality likewise compares termwise up
/// to the shared order.
class EvenSeries {
 public:
  explicit EvenSeries(unsigned order) : terms_(order + 1) {}
  explicit EvenSeries(std::vector<CasimirPoly> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("EvenSeries: no terms");
  }

  unsigned order() const { return static_cast<unsigned>(terms_.size()) - 1; }
  const CasimirPoly& term(unsigned k) const { return terms_.at(k); }
  void set_term(unsigned k, CasimirPoly p) { terms_.at(k) = std::move(p); }
  const std::vector<CasimirPoly>& terms() const { return terms_; }

  friend bool operator==(const EvenSeries& a, const EvenSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    for (unsigned k = 0; k <= n; ++k)
      if (a.terms_[k] != b.terms_[k]) return false;
    return true;
  }
  friend bool operator!=(const EvenSeries& a, const EvenSeries& b) { return !(a == b); }

  friend EvenSeries operator+(const EvenSeries& a, const EvenSeries& b) {
    EvenSeries r(std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r.terms_[k] = a.terms_[k] + b.terms_[k];
    return r;
  }

  friend EvenSeries operator*(const EvenSeries& a, const EvenSeries& b) {
    EvenSeries r(std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k)
      for (unsigned i = 0; i <= k; ++i) r.terms_[k] += a.terms_[i] * b.terms_[k - i];
    return r;
  }

 private:
  std::vector<CasimirPoly> terms_;
};

}  // namespace sl2w
