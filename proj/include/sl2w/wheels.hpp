#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sl2w/diagram.hpp"
#include "sl2w/polynomial.hpp"
#include "sl2w/rational.hpp"
#include "sl2w/weight.hpp"

namespace sl2w {

/// Disjoint union of wheels w_{2n_1} u ... u w_{2n_k}, recorded as the
/// multiset of half-leg counts {n_1, ..., n_k}.
struct WheelMonomial {
  std::vector<unsigned> parts;

  explicit WheelMonomial(std::vector<unsigned> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("WheelMonomial: no parts");
    for (unsigned v : parts)
      if (v < 1) throw std::invalid_argument("WheelMonomial: parts must be >= 1");
    std::sort(parts.begin(), parts.end());
  }

  unsigned total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }
  unsigned count() const { return static_cast<unsigned>(parts.size()); }
};

/// W(Sigma_n) = 2^n n! * sum over perfect-matching classes of
/// multiplicity * W(diagram). Matching evaluation may be spread over worker
/// threads; the final summation order is fixed, so the result is identical
/// for every thread count.
inline CasimirPoly eval_sigma(unsigned n, const Evaluator& ev, unsigned threads = 1) {
  if (n == 0) return CasimirPoly(Rational(1));
  const auto classes = enumerate_matchings(n);

  std::vector<CasimirPoly> values(classes.size());
  threads = std::max(1u, threads);
  if (threads == 1 || classes.size() < 2) {
    for (size_t i = 0; i < classes.size(); ++i) values[i] = ev.eval_cv(classes[i].first);
  } else {
    std::vector<std::thread> pool;
    const unsigned workers = std::min<size_t>(threads, classes.size());
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < classes.size(); i += workers)
          values[i] = ev.eval_cv(classes[i].first);
      });
    for (auto& th : pool) th.join();
  }

  CasimirPoly sum;
  for (size_t i = 0; i < classes.size(); ++i)
    sum += Rational(BigInt(classes[i].second)) * values[i];
  return Rational(pow2(n) * factorial(n)) * sum;
}

/// W(w_{2n_1} u ... u w_{2n_k}) = 2^{n+k}/(2n)! * W(Sigma_n), n = sum of
/// parts. The value depends only on n and k, not on the individual parts.
inline CasimirPoly eval_wheel_union(const WheelMonomial& m, const Evaluator& ev,
                                    unsigned threads = 1) {
  const unsigned n = m.total();
  const unsigned k = m.count();
  return (Rational(pow2(n + k)) / Rational(factorial(2 * n))) *
         eval_sigma(n, ev, threads);
}

/// Slow self-check path: W(Sigma_n) summed over all (2n)! permutations, with
/// no matching grouping. Only sensible for n <= 3.
inline CasimirPoly sigma_by_permutations(unsigned n, const Evaluator& ev) {
  if (n == 0) return CasimirPoly(Rational(1));
  std::vector<int> sigma(2 * n);
  std::iota(sigma.begin(), sigma.end(), 1);
  CasimirPoly sum;
  do {
    sum += ev.eval_cv(diagram_from_permutation(n, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

}  // namespace sl2w
