#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sl2w/diagram.hpp"
#include "sl2w/diagram_sum.hpp"
#include "sl2w/polynomial.hpp"
#include "sl2w/relations.hpp"

namespace sl2w {

/// The sl2 weight system W: A -> Q[c], computed by the six-term recurrence.
///
/// Base cases: the empty diagram evaluates to 1, an isolated chord contributes
/// a factor c, and a diagram that splits as a connected sum evaluates to the
/// product of its factors. A hairpin chord (its endpoints flanking exactly one
/// endpoint of another chord) strips off a factor (c - 2): with dual bases the
/// flanked letter X contributes sum_i a_i X b_i = c X + sum_i a_i [X, b_i] =
/// (c - 2) X, the last step by the ad-invariance of the Casimir tensor.
/// Otherwise a six-term relation is applied to a working chord, rewriting
/// W(D1) = W(D2) + W(D3) - W(D4) + 2 W(D5) - 2 W(D6); D2..D4 lose crossings
/// on the working chord and D5, D6 lose a chord, so the recursion terminates.
/// Results are memoized by canonical word; the cache is safe to share between
/// concurrent workers.
class Evaluator {
 public:
  CasimirPoly eval_cv(const ChordDiagram& d) const {
    const unsigned n = d.chords();
    Ctx ctx;
    ctx.budget = 1000 + 10ull * n * (1ull << std::min(n, 40u));
    return eval_impl(d.canonical(), ctx);
  }

  CasimirPoly eval_sum(const DiagramSum& s) const {
    CasimirPoly total;
    for (const auto& [d, coeff] : s.terms()) total += coeff * eval_cv(d);
    return total;
  }

  size_t cache_size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return memo_.size();
  }

 private:
  struct Ctx {
    std::uint64_t steps = 0;
    std::uint64_t budget = 0;
  };

  // Removes a chord both of whose endpoints are cyclically adjacent to a
  // single other endpoint (the flanked chord necessarily crosses it).
  static std::optional<ChordDiagram> strip_hairpin(const ChordDiagram& d) {
    const std::vector<int>& w = d.word();
    const int L = static_cast<int>(w.size());
    for (int label = 1; label <= static_cast<int>(d.chords()); ++label) {
      auto [p, q] = d.endpoints(label);
      const int inner = q - p - 1, outer = L - (q - p) - 1;
      if (inner != 1 && outer != 1) continue;
      std::vector<int> rest;
      rest.reserve(L - 2);
      for (int i = 0; i < L; ++i)
        if (w[i] != label) rest.push_back(w[i]);
      return ChordDiagram::from_word(rest);
    }
    return std::nullopt;
  }

  CasimirPoly eval_impl(const ChordDiagram& canon, Ctx& ctx) const {
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = memo_.find(canon.word());
      if (it != memo_.end()) return it->second;
    }

    CasimirPoly result;
    const unsigned n = canon.chords();
    if (n == 0) {
      result = CasimirPoly(Rational(1));
    } else if (std::vector<ChordDiagram> factors = split_factors(canon);
               factors.size() > 1) {
      result = CasimirPoly(Rational(1));
      for (const ChordDiagram& f : factors) result *= eval_impl(f.canonical(), ctx);
    } else if (n == 1) {
      result = CasimirPoly{Rational(0), Rational(1)};  // c
    } else if (std::optional<ChordDiagram> stripped = strip_hairpin(canon)) {
      result = CasimirPoly{Rational(-2), Rational(1)} *
               eval_impl(stripped->canonical(), ctx);
    } else {
      auto inst = find_six_term(canon);
      if (!inst)
        throw std::logic_error("no six-term configuration matches diagram: " +
                               canon.to_string());
      if (++ctx.steps > ctx.budget)
        throw std::runtime_error("six-term reduction exceeded its step budget at: " +
                                 canon.to_string());
      static constexpr int kCoeff[5] = {1, 1, -1, 2, -2};  // D2..D6
      for (int i = 0; i < 5; ++i) {
        ChordDiagram di = ChordDiagram::from_word(inst->words[i + 1]).canonical();
        result += Rational(kCoeff[i]) * eval_impl(di, ctx);
      }
    }

    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(canon.word(), result);
    return result;
  }

  mutable std::map<std::vector<int>, CasimirPoly> memo_;
  mutable std::mutex mu_;
};

/// The extra kernel generator beyond the six-term elements:
/// (1 2 1 2) + 2 (1 1) - (1 1)(1 1).
inline DiagramSum kernel_witness() {
  DiagramSum s;
  s.add(ChordDiagram::from_word({1, 2, 1, 2}), Rational(1));
  s.add(ChordDiagram::from_word({1, 1}), Rational(2));
  s.add(ChordDiagram::from_word({1, 1, 2, 2}), Rational(-1));
  return s;
}

}  // namespace sl2w
