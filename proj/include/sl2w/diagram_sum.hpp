#pragma once

#include <map>
#include <string>
#include <utility>

#include "sl2w/diagram.hpp"
#include "sl2w/rational.hpp"

namespace sl2w {

/// Formal linear combination of chord diagrams with exact rational
/// coefficients (an element of the algebra A). Keys are canonical forms and
/// zero coefficients are never stored.
class DiagramSum {
 public:
  DiagramSum() = default;

  void add(const ChordDiagram& d, const Rational& coeff) {
    if (coeff.is_zero()) return;
    ChordDiagram key = d.canonical();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const std::map<ChordDiagram, Rational>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ChordDiagram& d) const {
    auto it = terms_.find(d.canonical());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient_sum() const {
    Rational s(0);
    for (const auto& [d, c] : terms_) s += c;
    return s;
  }

  Rational abs_coefficient_sum() const {
    Rational s(0);
    for (const auto& [d, c] : terms_) s += c.abs();
    return s;
  }

  friend bool operator==(const DiagramSum& a, const DiagramSum& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
      if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) s += "-";
      Rational m = c.abs();
      if (m != Rational(1)) s += m.to_string() + "*";
      s += "(" + d.to_string() + ")";
    }
    return s;
  }

 private:
  std::map<ChordDiagram, Rational> terms_;
};

}  // namespace sl2w
