#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2w {

/// Raised when diagram input (DOW text, permutations) is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A chord diagram with n chords: a perfect matching of 2n circle points,
/// stored as a double-occurrence word read counterclockwise from the base
/// point. Words are kept normalized: labels are 1..n with first occurrences
/// in increasing order. Immutable after construction.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Builds a diagram from any double-occurrence sequence of integers,
  /// relabeling by order of first occurrence. Throws ParseError on words of
  /// odd length or with a label not occurring exactly twice.
  static ChordDiagram from_word(const std::vector<int>& raw) {
    ChordDiagram d;
    d.word_ = normalize(raw);
    return d;
  }

  unsigned chords() const { return static_cast<unsigned>(word_.size() / 2); }
  bool empty() const { return word_.empty(); }
  const std::vector<int>& word() const { return word_; }

  /// Positions (0-based) of the two endpoints of a chord label.
  std::pair<int, int> endpoints(int label) const {
    int first = -1;
    for (size_t i = 0; i < word_.size(); ++i) {
      if (word_[i] == label) {
        if (first < 0) first = static_cast<int>(i);
        else return {first, static_cast<int>(i)};
      }
    }
    throw std::invalid_argument("ChordDiagram: no such chord label");
  }

  /// Diagram read from a base point rotated k positions counterclockwise.
  ChordDiagram rotate(unsigned k) const {
    if (word_.empty()) return {};
    std::vector<int> w(word_.size());
    for (size_t i = 0; i < word_.size(); ++i) w[i] = word_[(i + k) % word_.size()];
    return from_word(w);
  }

  /// Lexicographically least normalized word over all cyclic rotations.
  /// Reflections are not quotiented.
  ChordDiagram canonical() const {
    ChordDiagram best = *this;
    for (unsigned k = 1; k < word_.size(); ++k) {
      ChordDiagram r = rotate(k);
      if (r.word_ < best.word_) best = r;
    }
    return best;
  }

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const ChordDiagram& a, const ChordDiagram& b) {
    return !(a == b);
  }
  friend bool operator<(const ChordDiagram& a, const ChordDiagram& b) {
    return a.word_ < b.word_;
  }

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(word_[i]);
    }
    return s;
  }

 private:
  static std::vector<int> normalize(const std::vector<int>& raw) {
    if (raw.size() % 2 != 0)
      throw ParseError("double-occurrence word has odd length " +
                       std::to_string(raw.size()));
    std::map<int, int> relabel, count;
    std::vector<int> w;
    w.reserve(raw.size());
    int next = 1;
    for (int t : raw) {
      auto [it, fresh] = relabel.try_emplace(t, next);
      if (fresh) ++next;
      ++count[t];
      w.push_back(it->second);
    }
    for (const auto& [t, c] : count)
      if (c != 2)
        throw ParseError("label " + std::to_string(t) + " occurs " +
                         std::to_string(c) + " times (expected 2)");
    return w;
  }

  std::vector<int> word_;
};

/// Parses whitespace-separated tokens as a double-occurrence word. Tokens are
/// arbitrary strings; labels are assigned by order of first occurrence. Empty
/// input yields the empty diagram.
inline ChordDiagram parse_dow(const std::string& text) {
  std::istringstream in(text);
  std::map<std::string, int> ids;
  std::map<std::string, int> count;
  std::vector<int> raw;
  std::string tok;
  int next = 1;
  while (in >> tok) {
    auto [it, fresh] = ids.try_emplace(tok, next);
    if (fresh) ++next;
    ++count[tok];
    raw.push_back(it->second);
  }
  for (const auto& [t, c] : count)
    if (c != 2)
      throw ParseError("label " + t + " occurs " + std::to_string(c) +
                       " times (expected 2)");
  return ChordDiagram::from_word(raw);
}

/// D(sigma): the diagram whose chords are the pairs {sigma(2i-1), sigma(2i)}.
/// sigma is given as the sequence sigma(1)..sigma(2n) and must be a bijection
/// on 1..2n.
inline ChordDiagram diagram_from_permutation(unsigned n, const std::vector<int>& sigma) {
  if (sigma.size() != 2 * n)
    throw std::invalid_argument("diagram_from_permutation: wrong length");
  std::vector<bool> seen(2 * n, false);
  for (int v : sigma) {
    if (v < 1 || v > static_cast<int>(2 * n) || seen[v - 1])
      throw std::invalid_argument("diagram_from_permutation: not a bijection on 1..2n");
    seen[v - 1] = true;
  }
  std::vector<int> w(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    w[sigma[2 * i] - 1] = static_cast<int>(i) + 1;
    w[sigma[2 * i + 1] - 1] = static_cast<int>(i) + 1;
  }
  return ChordDiagram::from_word(w);
}

/// All (2n-1)!! perfect matchings of 2n points, grouped by canonical diagram
/// with accumulated matching counts, in lexicographic order of the canonical
/// word. Each matching arises from exactly 2^n n! permutations, so
/// Sigma_n = 2^n n! * (sum over the returned classes).
inline std::vector<std::pair<ChordDiagram, std::uint64_t>> enumerate_matchings(unsigned n) {
  std::map<ChordDiagram, std::uint64_t> classes;
  std::vector<int> w(2 * n, 0);
  // Pair the smallest unmatched point with each larger unmatched point.
  auto rec = [&](auto&& self, int chord) -> void {
    size_t lo = 0;
    while (lo < w.size() && w[lo] != 0) ++lo;
    if (lo == w.size()) {
      classes[ChordDiagram::from_word(w).canonical()] += 1;
      return;
    }
    for (size_t hi = lo + 1; hi < w.size(); ++hi) {
      if (w[hi] != 0) continue;
      w[lo] = w[hi] = chord;
      self(self, chord + 1);
      w[lo] = w[hi] = 0;
    }
  };
  rec(rec, 1);
  return {classes.begin(), classes.end()};
}

/// True iff chords i and j interleave around the circle: exactly one endpoint
/// of j lies strictly between the two endpoints of i.
inline bool chords_cross(const ChordDiagram& d, int i, int j) {
  auto [a, b] = d.endpoints(i);
  auto [p, q] = d.endpoints(j);
  bool p_in = a < p && p < b;
  bool q_in = a < q && q < b;
  return p_in != q_in;
}

/// All crossing pairs {i, j}, i < j.
inline std::vector<std::pair<int, int>> crossings(const ChordDiagram& d) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(d.chords());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (chords_cross(d, i, j)) out.emplace_back(i, j);
  return out;
}

/// Connected sum with the block of d2 inserted after position pos of d1
/// (pos = 0 inserts at the base point). The result is normalized, not
/// canonicalized; well-definedness modulo 4T is a theorem about W, not
/// enforced structurally.
inline ChordDiagram connected_sum_at(const ChordDiagram& d1, const ChordDiagram& d2,
                                     unsigned pos) {
  if (pos > d1.word().size())
    throw std::invalid_argument("connected_sum_at: position out of range");
  int shift = static_cast<int>(d1.chords());
  std::vector<int> w;
  w.reserve(d1.word().size() + d2.word().size());
  w.insert(w.end(), d1.word().begin(), d1.word().begin() + pos);
  for (int t : d2.word()) w.push_back(t + shift);
  w.insert(w.end(), d1.word().begin() + pos, d1.word().end());
  return ChordDiagram::from_word(w);
}

inline ChordDiagram connected_sum(const ChordDiagram& d1, const ChordDiagram& d2) {
  return connected_sum_at(d1, d2, 0);
}

/// Maximal factorization into connected-sum factors: repeatedly extracts a
/// minimal proper cyclic interval that contains both endpoints of every chord
/// it touches. No returned factor splits further.
inline std::vector<ChordDiagram> split_factors(const ChordDiagram& d) {
  std::vector<ChordDiagram> factors;
  std::vector<int> w = d.word();
  while (!w.empty()) {
    const size_t len = w.size();
    size_t best_span = 0, best_start = 0;
    bool found = false;
    // Smallest closed interval wins; scan spans in increasing length.
    for (size_t span = 2; span < len && !found; span += 2) {
      for (size_t start = 0; start < len; ++start) {
        std::map<int, int> cnt;
        for (size_t k = 0; k < span; ++k) ++cnt[w[(start + k) % len]];
        bool closed = true;
        for (const auto& [lbl, c] : cnt)
          if (c != 2) { closed = false; break; }
        if (closed) {
          best_span = span;
          best_start = start;
          found = true;
          break;
        }
      }
    }
    if (!found) {
      factors.push_back(ChordDiagram::from_word(w));
      break;
    }
    std::vector<int> piece, rest;
    std::vector<bool> inside(len, false);
    for (size_t k = 0; k < best_span; ++k) inside[(best_start + k) % len] = true;
    for (size_t i = 0; i < len; ++i) {
      size_t j = (best_start + i) % len;
      (inside[j] ? piece : rest).push_back(w[j]);
    }
    factors.push_back(ChordDiagram::from_word(piece));
    w = ChordDiagram::from_word(rest).word();
  }
  return factors;
}

}  // namespace sl2w
