#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl2w/diagram.hpp"
#include "sl2w/diagram_sum.hpp"

namespace sl2w {

/// Identifies one instance of a six-term relation inside a diagram: the
/// working chord x, which of its two occurrences is read first (the reference
/// endpoint T), and which of the four pictured configurations is expected.
///
/// With the word rotated so T comes first and B = the other occurrence of x,
/// the configurations are distinguished by where the two hook chords y, z
/// (each crossing x, distinct from each other) attach:
///   relation 1: y right after T, z right before B, far ends nested;
///   relation 2: y right after T, z right before B, far ends crossing;
///   relation 3: y right before T, z right before B;
///   relation 4: y right after T, z right after B.
struct SixTermSpec {
  int relation = 1;  // 1..4
  int chord = 1;     // working chord label x
  int endpoint = 0;  // 0 or 1: which occurrence of x is T
};

/// The six diagrams D1..D6 of a matched relation instance, as raw words.
/// D1 is the input diagram itself (rotated so T is first). The relation reads
///   W(D1) - W(D2) - W(D3) + W(D4) = 2 W(D5) - 2 W(D6),
/// where D2..D4 remove crossings with x and D5, D6 have one chord fewer.
struct SixTermInstance {
  std::array<std::vector<int>, 6> words;
};

namespace detail {

inline std::pair<int, int> word_positions(const std::vector<int>& w, int label) {
  int first = -1;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == label) {
      if (first < 0) first = static_cast<int>(i);
      else return {first, static_cast<int>(i)};
    }
  }
  throw std::invalid_argument("no such chord label in word");
}

inline std::vector<int> rotate_word(const std::vector<int>& w, int start) {
  std::vector<int> r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[i] = w[(start + i) % w.size()];
  return r;
}

inline int other_position(const std::vector<int>& w, int label, int not_this) {
  auto [p, q] = word_positions(w, label);
  return p == not_this ? q : p;
}

// Appends w[from..to) to out.
inline void append_range(std::vector<int>& out, const std::vector<int>& w, int from, int to) {
  for (int i = from; i < to; ++i) out.push_back(w[i]);
}

// Matches relations 1/2 on the word w with x at positions 0 and m: hooks are
// the token right after T and the token right before B. The far-end order
// decides which of the two relations is present; `want` restricts to one of
// them (0 accepts either).
inline std::optional<SixTermInstance> match_rel12(const std::vector<int>& w, int m,
                                                  int want) {
  const int L = static_cast<int>(w.size());
  const int x = w[0];
  if (m < 3) return std::nullopt;  // need two distinct tokens inside S1
  const int y = w[1], z = w[m - 1];
  if (y == x || z == x || y == z) return std::nullopt;
  const int y2 = other_position(w, y, 1);
  const int z2 = other_position(w, z, m - 1);
  if (y2 <= m || z2 <= m) return std::nullopt;  // hook chords must cross x
  const bool nested = z2 < y2;
  if (want == 1 && !nested) return std::nullopt;
  if (want == 2 && nested) return std::nullopt;

  const int f1 = 0, f2 = -1;  // fresh labels for the reduced diagrams
  SixTermInstance inst;
  inst.words[0] = w;
  if (nested) {
    // D1 = x y a z x b z c y d with segments a=[2,m-1) b=(m,z2) c=(z2,y2) d=(y2,L)
    {  // D2 = x a z x b z c y d y
      std::vector<int>& o = inst.words[1];
      o.push_back(x);
      append_range(o, w, 2, m - 1);
      o.push_back(z);
      o.push_back(x);
      append_range(o, w, m + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, L);
      o.push_back(y);
    }
    {  // D3 = x y a x z b z c y d
      std::vector<int>& o = inst.words[2];
      o.push_back(x);
      o.push_back(y);
      append_range(o, w, 2, m - 1);
      o.push_back(x);
      o.push_back(z);
      append_range(o, w, m + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, L);
    }
    {  // D4 = x a x z b z c y d y
      std::vector<int>& o = inst.words[3];
      o.push_back(x);
      append_range(o, w, 2, m - 1);
      o.push_back(x);
      o.push_back(z);
      append_range(o, w, m + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, L);
      o.push_back(y);
    }
    {  // D5 = s a s b t c t d: near ends joined, far ends joined
      std::vector<int>& o = inst.words[4];
      o.push_back(f1);
      append_range(o, w, 2, m - 1);
      o.push_back(f1);
      append_range(o, w, m + 1, z2);
      o.push_back(f2);
      append_range(o, w, z2 + 1, y2);
      o.push_back(f2);
      append_range(o, w, y2 + 1, L);
    }
    {  // D6 = w a u b w c u d: near ends joined crosswise to far ends
      std::vector<int>& o = inst.words[5];
      o.push_back(f1);
      append_range(o, w, 2, m - 1);
      o.push_back(f2);
      append_range(o, w, m + 1, z2);
      o.push_back(f1);
      append_range(o, w, z2 + 1, y2);
      o.push_back(f2);
      append_range(o, w, y2 + 1, L);
    }
  } else {
    // D1 = x y a z x b y c z d with segments a=[2,m-1) b=(m,y2) c=(y2,z2) d=(z2,L)
    {  // D2 = x a z x b y c z d y
      std::vector<int>& o = inst.words[1];
      o.push_back(x);
      append_range(o, w, 2, m - 1);
      o.push_back(z);
      o.push_back(x);
      append_range(o, w, m + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, L);
      o.push_back(y);
    }
    {  // D3 = x y a x z b y c z d
      std::vector<int>& o = inst.words[2];
      o.push_back(x);
      o.push_back(y);
      append_range(o, w, 2, m - 1);
      o.push_back(x);
      o.push_back(z);
      append_range(o, w, m + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, L);
    }
    {  // D4 = x a x z b y c z d y
      std::vector<int>& o = inst.words[3];
      o.push_back(x);
      append_range(o, w, 2, m - 1);
      o.push_back(x);
      o.push_back(z);
      append_range(o, w, m + 1, y2);
      o.push_back(y);
      append_range(o, w, y2 + 1, z2);
      o.push_back(z);
      append_range(o, w, z2 + 1, L);
      o.push_back(y);
    }
    {  // D5 = s a s b t c t d
      std::vector<int>& o = inst.words[4];
      o.push_back(f1);
      append_range(o, w, 2, m - 1);
      o.push_back(f1);
      append_range(o, w, m + 1, y2);
      o.push_back(f2);
      append_range(o, w, y2 + 1, z2);
      o.push_back(f2);
      append_range(o, w, z2 + 1, L);
    }
    {  // D6 = p a q b q c p d
      std::vector<int>& o = inst.words[5];
      o.push_back(f1);
      append_range(o, w, 2, m - 1);
      o.push_back(f2);
      append_range(o, w, m + 1, y2);
      o.push_back(f2);
      append_range(o, w, y2 + 1, z2);
      o.push_back(f1);
      append_range(o, w, z2 + 1, L);
    }
  }
  return inst;
}

// Relation 3: hooks right before T and right before B.
inline std::optional<SixTermInstance> match_rel3(const std::vector<int>& w, int m) {
  const int L = static_cast<int>(w.size());
  const int x = w[0];
  if (m < 2 || m > L - 2) return std::nullopt;  // both sides must be nonempty
  const int y = w[L - 1], z = w[m - 1];
  if (y == x || z == x || y == z) return std::nullopt;
  const int y2 = other_position(w, y, L - 1);
  const int z2 = other_position(w, z, m - 1);
  if (!(y2 >= 1 && y2 <= m - 2)) return std::nullopt;  // y must cross x
  if (!(z2 >= m + 1 && z2 <= L - 2)) return std::nullopt;  // z must cross x

  const int f1 = 0, f2 = -1;
  SixTermInstance inst;
  inst.words[0] = w;  // D1 = x a y b z x c z d y
  {                   // D2 = x y a y b z x c z d
    std::vector<int>& o = inst.words[1];
    o.push_back(x);
    o.push_back(y);
    append_range(o, w, 1, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, m - 1);
    o.push_back(z);
    o.push_back(x);
    append_range(o, w, m + 1, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, L - 1);
  }
  {  // D3 = x a y b x z c z d y
    std::vector<int>& o = inst.words[2];
    o.push_back(x);
    append_range(o, w, 1, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, m - 1);
    o.push_back(x);
    o.push_back(z);
    append_range(o, w, m + 1, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, L - 1);
    o.push_back(y);
  }
  {  // D4 = x y a y b x z c z d
    std::vector<int>& o = inst.words[3];
    o.push_back(x);
    o.push_back(y);
    append_range(o, w, 1, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, m - 1);
    o.push_back(x);
    o.push_back(z);
    append_range(o, w, m + 1, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, L - 1);
  }
  {  // D5 = n a m b m c n d: each near slot joined to the opposite far end
    std::vector<int>& o = inst.words[4];
    o.push_back(f1);
    append_range(o, w, 1, y2);
    o.push_back(f2);
    append_range(o, w, y2 + 1, m - 1);
    o.push_back(f2);
    append_range(o, w, m + 1, z2);
    o.push_back(f1);
    append_range(o, w, z2 + 1, L - 1);
  }
  {  // D6 = r a s b r c s d: near-near and far-far, crossing
    std::vector<int>& o = inst.words[5];
    o.push_back(f1);
    append_range(o, w, 1, y2);
    o.push_back(f2);
    append_range(o, w, y2 + 1, m - 1);
    o.push_back(f1);
    append_range(o, w, m + 1, z2);
    o.push_back(f2);
    append_range(o, w, z2 + 1, L - 1);
  }
  return inst;
}

// Relation 4: hooks right after T and right after B.
inline std::optional<SixTermInstance> match_rel4(const std::vector<int>& w, int m) {
  const int L = static_cast<int>(w.size());
  const int x = w[0];
  if (m < 2 || m + 1 >= L) return std::nullopt;
  const int y = w[1], z = w[m + 1];
  if (y == x || z == x || y == z) return std::nullopt;
  const int y2 = other_position(w, y, 1);
  const int z2 = other_position(w, z, m + 1);
  if (!(y2 >= m + 2 && y2 <= L - 1)) return std::nullopt;  // y must cross x
  if (!(z2 >= 2 && z2 <= m - 1)) return std::nullopt;      // z must cross x

  const int f1 = 0, f2 = -1;
  SixTermInstance inst;
  inst.words[0] = w;  // D1 = x y a z b x z c y d
  {                   // D2 = x a z b x z c y d y
    std::vector<int>& o = inst.words[1];
    o.push_back(x);
    append_range(o, w, 2, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, m);
    o.push_back(x);
    o.push_back(z);
    append_range(o, w, m + 2, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, L);
    o.push_back(y);
  }
  {  // D3 = x y a z b z x c y d
    std::vector<int>& o = inst.words[2];
    o.push_back(x);
    o.push_back(y);
    append_range(o, w, 2, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, m);
    o.push_back(z);
    o.push_back(x);
    append_range(o, w, m + 2, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, L);
  }
  {  // D4 = x a z b z x c y d y
    std::vector<int>& o = inst.words[3];
    o.push_back(x);
    append_range(o, w, 2, z2);
    o.push_back(z);
    append_range(o, w, z2 + 1, m);
    o.push_back(z);
    o.push_back(x);
    append_range(o, w, m + 2, y2);
    o.push_back(y);
    append_range(o, w, y2 + 1, L);
    o.push_back(y);
  }
  {  // D5 = m a m b n c n d
    std::vector<int>& o = inst.words[4];
    o.push_back(f1);
    append_range(o, w, 2, z2);
    o.push_back(f1);
    append_range(o, w, z2 + 1, m);
    o.push_back(f2);
    append_range(o, w, m + 2, y2);
    o.push_back(f2);
    append_range(o, w, y2 + 1, L);
  }
  {  // D6 = r a s b r c s d
    std::vector<int>& o = inst.words[5];
    o.push_back(f1);
    append_range(o, w, 2, z2);
    o.push_back(f2);
    append_range(o, w, z2 + 1, m);
    o.push_back(f1);
    append_range(o, w, m + 2, y2);
    o.push_back(f2);
    append_range(o, w, y2 + 1, L);
  }
  return inst;
}

inline std::optional<SixTermInstance> match_spec(const std::vector<int>& word,
                                                 const SixTermSpec& spec) {
  auto [p, q] = word_positions(word, spec.chord);
  const int t = spec.endpoint == 0 ? p : q;
  std::vector<int> w = rotate_word(word, t);
  const int m = other_position(w, spec.chord, 0);
  switch (spec.relation) {
    case 1:
    case 2:
      return match_rel12(w, m, spec.relation);
    case 3:
      return match_rel3(w, m);
    case 4:
      return match_rel4(w, m);
    default:
      throw std::invalid_argument("six-term relation index must be 1..4");
  }
}

}  // namespace detail

/// Tries to match the configuration named by `spec` inside d. Returns the six
/// diagrams of the relation on success.
inline std::optional<SixTermInstance> match_six_term(const ChordDiagram& d,
                                                     const SixTermSpec& spec) {
  if (spec.chord < 1 || spec.chord > static_cast<int>(d.chords()) ||
      (spec.endpoint != 0 && spec.endpoint != 1))
    throw std::invalid_argument("six-term spec out of range");
  return detail::match_spec(d.word(), spec);
}

/// The kernel element D1 - D2 - D3 + D4 - 2 D5 + 2 D6 of the matched relation.
/// Throws if the configuration is not present.
inline DiagramSum six_term_element(const ChordDiagram& d, const SixTermSpec& spec) {
  auto inst = match_six_term(d, spec);
  if (!inst)
    throw std::invalid_argument("six-term configuration not present in diagram");
  static constexpr int kSigns[6] = {1, -1, -1, 1, -2, 2};
  DiagramSum s;
  for (int i = 0; i < 6; ++i)
    s.add(ChordDiagram::from_word(inst->words[i]), Rational(kSigns[i]));
  return s;
}

/// First applicable six-term instance, searching working chords with the
/// fewest crossings first (ties by smallest label), then both endpoint
/// choices, then the four configurations.
inline std::optional<SixTermInstance> find_six_term(const ChordDiagram& d) {
  const int n = static_cast<int>(d.chords());
  std::vector<std::pair<int, int>> order;  // (crossing count, label)
  for (int i = 1; i <= n; ++i) {
    int cnt = 0;
    for (int j = 1; j <= n; ++j)
      if (j != i && chords_cross(d, i, j)) ++cnt;
    if (cnt > 0) order.emplace_back(cnt, i);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [cnt, label] : order) {
    for (int occ = 0; occ < 2; ++occ) {
      for (int rel : {1, 3, 4}) {  // relation 1 matcher accepts 2 as well
        auto [p, q] = detail::word_positions(d.word(), label);
        std::vector<int> w = detail::rotate_word(d.word(), occ == 0 ? p : q);
        const int m = detail::other_position(w, label, 0);
        std::optional<SixTermInstance> inst;
        if (rel == 1) inst = detail::match_rel12(w, m, 0);
        else if (rel == 3) inst = detail::match_rel3(w, m);
        else inst = detail::match_rel4(w, m);
        if (inst) return inst;
      }
    }
  }
  return std::nullopt;
}

/// Identifies a four-term relation element: chord `moving_chord` has one
/// endpoint (occurrence `moving_endpoint`) slid around both endpoints of
/// `fixed_chord`.
struct FourTermSpec {
  int moving_chord = 1;
  int moving_endpoint = 0;  // 0 or 1
  int fixed_chord = 2;
};

/// The alternating combination D1 - D2 + D3 - D4, where the moving endpoint
/// sits just after / just before each endpoint of the fixed chord in turn.
/// The signed coefficients always sum to zero.
inline DiagramSum four_term_element(const ChordDiagram& d, const FourTermSpec& spec) {
  const int n = static_cast<int>(d.chords());
  if (spec.moving_chord < 1 || spec.moving_chord > n || spec.fixed_chord < 1 ||
      spec.fixed_chord > n || spec.moving_chord == spec.fixed_chord ||
      (spec.moving_endpoint != 0 && spec.moving_endpoint != 1))
    throw std::invalid_argument("four-term spec out of range");

  auto [p, q] = detail::word_positions(d.word(), spec.moving_chord);
  const int pe = spec.moving_endpoint == 0 ? p : q;
  std::vector<int> base = d.word();
  base.erase(base.begin() + pe);
  auto [b1, b2] = detail::word_positions(base, spec.fixed_chord);

  DiagramSum s;
  auto add_at = [&](int idx, int sign) {
    std::vector<int> w = base;
    w.insert(w.begin() + idx, spec.moving_chord);
    s.add(ChordDiagram::from_word(w), Rational(sign));
  };
  add_at(b1 + 1, +1);  // just after the first endpoint of the fixed chord
  add_at(b1, -1);      // just before it
  add_at(b2 + 1, +1);  // just after the second endpoint
  add_at(b2, -1);      // just before it
  return s;
}

}  // namespace sl2w
