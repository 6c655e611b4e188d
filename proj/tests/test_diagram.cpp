#include <algorithm>
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "sl2w/diagram.hpp"
#include "sl2w/rational.hpp"

using namespace sl2w;

namespace {

std::mt19937 rng(987654);

ChordDiagram random_diagram(unsigned n) {
  std::vector<int> pts(2 * n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> w(2 * n);
  for (unsigned i = 0; i < n; ++i) {
    w[pts[2 * i]] = static_cast<int>(i) + 1;
    w[pts[2 * i + 1]] = static_cast<int>(i) + 1;
  }
  return ChordDiagram::from_word(w);
}

std::uint64_t double_factorial(unsigned m) {  // (2m-1)!!
  std::uint64_t r = 1;
  for (unsigned k = 1; k <= m; ++k) r *= 2 * k - 1;
  return r;
}

}  // namespace

TEST_CASE("parse_dow") {
  CHECK(parse_dow("1 2 1 2").word() == std::vector<int>{1, 2, 1, 2});
  CHECK(parse_dow("a b b a").word() == std::vector<int>{1, 2, 2, 1});
  CHECK(parse_dow("").empty());
  CHECK_THROWS_WITH(parse_dow("1 2 1"), Catch::Matchers::ContainsSubstring("label 2"));
  CHECK_THROWS_AS(parse_dow("1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_dow("1 1 1 1"), ParseError);
  // idempotent on normalized input
  ChordDiagram d = parse_dow("1 2 3 1 3 2");
  CHECK(parse_dow(d.to_string()) == d);
}

TEST_CASE("canonicalize") {
  CHECK(parse_dow("2 1 2 1").canonical() == parse_dow("1 2 1 2"));
  CHECK(parse_dow("1 2 2 1").canonical() == parse_dow("1 1 2 2"));
  CHECK(ChordDiagram().canonical().empty());
}

TEST_CASE("canonical form is idempotent and rotation invariant") {
  for (int iter = 0; iter < 40; ++iter) {
    ChordDiagram d = random_diagram(1 + iter % 6);
    ChordDiagram c = d.canonical();
    CHECK(c.canonical() == c);
    for (unsigned k = 0; k < 2 * d.chords(); ++k) CHECK(d.rotate(k).canonical() == c);
  }
}

TEST_CASE("diagram_from_permutation") {
  CHECK(diagram_from_permutation(2, {1, 2, 3, 4}).word() ==
        std::vector<int>{1, 1, 2, 2});
  CHECK(diagram_from_permutation(2, {1, 3, 2, 4}).word() ==
        std::vector<int>{1, 2, 1, 2});
  CHECK(diagram_from_permutation(1, {1, 2}).word() == std::vector<int>{1, 1});
  CHECK(diagram_from_permutation(1, {2, 1}).word() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(diagram_from_permutation(2, {1, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_permutation(2, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("diagram_from_permutation has the 2^n n! redundancy") {
  std::vector<int> sigma = {3, 6, 1, 4, 2, 5};
  ChordDiagram base = diagram_from_permutation(3, sigma);
  // swapping the two entries of a pair
  for (unsigned i = 0; i < 3; ++i) {
    std::vector<int> s = sigma;
    std::swap(s[2 * i], s[2 * i + 1]);
    CHECK(diagram_from_permutation(3, s) == base);
  }
  // permuting the pairs
  std::vector<int> swapped = {1, 4, 3, 6, 2, 5};
  CHECK(diagram_from_permutation(3, swapped) == base);
}

TEST_CASE("enumerate_matchings") {
  auto m1 = enumerate_matchings(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].first == parse_dow("1 1"));
  CHECK(m1[0].second == 1);

  auto m2 = enumerate_matchings(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0].first == parse_dow("1 1 2 2"));
  CHECK(m2[0].second == 2);
  CHECK(m2[1].first == parse_dow("1 2 1 2"));
  CHECK(m2[1].second == 1);

  for (unsigned n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& [d, mult] : enumerate_matchings(n)) {
      CHECK(d.chords() == n);
      total += mult;
    }
    CHECK(total == double_factorial(n));
    // each matching stands for 2^n n! permutations
    CHECK(Rational(BigInt(total)) * Rational(pow2(n) * factorial(n)) ==
          Rational(factorial(2 * n)));
  }
  std::uint64_t total5 = 0;
  for (const auto& [d, mult] : enumerate_matchings(5)) total5 += mult;
  CHECK(total5 == 945);
}

TEST_CASE("crossings") {
  CHECK(crossings(parse_dow("1 2 1 2")) ==
        std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(crossings(parse_dow("1 1 2 2")).empty());
  CHECK(crossings(parse_dow("1 2 3 1 2 3")) ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("connected_sum") {
  CHECK(connected_sum(parse_dow("1 1"), parse_dow("1 1")) == parse_dow("1 1 2 2"));
  ChordDiagram d = parse_dow("1 2 1 2");
  CHECK(connected_sum(d, ChordDiagram()) == d);
  CHECK(connected_sum(ChordDiagram(), d) == d);
  CHECK(connected_sum(d, parse_dow("1 1")) == parse_dow("1 1 2 3 2 3"));
  CHECK_THROWS_AS(connected_sum_at(d, d, 9), std::invalid_argument);
}

TEST_CASE("split_factors") {
  auto factors = split_factors(parse_dow("1 1 2 2"));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == parse_dow("1 1"));
  CHECK(factors[1] == parse_dow("1 1"));

  auto prime = split_factors(parse_dow("1 2 1 2"));
  REQUIRE(prime.size() == 1);
  CHECK(prime[0] == parse_dow("1 2 1 2"));

  CHECK(split_factors(ChordDiagram()).empty());

  // nested chords split fully
  auto nested = split_factors(parse_dow("1 2 3 3 2 1"));
  REQUIRE(nested.size() == 3);
  for (const auto& f : nested) CHECK(f == parse_dow("1 1"));

  // a crossing block stays together next to an isolated chord
  auto mixed = split_factors(parse_dow("1 2 1 2 3 3"));
  REQUIRE(mixed.size() == 2);
  std::vector<ChordDiagram> sorted(mixed.begin(), mixed.end());
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] == parse_dow("1 1"));
  CHECK(sorted[1] == parse_dow("1 2 1 2"));
}

TEST_CASE("split factors reassemble to the same diagram for sequential splits") {
  for (int iter = 0; iter < 30; ++iter) {
    ChordDiagram a = random_diagram(1 + iter % 3), b = random_diagram(1 + (iter / 3) % 3);
    ChordDiagram sum = connected_sum(a, b);
    auto factors = split_factors(sum);
    ChordDiagram rebuilt;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      rebuilt = connected_sum(rebuilt, *it);
    // same factor multiset either way
    auto refactored = split_factors(rebuilt);
    std::sort(factors.begin(), factors.end());
    std::sort(refactored.begin(), refactored.end());
    std::vector<ChordDiagram> canon_a, canon_b;
    for (auto& f : factors) canon_a.push_back(f.canonical());
    for (auto& f : refactored) canon_b.push_back(f.canonical());
    std::sort(canon_a.begin(), canon_a.end());
    std::sort(canon_b.begin(), canon_b.end());
    CHECK(canon_a == canon_b);
  }
}
