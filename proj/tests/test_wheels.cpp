#include "catch2/catch_amalgamated.hpp"
#include "sl2w/bernoulli.hpp"
#include "sl2w/wheels.hpp"

using namespace sl2w;

namespace {

Evaluator& shared_evaluator() {
  static Evaluator ev;
  return ev;
}

}  // namespace

TEST_CASE("eval_sigma small values") {
  Evaluator& ev = shared_evaluator();
  CHECK(eval_sigma(0, ev) == CasimirPoly(Rational(1)));
  CHECK(eval_sigma(1, ev) == CasimirPoly{Rational(0), Rational(2)});
  CHECK(eval_sigma(2, ev) == CasimirPoly{Rational(0), Rational(-16), Rational(24)});
}

TEST_CASE("matching grouping matches the full permutation sum") {
  Evaluator& ev = shared_evaluator();
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(eval_sigma(n, ev) == sigma_by_permutations(n, ev));
}

TEST_CASE("eval_sigma degree and top coefficient") {
  Evaluator& ev = shared_evaluator();
  for (unsigned n = 1; n <= 5; ++n) {
    CasimirPoly s = eval_sigma(n, ev);
    CHECK(s.degree() == static_cast<int>(n));
    CHECK(s.leading() == Rational(factorial(2 * n)));
    CHECK(s.coeff(0).is_zero());
  }
}

TEST_CASE("wheel union values") {
  Evaluator& ev = shared_evaluator();
  CHECK(eval_wheel_union(WheelMonomial({1}), ev) ==
        CasimirPoly{Rational(0), Rational(4)});
  CHECK(eval_wheel_union(WheelMonomial({2}), ev) ==
        CasimirPoly{Rational(0), Rational(-16, 3), Rational(8)});
  CHECK(eval_wheel_union(WheelMonomial({1, 1}), ev) ==
        CasimirPoly{Rational(0), Rational(-32, 3), Rational(16)});
}

TEST_CASE("wheel formula identities") {
  Evaluator& ev = shared_evaluator();
  for (unsigned n = 1; n <= 4; ++n) {
    CasimirPoly q = q_poly(n);
    CHECK(eval_wheel_union(WheelMonomial({n}), ev) ==
          Rational(pow2(2 * n + 1) * factorial(2 * n + 1)) * q);
    CHECK(eval_sigma(n, ev) ==
          Rational(pow2(n) * factorial(2 * n) * factorial(2 * n + 1)) * q);
  }
}

TEST_CASE("wheel unions depend only on total legs and wheel count") {
  Evaluator& ev = shared_evaluator();
  // all multisets with total n <= 5, grouped by (n, k)
  std::map<std::pair<unsigned, unsigned>, CasimirPoly> seen;
  std::vector<std::vector<unsigned>> monomials = {
      {1},    {2},    {1, 1}, {3},       {2, 1},    {1, 1, 1},    {4},
      {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}, {5},       {4, 1},
      {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  for (const auto& parts : monomials) {
    WheelMonomial m(parts);
    CasimirPoly v = eval_wheel_union(m, ev);
    auto key = std::make_pair(m.total(), m.count());
    auto [it, fresh] = seen.emplace(key, v);
    if (!fresh) CHECK(it->second == v);
  }
  // distinct (n, k) give distinct values here
  CHECK(seen.at({4, 1}) != seen.at({4, 2}));
}

TEST_CASE("wheel monomial validation") {
  CHECK_THROWS_AS(WheelMonomial({}), std::invalid_argument);
  CHECK_THROWS_AS(WheelMonomial({0, 1}), std::invalid_argument);
  WheelMonomial m({3, 1, 2});
  CHECK(m.total() == 6);
  CHECK(m.count() == 3);
}

TEST_CASE("sigma evaluation is independent of the worker partitioning") {
  Evaluator ev1, ev2;
  CHECK(eval_sigma(4, ev1, 1) == eval_sigma(4, ev2, 3));
}
