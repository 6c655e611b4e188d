#include "catch2/catch_amalgamated.hpp"
#include "sl2w/diagram.hpp"
#include "sl2w/oracle.hpp"

using namespace sl2w;

TEST_CASE("both dual basis pairs satisfy Phi(a_i, b_j) = delta_ij") {
  CHECK(dual_pair_is_valid(standard_dual_pair()));
  CHECK(dual_pair_is_valid(alternate_dual_pair()));
}

TEST_CASE("irrep matrices satisfy the sl2 relations") {
  for (unsigned lambda = 0; lambda <= 5; ++lambda) {
    IrrepAction r = irrep_action(lambda);
    const unsigned d = lambda + 1;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        if (i == j)
          CHECK(r.h.at(i, i) ==
                Rational(static_cast<long long>(lambda) - 2ll * i));
        else
          CHECK(r.h.at(i, j).is_zero());
      }
    RatMatrix ef = r.e * r.f, fe = r.f * r.e;
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j)
        CHECK(ef.at(i, j) - fe.at(i, j) == r.h.at(i, j));
    for (unsigned j = 0; j + 1 < d; ++j) CHECK(r.f.at(j + 1, j) == Rational(1));
    for (unsigned j = 1; j < d; ++j)
      CHECK(r.e.at(j - 1, j) == Rational(static_cast<long long>(j) * (lambda - j + 1)));
  }
  IrrepAction trivial = irrep_action(0);
  CHECK(trivial.e.at(0, 0).is_zero());
  CHECK(trivial.f.at(0, 0).is_zero());
  CHECK(trivial.h.at(0, 0).is_zero());
  CHECK(irrep_action(1).h.at(0, 0) == Rational(1));
  CHECK(irrep_action(1).h.at(1, 1) == Rational(-1));
}

TEST_CASE("casimir scalar on the irreps") {
  CHECK(casimir_value(0) == Rational(0));
  CHECK(casimir_value(1) == Rational(3, 2));
  CHECK(casimir_value(2) == Rational(4));
  // c = ef + fe + h^2/2 really acts by that scalar
  for (unsigned lambda = 0; lambda <= 4; ++lambda) {
    IrrepAction r = irrep_action(lambda);
    RatMatrix cas = r.e * r.f;
    cas += r.f * r.e;
    cas += (r.h * r.h).scaled(Rational(1, 2));
    CHECK(cas.as_scalar() == casimir_value(lambda));
  }
}

TEST_CASE("word_scalar on the stated examples") {
  CHECK(word_scalar(parse_dow("1 1"), 1) == Rational(3, 2));
  CHECK(word_scalar(parse_dow("1 1"), 0).is_zero());
  CHECK(word_scalar(parse_dow("1 2 1 2"), 0).is_zero());
  CHECK(word_scalar(parse_dow("1 2 3 1 2 3"), 0).is_zero());
  CHECK(word_scalar(parse_dow("1 2 1 2"), 1) == Rational(-3, 4));
}

TEST_CASE("eval_oracle on the stated examples") {
  CHECK(eval_oracle(ChordDiagram()) == CasimirPoly(Rational(1)));
  CHECK(eval_oracle(parse_dow("1 1")) == CasimirPoly{Rational(0), Rational(1)});
  CHECK(eval_oracle(parse_dow("1 2 1 2")) ==
        CasimirPoly{Rational(0), Rational(-2), Rational(1)});
  // interpolation nodes for the crossing pair: (0,0), (3/2,-3/4), (4,8)
  CHECK(word_scalar(parse_dow("1 2 1 2"), 2) == Rational(8));
}

TEST_CASE("word sums do not depend on the base point") {
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& [d, mult] : enumerate_matchings(n))
      for (unsigned lambda = 0; lambda <= 3; ++lambda)
        for (unsigned k = 0; k < 2 * n; ++k)
          CHECK(word_scalar(d.rotate(k), lambda) == word_scalar(d, lambda));
}

TEST_CASE("word sums do not depend on the choice of dual bases") {
  DualBasisPair alt = alternate_dual_pair();
  for (unsigned n = 1; n <= 3; ++n)
    for (const auto& [d, mult] : enumerate_matchings(n))
      CHECK(eval_oracle(d, alt) == eval_oracle(d));
}

TEST_CASE("oracle values are monic of degree n with zero constant term") {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& [d, mult] : enumerate_matchings(n)) {
      CasimirPoly w = eval_oracle(d);
      CHECK(w.degree() == static_cast<int>(n));
      CHECK(w.leading() == Rational(1));
      CHECK(w.coeff(0).is_zero());
    }
}

TEST_CASE("cached oracle wrapper returns identical values") {
  OracleEvaluator cached;
  ChordDiagram d = parse_dow("1 2 3 1 3 2");
  CHECK(cached.eval(d) == eval_oracle(d));
  CHECK(cached.eval(d.rotate(2)) == eval_oracle(d));
}
