#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"
#include "sl2w/series.hpp"

using namespace sl2w;

namespace {

Evaluator& shared_evaluator() {
  static Evaluator ev;
  return ev;
}

}  // namespace

TEST_CASE("main series") {
  Evaluator& ev = shared_evaluator();
  EvenSeries s0 = main_series(0, ev);
  CHECK(s0.order() == 0);
  CHECK(s0.term(0) == CasimirPoly(Rational(1)));
  CHECK(main_series(1, ev).term(1) == CasimirPoly{Rational(0), Rational(1, 12)});
  CHECK(main_series(2, ev).term(2) ==
        CasimirPoly{Rational(0), Rational(-1, 720), Rational(1, 480)});
}

TEST_CASE("q series") {
  CHECK(q_series(0).terms() == std::vector<CasimirPoly>{CasimirPoly(Rational(1))});
  EvenSeries s = q_series(2);
  CHECK(s.term(1) == CasimirPoly{Rational(0), Rational(1, 12)});
  CHECK(s.term(2) == CasimirPoly{Rational(0), Rational(-1, 720), Rational(1, 480)});
}

TEST_CASE("partitions enumerate multisets") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(2).size() == 2);
  CHECK(partitions(3).size() == 3);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(6).size() == 11);
  CHECK(partitions(3) ==
        std::vector<std::vector<unsigned>>{{3}, {2, 1}, {1, 1, 1}});
}

TEST_CASE("wheels exponential series") {
  Evaluator& ev = shared_evaluator();
  EvenSeries s = wheels_exp_series(2, ev);
  CHECK(s.term(0) == CasimirPoly(Rational(1)));
  // b_2 W(w_2) = (1/48) * 4c
  CHECK(s.term(1) == CasimirPoly{Rational(0), Rational(1, 12)});
  // b_4 W(w_4) + (b_2^2/2) W(w_2 u w_2)
  CasimirPoly expected =
      modified_bernoulli(4) * eval_wheel_union(WheelMonomial({2}), ev) +
      (modified_bernoulli(2) * modified_bernoulli(2) * Rational(1, 2)) *
          eval_wheel_union(WheelMonomial({1, 1}), ev);
  CHECK(s.term(2) == expected);
  CHECK(s.term(2) == CasimirPoly{Rational(0), Rational(-1, 720), Rational(1, 480)});
}

TEST_CASE("wheels exponential terms have the expected degree and top coefficient") {
  Evaluator& ev = shared_evaluator();
  EvenSeries s = wheels_exp_series(4, ev);
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(s.term(n).degree() == static_cast<int>(n));
    CHECK(s.term(n).leading() == Rational(1) / Rational(pow2(n) * factorial(2 * n + 1)));
  }
}

TEST_CASE("verify passes at low order") {
  Evaluator& ev = shared_evaluator();
  Report r1 = verify(1, ev);
  CHECK(r1.pass);
  CHECK(r1.terms.size() == 1);
  CHECK(r1.terms[0].main == CasimirPoly{Rational(0), Rational(1, 12)});
  Report r2 = verify(2, ev);
  CHECK(r2.pass);
  for (const TermReport& t : r2.terms) {
    CHECK(t.equal);
    CHECK(t.theorem4);
  }
  CHECK_THROWS_AS(verify(0, ev), std::invalid_argument);
}

TEST_CASE("a corrupted b_2 is reported as a failure at term 1") {
  Evaluator& ev = shared_evaluator();
  Report r = verify_with(2, ev, [](unsigned k) {
    Rational b = modified_bernoulli(k);
    return k == 2 ? b + Rational(1) : b;
  });
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.terms[0].equal);
  CHECK(r.terms[0].theorem4);  // the wheel identities themselves are untouched
  CHECK_FALSE(r.terms[1].equal);
}

TEST_CASE("report json round-trips through the documented schema") {
  Evaluator& ev = shared_evaluator();
  Report r = verify(2, ev);
  nlohmann::json j = nlohmann::json::parse(r.to_json());
  CHECK(j["order"] == 2);
  CHECK(j["pass"] == true);
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["n"] == 1);
  CHECK(j["terms"][0]["equal"] == true);
  CHECK(j["terms"][0]["theorem4"] == true);
  // term 1 polynomials are all c/12
  for (const char* key : {"main", "q", "wheels"}) {
    auto coeffs = j["terms"][0][key]["coeffs"];
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0][0] == "0");
    CHECK(coeffs[0][1] == "1");
    CHECK(coeffs[1][0] == "1");
    CHECK(coeffs[1][1] == "12");
  }
  // rebuilding a polynomial from the parsed strings gives back the term
  std::vector<Rational> rebuilt;
  for (const auto& pair : j["terms"][0]["main"]["coeffs"])
    rebuilt.emplace_back(BigInt(pair[0].get<std::string>()),
                         BigInt(pair[1].get<std::string>()));
  CHECK(Polynomial(std::move(rebuilt)) == r.terms[0].main);
}

TEST_CASE("report text shows all three polynomials per order") {
  Evaluator& ev = shared_evaluator();
  Report r = verify(1, ev);
  std::string text = r.to_text();
  CHECK(text.find("main = c/12") != std::string::npos);
  CHECK(text.find("q = c/12") != std::string::npos);
  CHECK(text.find("wheels = c/12") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}
