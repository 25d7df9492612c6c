#include "lrh/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lrh;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_FALSE(parse_rational("").has_value());
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("abc").has_value());
}

TEST_CASE("element parsing and normal ordering") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  auto e = parse_pbw(s, "x");
  REQUIRE(e);
  CHECK(*e == gen_x(s));

  // unordered words are straightened: y x = x y
  CHECK(*parse_pbw(s, "y x") == pbw_monomial(s, 1, 1));
  // D y = y D + F
  CHECK(*parse_pbw(s, "D y") == multiply(gen_D(s), gen_y(s)));
  // coefficients, '*', powers, signs
  CHECK(*parse_pbw(s, "2 E x - y^2") ==
        multiply(gen_E(s), gen_x(s)) * Rational(2) - pbw_monomial(s, 0, 2));
  CHECK(*parse_pbw(s, "x*D^2") == multiply(gen_x(s), multiply(gen_D(s), gen_D(s))));
  CHECK(*parse_pbw(s, "1/2 x + 1/2 x") == gen_x(s));
}

TEST_CASE("malformed input is rejected") {
  auto s = AlgebraSpec::three_lines(Rational(1));
  CHECK_FALSE(parse_pbw(s, "").has_value());
  CHECK_FALSE(parse_pbw(s, "x +").has_value());
  CHECK_FALSE(parse_pbw(s, "z").has_value());
  CHECK_FALSE(parse_pbw(s, "x^").has_value());
  CHECK_FALSE(parse_pbw(s, "1/0 x").has_value());
  auto ah = AlgebraSpec::ah(Polynomial::x());
  CHECK_FALSE(parse_pbw(ah, "D").has_value()); // no D generator here
}

TEST_CASE("print-parse round trip") {
  std::mt19937 rng(77);
  auto s = AlgebraSpec::three_lines(Rational(2));
  for (int trial = 0; trial < 20; ++trial) {
    PbwElement e(s);
    for (int k = 0; k < 4; ++k)
      e.add_term({(int)(rng() % 4), (int)(rng() % 4), (int)(rng() % 3),
                  (int)(rng() % 3)},
                 Rational((long)(rng() % 13) - 6, 1 + rng() % 4));
    auto back = parse_pbw(s, pbw_to_string(e));
    REQUIRE(back);
    CHECK(*back == e);
  }
  CHECK(pbw_to_string(PbwElement(s)) == "0");
  REQUIRE(parse_pbw(s, "0"));
  CHECK(parse_pbw(s, "0")->is_zero());
}

TEST_CASE("univariate polynomial parsing") {
  auto h = parse_poly_x("x^2-1");
  REQUIRE(h);
  CHECK(*h == Polynomial::monomial(2, 0) - Polynomial(Rational(1)));
  CHECK(*parse_poly_x("1") == Polynomial(Rational(1)));
  CHECK(*parse_poly_x("x^3 - x") ==
        Polynomial::monomial(3, 0) - Polynomial::x());
  CHECK_FALSE(parse_poly_x("y").has_value());
  CHECK_FALSE(parse_poly_x("").has_value());
  // poly_to_string round trip
  Polynomial p = Polynomial::monomial(3, 0) * Rational(2) -
                 Polynomial::x() * Rational(1, 2) + Polynomial(Rational(7));
  CHECK(*parse_poly_x(poly_to_string(p)) == p);
}
