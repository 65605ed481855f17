#include "kpr/polyring/poly.hpp"

#include "../support/gen.hpp"

#include <doctest.h>

using kpr::PolyZ0;
using kpr::Rational;

TEST_CASE("parsing") {
  const PolyZ0 p = PolyZ0::parse("z^2 + z");
  CHECK(p.coefficients() == std::map<unsigned, Rational>{{1, Rational(1)}, {2, Rational(1)}});
  CHECK(PolyZ0::parse("0").is_zero());
  CHECK(PolyZ0::parse("z + z^2") == p);
  CHECK(PolyZ0::parse("-3/2*t^4 - t") == PolyZ0({{4, Rational(-3, 2)}, {1, Rational(-1)}}));
  CHECK(PolyZ0::parse("2 * d^2 - 2*d^2 + d").degree() == 1);
  CHECK(PolyZ0::parse("z - z").is_zero());
  CHECK(PolyZ0::parse("3z").coefficients().at(1) == Rational(3));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(PolyZ0::parse("z^2 + 1"), kpr::ConstantTermError);
  CHECK_THROWS_AS(PolyZ0::parse("5"), kpr::ConstantTermError);
  CHECK_THROWS_AS(PolyZ0::parse("z + y"), kpr::PolyParseError);
  CHECK_THROWS_AS(PolyZ0::parse("z^"), kpr::PolyParseError);
  CHECK_THROWS_AS(PolyZ0::parse("z^0"), kpr::PolyParseError);
  CHECK_THROWS_AS(PolyZ0::parse("1/0*z"), std::invalid_argument);
  CHECK_THROWS_AS(PolyZ0::parse(""), kpr::PolyParseError);
  CHECK_THROWS_AS(PolyZ0::parse("z +"), kpr::PolyParseError);
  CHECK_THROWS_AS(PolyZ0({{0, Rational(1)}}), kpr::ConstantTermError);
}

TEST_CASE("evaluation") {
  CHECK(PolyZ0::parse("z^2 + z").eval(Rational(3)) == Rational(12));
  CHECK(PolyZ0().eval(Rational(7)).is_zero());
  CHECK(PolyZ0::parse("1/2*z^3").eval(Rational(2)) == Rational(4));
  CHECK(PolyZ0::parse("z^40").eval(Rational(10)).str() == "1" + std::string(40, '0'));
}

TEST_CASE("rendering") {
  CHECK(PolyZ0::parse("z - 1/2*z^3").str() == "-1/2*z^3 + z");
  CHECK(PolyZ0().str() == "0");
  CHECK(PolyZ0::parse("d^2").str('d') == "d^2");
}

TEST_CASE("property: zero at zero, render round-trip, additivity of order") {
  gen::Gen g(31);
  for (int i = 0; i < 1000; ++i) {
    const PolyZ0 p = g.poly(4);
    CHECK(p.eval(Rational(0)).is_zero());
    CHECK(PolyZ0::parse(p.str()) == p);
    for (const auto& [deg, c] : p.coefficients()) {
      CHECK(deg >= 1);
      CHECK_FALSE(c.is_zero());
    }
    // Evaluation matches a Horner-free direct sum.
    const Rational x = g.rational(7);
    Rational direct;
    for (const auto& [deg, c] : p.coefficients()) direct += c * kpr::pow(x, deg);
    CHECK(p.eval(x) == direct);
  }
}
