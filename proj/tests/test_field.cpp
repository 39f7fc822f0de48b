#include "doctest.h"
#include "pcval/field_elem.hpp"
#include "pcval/quad_irr.hpp"

using namespace pcval;

TEST_CASE("rational parsing and formatting") {
  CHECK(format_rational(parse_rational("7/5")) == "7/5");
  CHECK(format_rational(parse_rational("-14/10")) == "-7/5");
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK_THROWS_AS(parse_rational("7/"), parse_error);
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
}

TEST_CASE("extended rationals order with infinity on top") {
  ExtRat a{Rational(1, 2)}, b{Rational(2, 3)};
  CHECK(a < b);
  CHECK(a < ExtRat::infinity());
  CHECK(ExtRat::infinity() == ExtRat::infinity());
  CHECK((a + b).to_string() == "7/6");
  CHECK((a + ExtRat::infinity()).is_infinite());
  CHECK(ExtRat::infinity().to_string() == "inf");
}

TEST_CASE("sqrt(2) convergents approximate from both sides") {
  QuadIrr s2(Rational(0), Rational(1), Int(2));
  CHECK(s2.floor() == 1);
  auto lo = s2.lower_approximants(4);
  REQUIRE(lo.size() == 4);
  CHECK(format_rational(lo[0]) == "1");
  CHECK(format_rational(lo[1]) == "7/5");
  CHECK(format_rational(lo[2]) == "41/29");
  CHECK(format_rational(lo[3]) == "239/169");
  for (const Rational& q : lo) CHECK(s2.compare(q) > 0);
  auto hi = s2.upper_approximants(3);
  for (const Rational& q : hi) CHECK(s2.compare(q) < 0);
  for (std::size_t i = 1; i < lo.size(); ++i) CHECK(lo[i] > lo[i - 1]);
  for (std::size_t i = 1; i < hi.size(); ++i) CHECK(hi[i] < hi[i - 1]);
}

TEST_CASE("quadratic surds normalize square factors and refuse rationals") {
  QuadIrr a(Rational(0), Rational(2), Int(8));  // 2*sqrt(8) = 4*sqrt(2)
  CHECK(a.d() == 2);
  CHECK(a.b() == Rational(4));
  CHECK_THROWS_AS(QuadIrr(Rational(1), Rational(2), Int(4)), std::invalid_argument);
  CHECK_THROWS_AS(QuadIrr(Rational(1), Rational(0), Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(QuadIrr(Rational(1), Rational(-1), Int(2)), std::invalid_argument);
  QuadIrr b(Rational(-2), Rational(1), Int(2));  // sqrt(2) - 2 < 0
  CHECK(b.compare(Rational(0)) < 0);
  CHECK(b.floor() == -1);
}

TEST_CASE("breadth literals round-trip through parse") {
  for (const char* text : {"1", "-3/2", "sqrt(2)", "inf"}) {
    Breadth b = Breadth::parse(text);
    CHECK(Breadth::parse(b.to_string()) == b);
  }
  CHECK(Breadth::parse("sqrt(2)").compare(ExtRat(Rational(7, 5))) > 0);
  CHECK(Breadth::parse("sqrt(2)").compare(ExtRat(Rational(3, 2))) < 0);
  CHECK(Breadth::parse("inf").is_infinite());
}

TEST_CASE("prime field coefficients reduce and invert") {
  Backend f3 = Backend::fp(3);
  CHECK(Coeff::from_long(5, f3) == Coeff::from_long(2, f3));
  CHECK(Coeff::from_rational(Rational(1, 2), f3) == Coeff::from_long(2, f3));
  CHECK((Coeff::from_long(2, f3) * Coeff::from_long(2, f3)) == Coeff::one(f3));
  CHECK_THROWS_AS(Backend::fp(4), std::invalid_argument);
  CHECK_THROWS_AS(Coeff::from_rational(Rational(1, 3), f3), std::domain_error);
}

TEST_CASE("field elements parse, normalize, and expose the least exponent") {
  Backend b = Backend::q();
  FieldElem x = FieldElem::parse("t^(3/4) + 2*t", b);
  CHECK(x.val() == ExtRat(Rational(3, 4)));
  CHECK(x.to_string() == "t^(3/4) + 2*t");
  CHECK(FieldElem::parse("(1 + t)/(2 + 2*t)", b) == FieldElem::parse("1/2", b));
  CHECK(FieldElem::parse("0", b).val().is_infinite());
  FieldElem q = FieldElem::parse("t/(1 - t)", b);
  CHECK(q.val() == ExtRat(Rational(1)));
  CHECK((q * FieldElem::parse("(1 - t)/t", b)).is_one());
  CHECK_THROWS_AS(FieldElem::parse("X + t", b), parse_error);
  CHECK_THROWS_AS(FieldElem::parse("t^^2", b), parse_error);
  CHECK_THROWS_AS(FieldElem::parse("1/0", b), std::exception);
}

TEST_CASE("field arithmetic satisfies the valuation laws") {
  Backend b = Backend::q();
  FieldElem u = FieldElem::parse("t^(1/2) + t", b);
  FieldElem w = FieldElem::parse("2*t^(1/3) - t^2", b);
  CHECK((u * w).val() == u.val() + w.val());
  CHECK((u / w).val() == ExtRat(Rational(1, 2) - Rational(1, 3)));
  CHECK((u + w).val() == w.val());
  CHECK((u - u).val().is_infinite());
  CHECK(u.pow(3).val() == ExtRat(Rational(3, 2)));
}

TEST_CASE("element printing re-parses to an equal value") {
  Backend b = Backend::q();
  for (const char* text : {"t^(3/4) + 2*t", "t/(1 - t)", "1 - 1/2*t^(-2)", "3/7", "0"}) {
    FieldElem x = FieldElem::parse(text, b);
    CHECK(FieldElem::parse(x.to_string(), b) == x);
  }
  Backend f2 = Backend::fp(2);
  FieldElem y = FieldElem::parse("1 + t + t^(1/2)", f2);
  CHECK(FieldElem::parse(y.to_string(), f2) == y);
  CHECK((y + y).is_zero());
}
