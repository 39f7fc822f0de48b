#include "doctest.h"
#include "pcval/newton.hpp"
#include "pcval/pcv.hpp"

using namespace pcval;

namespace {
const Backend B = Backend::q();
RationalFunction rf(const std::string& s) { return RationalFunction::parse(s, B); }
FieldElem fe(const std::string& s) { return FieldElem::parse(s, B); }
}  // namespace

TEST_CASE("polynomial shift expands around the new center") {
  Poly f = Poly::x(B) * Poly::x(B);
  Poly g = f.taylor_shift(fe("t"));
  REQUIRE(g.degree() == 2);
  CHECK(g.coeff(0) == fe("t^2"));
  CHECK(g.coeff(1) == fe("2*t"));
  CHECK(g.coeff(2) == fe("1"));
  CHECK(g.eval(fe("0")) == f.eval(fe("t")));
}

TEST_CASE("gcd and factor multiplicity agree on planted factors") {
  Poly lin = Poly::x(B) - Poly::constant(fe("t"));
  Poly f = lin * lin * (Poly::x(B) - Poly::constant(fe("1")));
  CHECK(Poly::gcd(f, lin) == lin.monic());
  CHECK(f.factor_multiplicity(lin) == 2);
  CHECK(f.divided_exact(lin * lin) == Poly::x(B) - Poly::constant(fe("1")));
  auto [q, r] = Poly::divmod(f, lin);
  CHECK(r.is_zero());
  CHECK(q * lin == f);
}

TEST_CASE("rational functions reduce to coprime monic form") {
  CHECK(rf("(X^2 - t^2)/(X - t)") == rf("X + t"));
  CHECK(rf("(2*X)/(2*t)") == rf("X/t"));
  CHECK(rf("(X)/(X)") == rf("1"));
  CHECK(rf("X/t").to_string() == "X/t");
}

TEST_CASE("evaluation is exact and poles are loud") {
  CHECK(rf("(X^2 - t)/(t)").eval(fe("t")) == fe("t - 1"));
  CHECK_THROWS_AS(rf("1/(X - t)").eval(fe("t")), pole_error);
  auto pv = rf("(X - t)^2 * (1 + t)").point_value(fe("t"));
  CHECK(pv.ord == 2);
  CHECK(pv.unit == fe("1 + t"));
  auto pw = rf("1/(X - t)").point_value(fe("t"));
  CHECK(pw.ord == -1);
}

TEST_CASE("function printing re-parses to an equal function") {
  for (const char* text :
       {"X/t", "(X^2 - t^2)/(t)", "1/(X - t/(1 - t))", "X^2 - (1 + t)", "(t)/(X)"}) {
    RationalFunction f = rf(text);
    CHECK(RationalFunction::parse(f.to_string(), B) == f);
  }
}

TEST_CASE("root valuations read off the lower hull") {
  auto rv = root_valuations(rf("X^2 - t").num());
  REQUIRE(rv.size() == 1);
  CHECK(rv[0].first == ExtRat(Rational(1, 2)));
  CHECK(rv[0].second == 2);

  auto rw = root_valuations(rf("X^2 - t^3*X").num());
  REQUIRE(rw.size() == 2);
  CHECK(rw[0].first == ExtRat(Rational(3)));
  CHECK(rw[0].second == 1);
  CHECK(rw[1].first.is_infinite());
  CHECK(rw[1].second == 1);
}

TEST_CASE("root distances are signed and presentation independent") {
  DistanceMultiset d = root_distances(rf("(X^2 - t^2)/t"), fe("0"));
  CHECK(d.at(ExtRat(Rational(1))) == 2);
  CHECK(d.total() == 2);
  CHECK(d.count_ge(ExtRat(Rational(1))) == 2);
  CHECK(d.count_lt(ExtRat(Rational(1))) == 0);

  DistanceMultiset inv = root_distances(rf("t/(X^2 - t^2)"), fe("0"));
  CHECK(inv.at(ExtRat(Rational(1))) == -2);

  DistanceMultiset e = root_distances(rf("(X - t)/(X - t^3)"), fe("t^2"));
  CHECK(e.at(ExtRat(Rational(1))) == 1);
  CHECK(e.at(ExtRat(Rational(2))) == -1);
}

TEST_CASE("distance scan separates frozen from traveling critical points") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  StabilizedCount c = stabilized_distance_count(rf("X/t"), e1.term_fn(), 32);
  CHECK(c.certified);
  CHECK(c.count == 1);
  CHECK(c.frozen.empty());

  StabilizedCount frozen = stabilized_distance_count(rf("X + t^(1/2)"), e1.term_fn(), 32);
  CHECK(frozen.certified);
  CHECK(frozen.count == 0);
  CHECK(frozen.frozen.at(ExtRat(Rational(1, 2))) == 1);

  StabilizedCount pole = stabilized_distance_count(rf("(X - t^3)/(X + t^(1/2))"), e1.term_fn(), 32);
  CHECK(pole.certified);
  CHECK(pole.count == 1);
  CHECK(pole.frozen.at(ExtRat(Rational(1, 2))) == -1);
}
