#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "pcval/oracle.hpp"
#include "pcval/seq_io.hpp"

using namespace pcval;

namespace {
const Backend B = Backend::q();
FieldElem fe(const std::string& s) { return FieldElem::parse(s, B); }
}  // namespace

TEST_CASE("fixture terms match their closed forms") {
  PCSeq e1 = PCSeq::fixture("E1", B, 16);
  CHECK(e1.term(0).value == fe("1"));
  CHECK(e1.term(3).value == fe("t^(7/8)"));
  CHECK(e1.gauge(3) == Rational(7, 8));

  PCSeq e2 = PCSeq::fixture("E2", B, 16);
  CHECK(e2.gauge(1) == Rational(1));
  CHECK(e2.gauge(2) == Rational(7, 5));
  CHECK(e2.gauge(3) == Rational(41, 29));
  CHECK(e2.term(2).value == fe("t^(7/5)"));

  PCSeq e3 = PCSeq::fixture("E3", B, 16);
  CHECK(e3.term(1).value == fe("t"));
  CHECK(e3.term(2).value == fe("t + t^2"));
  CHECK(*e3.pseudo_limit() == fe("t/(1 - t)"));

  PCSeq e4 = PCSeq::fixture("E4", B, 16);
  CHECK(e4.term(2).value == fe("1 + 1/2*t - 1/8*t^2"));
  CHECK(e4.term(3).value == fe("1 + 1/2*t - 1/8*t^2 + 1/16*t^3"));
  CHECK(!e4.pseudo_limit());
  REQUIRE(e4.minimal_polynomial());
  FieldElem s3 = e4.term(3).value;
  CHECK((s3 * s3 - fe("1 + t")).val() == ExtRat(Rational(4)));

  PCSeq e5 = PCSeq::fixture("E5", B, 16);
  CHECK(e5.term(2).value == fe("1 + t^(1/2) + t^(3/4)"));
  CHECK(!e5.pseudo_limit());
}

TEST_CASE("the gauge law holds at every checked index") {
  for (const auto& [name, desc] : PCSeq::fixture_catalog()) {
    PCSeq e = PCSeq::fixture(name, B, 16);
    for (long n = 0; n < 12; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      CHECK((e.term(n + 1).value - e.term(n).value).val() == ExtRat(e.gauge(n)));
      // Ultrametric collapse: every deeper difference lands on the same value.
      CHECK((e.term(n + 3).value - e.term(n).value).val() == ExtRat(e.gauge(n)));
    }
  }
}

TEST_CASE("breadths and pseudo-limits of the fixtures") {
  CHECK(PCSeq::fixture("E1", B).breadth() == Breadth(Rational(1)));
  CHECK(PCSeq::fixture("E2", B).breadth() == Breadth::parse("sqrt(2)"));
  CHECK(PCSeq::fixture("E3", B).breadth().is_infinite());
  CHECK(PCSeq::fixture("E4", B).breadth().is_infinite());
  CHECK(PCSeq::fixture("E5", B).breadth() == Breadth(Rational(1)));
  CHECK(*PCSeq::fixture("E1", B).pseudo_limit() == fe("0"));
  CHECK(*PCSeq::fixture("E2", B).pseudo_limit() == fe("0"));
}

TEST_CASE("breadth ideal membership decides against the limit") {
  PCSeq e1 = PCSeq::fixture("E1", B);
  CHECK(in_breadth_ideal(e1, fe("t")));
  CHECK(in_breadth_ideal(e1, fe("t^3")));
  CHECK(!in_breadth_ideal(e1, fe("t^(1/2)")));
  PCSeq e2 = PCSeq::fixture("E2", B);
  CHECK(in_breadth_ideal(e2, fe("t^(3/2)")));
  CHECK(!in_breadth_ideal(e2, fe("t^(7/5)")));
}

TEST_CASE("pseudo-limits form the breadth ball around the declared one") {
  PCSeq e1 = PCSeq::fixture("E1", B);
  CHECK(is_pseudo_limit(e1, fe("0")).value);
  CHECK(is_pseudo_limit(e1, fe("t")).value);
  CHECK(is_pseudo_limit(e1, fe("t^3 - 2*t")).value);
  CHECK(!is_pseudo_limit(e1, fe("t^(1/2)")).value);
  PCSeq e5 = PCSeq::fixture("E5", B);
  PlAnswer a = is_pseudo_limit(e5, fe("1"));
  CHECK(a.definitional_only);
  CHECK(!a.value);
}

TEST_CASE("type classification certifies each fixture") {
  CHECK(classify_type(PCSeq::fixture("E1", B)).type == SeqType::algebraic);
  CHECK(classify_type(PCSeq::fixture("E4", B)).type == SeqType::algebraic);
  TypeReport tr = classify_type(PCSeq::fixture("E5", B));
  CHECK(tr.type == SeqType::transcendental);
  CHECK(tr.scan_ok);
}

TEST_CASE("equivalence is decided by breadth and pseudo-limit ball") {
  PCSeq e1 = PCSeq::fixture("E1", B);
  PCSeq shifted = PCSeq::single_term("S", fe("t^3"), GaugeSpec::dyadic(Rational(1), Rational(1)), B);
  CHECK(equivalent(e1, shifted).value);

  PCSeq squared = PCSeq::single_term("Q", fe("0"), GaugeSpec::dyadic(Rational(2), Rational(2)), B);
  EquivReport sq = equivalent(e1, squared);
  CHECK(!sq.value);
  CHECK(sq.criterion == EquivReport::Criterion::breadth_mismatch);
  CHECK(sq.detail == "breadths 1 vs 2");

  PCSeq far = PCSeq::single_term("F", fe("1"), GaugeSpec::dyadic(Rational(1), Rational(1)), B);
  CHECK(!equivalent(e1, far).value);

  // Reindexed gauge, same ball: still the same sequence ring.
  PCSeq fast = PCSeq::single_term("H", fe("0"), GaugeSpec::dyadic(Rational(1), Rational(1, 2)), B);
  CHECK(equivalent(e1, fast).value);

  CHECK(!equivalent(e1, PCSeq::fixture("E2", B)).value);
  CHECK(!equivalent(e1, PCSeq::fixture("E5", B)).value);
  CHECK(equivalent(PCSeq::fixture("E5", B), PCSeq::fixture("E5", B)).value);
}

TEST_CASE("one-sided definitional comparison matches the symmetric verdicts") {
  PCSeq e1 = PCSeq::fixture("E1", B);
  PCSeq shifted = PCSeq::single_term("S", fe("t"), GaugeSpec::dyadic(Rational(1), Rational(1)), B);
  CHECK(definitional_after(e1, shifted, 12));
  CHECK(definitional_after(shifted, e1, 12));
  CHECK(!definitional_after(PCSeq::fixture("E5", B), e1, 12));

  OracleVerdict ov = equivalent_definitional(e1, shifted, 4, 12);
  CHECK(ov.value);
  OracleVerdict sq = equivalent_definitional(
      e1, PCSeq::single_term("Q", fe("0"), GaugeSpec::dyadic(Rational(2), Rational(2)), B), 4, 12);
  CHECK(!sq.value);
  CHECK(sq.detail.find("breadths") != std::string::npos);
}

TEST_CASE("sequence specs round-trip through their file form") {
  for (const auto& [name, desc] : PCSeq::fixture_catalog()) {
    PCSeq e = PCSeq::fixture(name, B, 12);
    PCSeq back = parse_sequence_spec(sequence_spec_text(e), name, B, 12);
    CHECK(back.kind() == e.kind());
    CHECK(back.declared_type() == e.declared_type());
    CHECK(back.breadth() == e.breadth());
    for (long n = 0; n <= 8; ++n) CHECK(back.term(n).value == e.term(n).value);
  }
}

TEST_CASE("sequence specs load from disk and validate their fields") {
  std::string path = "seq_io_test.json";
  {
    std::ofstream out(path);
    out << "{\"kind\": \"single_term\", \"beta\": \"t^3\","
           " \"gauge\": {\"kind\": \"dyadic\", \"params\": {\"limit\": \"1\", \"scale\": \"1\"}}}";
  }
  PCSeq e = load_sequence_spec(path, B, 12);
  CHECK(e.kind() == SeqKind::single_term);
  CHECK(*e.pseudo_limit() == fe("t^3"));
  CHECK(equivalent(e, PCSeq::fixture("E1", B)).value);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_sequence_spec("{\"kind\": \"nope\"}", "x", B, 12), parse_error);
  CHECK_THROWS_AS(parse_sequence_spec("{\"kind\": \"single_term\"}", "x", B, 12), parse_error);
  CHECK_THROWS_AS(
      parse_sequence_spec("{\"kind\": \"partial_sum\", \"declared_type\": \"algebraic\","
                          " \"gauge\": {\"kind\": \"dyadic\", \"params\":"
                          " {\"limit\": \"1\", \"scale\": \"1\"}}}",
                          "x", B, 12),
      precondition_error);
}

TEST_CASE("generators refuse data that is not pseudo-convergent") {
  CHECK_THROWS_AS(PCSeq::single_term("bad", fe("0"), GaugeSpec::dyadic(Rational(1), Rational(-1)), B),
                  std::exception);
  CHECK_THROWS_AS(PCSeq::cauchy_to_k("bad", fe("t^(1/2) + t"), Rational(1), B),
                  precondition_error);
}

TEST_CASE("profile scan reports values, poles, and zeros along the sequence") {
  PCSeq e1 = PCSeq::fixture("E1", B, 16);
  auto rows = profile_scan(RationalFunction::parse("X/t", B), e1, 1, 5);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].value == Rational(-1, 2));
  CHECK(rows[4].value == Rational(-1, 32));
  CHECK(scan_table(rows).find("-1/32") != std::string::npos);

  auto pole_rows = profile_scan(RationalFunction::parse("1/(X - t^(3/4))", B), e1, 2, 2);
  CHECK(pole_rows[0].pole);
  auto zero_rows = profile_scan(RationalFunction::parse("X - t^(3/4)", B), e1, 2, 2);
  CHECK(zero_rows[0].infinite);
  CHECK_THROWS_AS(profile_scan(RationalFunction::parse("X", B), e1, -1, 3), precondition_error);
}
