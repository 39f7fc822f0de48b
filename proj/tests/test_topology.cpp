#include "doctest.h"
#include "pcval/topology.hpp"

using namespace pcval;

namespace {
const Backend B = Backend::q();
RationalFunction rf(const std::string& s) { return RationalFunction::parse(s, B); }
FieldElem fe(const std::string& s) { return FieldElem::parse(s, B); }
}  // namespace

TEST_CASE("ring membership across descriptor kinds") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  CHECK(in_B(rf("t/X"), RingDescriptor::ve(e1)));
  CHECK(!in_B(rf("X/t"), RingDescriptor::ve(e1)));
  CHECK(in_B(rf("X/t"), RingDescriptor::we(e1)));
  CHECK(in_B(rf("t^2"), RingDescriptor::w_point(fe("t"))));
  CHECK(!in_B(rf("1/t"), RingDescriptor::w_point(fe("t"))));
  CHECK_THROWS_AS(in_B(rf("1/X"), RingDescriptor::w_point(fe("0"))), pole_error);

  PCSeq e3 = PCSeq::fixture("E3", B, 32);
  CHECK(!in_B(rf("1/(X - t/(1 - t))"), RingDescriptor::ve(e3)));
  CHECK(in_B(rf("X - t/(1 - t)"), RingDescriptor::ve(e3)));
}

TEST_CASE("omega sets agree with their basic-set witnesses") {
  std::vector<PCSeq> seqs = {
      PCSeq::fixture("E1", B, 32), PCSeq::fixture("E2", B, 32), PCSeq::fixture("E5", B, 32),
      PCSeq::single_term("ball", fe("t^3"), GaugeSpec::dyadic(Rational(4), Rational(1)), B, 32)};
  std::vector<FieldElem> centers = {fe("0"), fe("t"), fe("t^(1/2)")};
  std::vector<Rational> radii = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(3)};
  for (const PCSeq& e : seqs)
    for (const FieldElem& s : centers)
      for (const Rational& g : radii) {
        CAPTURE(e.name());
        CAPTURE(s.to_string());
        CAPTURE(format_rational(g));
        bool member = omega_membership(e, s, g);
        RationalFunction w = omega_witness_function(s, g, B);
        CHECK(member == in_B(w, RingDescriptor::ve(e)));
      }
  OmegaWitness ow = omega_identity_witness(fe("t"), Rational(3, 2), B);
  CHECK(ow.k == 1);
  CHECK(ow.c.val() == ExtRat(Rational(3, 2)));
  CHECK(OmegaSet{fe("0"), Rational(1)}.to_string() == "Omega(0, 1)");
}

TEST_CASE("term rings converge to the sequence ring verdict") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  ConvergenceReport rep = convergence_scan(e1, {rf("X/t"), rf("t/X"), rf("(X - t)/t")}, 24);
  CHECK(rep.all_decided);
  CHECK(rep.all_match);
  CHECK(rep.rows[0].limit_value == false);
  CHECK(rep.rows[1].limit_value == true);

  PCSeq e3 = PCSeq::fixture("E3", B, 32);
  ConvergenceReport r3 = convergence_scan(e3, {rf("1/(X - t/(1 - t))")}, 24);
  CHECK(r3.all_match);
  CHECK(r3.rows[0].limit_value == false);

  CHECK_THROWS_AS(convergence_scan(PCSeq::fixture("E5", B), {rf("X")}, 24), precondition_error);
}

TEST_CASE("increasing-value candidates solve the piecewise law") {
  auto one = enumerate_increasing(rf("X^2/t^3"), Rational(0), fe("0"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].delta == Rational(3, 2));
  CHECK(one[0].lambda == 2);
  CHECK(one[0].gamma == Rational(-3));

  auto xt = enumerate_increasing(rf("X/t"), Rational(0), fe("0"));
  REQUIRE(xt.size() == 1);
  CHECK(xt[0].delta == Rational(1));

  CHECK(enumerate_increasing(rf("t"), Rational(0), fe("0")).empty());

  // Every candidate reconstructs: a ball at that breadth meets the target.
  for (const auto& c : enumerate_increasing(rf("(X - t)*(X - t^3)/t^2"), Rational(1), fe("0"))) {
    PCSeq ball = PCSeq::single_term("probe", c.center, GaugeSpec::dyadic(c.delta, Rational(1)), B, 16);
    ValueProfile vp = value_profile(rf("(X - t)*(X - t^3)/t^2"), ball);
    REQUIRE(vp.certified);
    CHECK(vp.lambda == c.lambda);
    GroupValue lim = GroupValue(vp.gamma) + GroupValue(Rational(0), vp.lambda, Breadth(c.delta));
    CHECK((lim - GroupValue(Rational(1))).sign() == 0);
  }
}

TEST_CASE("separation witnesses verify against every sampled ring") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  PCSeq ball = PCSeq::single_term("ball", fe("t^3"), GaugeSpec::dyadic(Rational(4), Rational(1)), B, 32);
  SeparationWitness w1 = separator(e1, {rf("t/X")}, {ball});
  CHECK(w1.verified);
  REQUIRE(!w1.parts.empty());
  CHECK(w1.parts[0].kind == WitnessPart::Kind::omega);
  CHECK(w1.parts[0].e_inside);
  CHECK(w1.parts[0].omega->s == fe("0"));
  CHECK(w1.parts[0].omega->gamma == Rational(1));

  PCSeq e5 = PCSeq::fixture("E5", B, 32);
  SeparationWitness w2 = separator(e5, {rf("1")}, {e1});
  CHECK(w2.verified);
  REQUIRE(!w2.parts.empty());
  CHECK(!w2.parts[0].e_inside);

  SeparationWitness nested =
      separator(e1, {rf("t/X")},
                {PCSeq::single_term("inner", fe("0"), GaugeSpec::dyadic(Rational(3), Rational(1)), B, 32)});
  CHECK(nested.verified);

  CHECK_THROWS_AS(separator(e1, {rf("X/t")}, {ball}), precondition_error);
  CHECK(separator(e1, {rf("t/X")}, {}).verified);
}

TEST_CASE("the finite-residue separator excludes exactly the deep radii") {
  CHECK_THROWS_AS(residue_separator(fe("0"), Rational(1), B), precondition_error);
  Backend f2 = Backend::fp(2);
  RationalFunction psi = residue_separator(FieldElem::parse("0", f2), Rational(1), f2);
  CHECK(psi.to_string() == "(t^2)/(X^2 + t*X)");

  auto member_at = [](const RationalFunction& f, const FieldElem& x) {
    try {
      return f.eval(x).val() >= ExtRat(Rational(0));
    } catch (const pole_error&) {
      return false;
    }
  };
  for (std::uint64_t p : {std::uint64_t(2), std::uint64_t(3)}) {
    Backend fp = Backend::fp(p);
    RationalFunction f = residue_separator(FieldElem::parse("t", fp), Rational(3, 2), fp);
    for (std::uint64_t c = 1; c < p; ++c)
      for (const Rational& rho : {Rational(1), Rational(3, 2), Rational(2)}) {
        FieldElem x = FieldElem::parse("t", fp) +
                      FieldElem::constant(Coeff::from_long(long(c), fp)) * FieldElem::t_power(rho, fp);
        CAPTURE(p);
        CAPTURE(c);
        CAPTURE(format_rational(rho));
        CHECK(member_at(f, x) == (rho < Rational(3, 2)));
      }
    CHECK(!member_at(f, FieldElem::parse("t", fp)));  // distance infinity
  }
}

TEST_CASE("integral-closure probes are consistent or produce a counterexample") {
  PCSeq e1 = PCSeq::fixture("E1", B, 16);
  PCSeq e2 = PCSeq::fixture("E2", B, 16);
  IntRReport good = intr_consistency(rf("1/(1 + X^2)"), {e1, e2});
  CHECK(good.consistent);
  CHECK(good.all_probes_member);

  IntRReport bad = intr_consistency(rf("X/t"), {e1});
  CHECK(bad.consistent);
  CHECK(!bad.all_probes_member);
  CHECK(bad.counterexample.find("t^(-2)") != std::string::npos);
  CHECK(bad.counterexample.find("w = -3") != std::string::npos);

  IntRReport cst = intr_consistency(rf("t^2"), {e1});
  CHECK(cst.all_probes_member);
}

TEST_CASE("definitional membership matches the symbolic ring verdicts") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  PCSeq e2 = PCSeq::fixture("E2", B, 32);
  for (const char* text : {"X/t", "t/X", "1", "X - t", "(X - t)/(X - t^3)", "t^2/(X^2 + t)",
                           "X^2 - t^2", "1/(1 + X)"})
    for (const PCSeq* e : {&e1, &e2}) {
      CAPTURE(text);
      CAPTURE(e->name());
      CHECK(member_definitional(rf(text), *e, 28).value == member(rf(text), *e, RingSide::V).value);
    }
  OracleVerdict neg = member_definitional(rf("X/t"), e1, 28);
  CHECK(!neg.value);
  CHECK(neg.detail.find("< 0") != std::string::npos);
}
