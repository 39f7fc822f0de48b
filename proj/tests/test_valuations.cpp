#include <random>

#include "doctest.h"
#include "pcval/valuations.hpp"

using namespace pcval;

namespace {
const Backend B = Backend::q();
RationalFunction rf(const std::string& s) { return RationalFunction::parse(s, B); }
FieldElem fe(const std::string& s) { return FieldElem::parse(s, B); }
const Breadth S2 = Breadth::parse("sqrt(2)");
GroupValue gv(long num, long den, long m) {
  return GroupValue(Rational(num, den), m, S2);
}
}  // namespace

TEST_CASE("group values fold rational breadths and order exactly") {
  GroupValue folded(Rational(1, 2), 3, Breadth(Rational(1)));
  CHECK(folded.delta_coeff() == 0);
  CHECK(folded.rational_part() == Rational(7, 2));
  CHECK(folded.to_string() == "7/2");

  CHECK(gv(0, 1, 1).to_string() == "sqrt(2)");
  CHECK(gv(-1, 1, 2).to_string() == "-1 + 2*sqrt(2)");
  CHECK(gv(0, 1, 1) > GroupValue(Rational(7, 5)));
  CHECK(gv(0, 1, 1) < GroupValue(Rational(3, 2)));
  CHECK(gv(3, 1, -2) < GroupValue(Rational(1, 5)));  // 3 - 2*sqrt(2) = 0.17...
  CHECK(gv(3, 1, -2).sign() > 0);

  GroupValue other(Rational(0), 1, Breadth::parse("sqrt(3)"));
  CHECK_THROWS_AS((void)gv(0, 1, 1).compare(other), std::invalid_argument);
}

TEST_CASE("group value arithmetic satisfies the ordered-group laws") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), mm(-3, 3);
  for (int i = 0; i < 200; ++i) {
    GroupValue a(Rational(num(rng), den(rng)), mm(rng), S2);
    GroupValue b(Rational(num(rng), den(rng)), mm(rng), S2);
    GroupValue c(Rational(num(rng), den(rng)), mm(rng), S2);
    CHECK((a + b) == (b + a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a - a).sign() == 0);
    CHECK(a.scaled(3) == a + a + a);
    if (a < b) CHECK(a + c < b + c);
    CHECK(a.compare(b) == -b.compare(a));
  }
}

TEST_CASE("rank-two values order lexicographically and add componentwise") {
  RankTwoValue x(GroupValue(Rational(0)), -1);
  RankTwoValue y(GroupValue(Rational(1, 8)), 5);
  CHECK(x < y);
  CHECK(x.sign() < 0);
  CHECK((x + y) == RankTwoValue(GroupValue(Rational(1, 8)), 4));
  CHECK(x.to_string() == "(0, -1)");
}

TEST_CASE("weighted shift values with argmin reporting") {
  MonomialVal a = monomial_val(rf("(X^2 - t^2)/t"), fe("0"), S2);
  CHECK(a.value == GroupValue(Rational(1)));
  CHECK(a.num_argmin == std::vector<long>{0});

  MonomialVal b = monomial_val(rf("X"), fe("0"), S2);
  CHECK(b.value == gv(0, 1, 1));

  MonomialVal tie = monomial_val(rf("X^2 - t^2"), fe("0"), Breadth(Rational(1)));
  CHECK(tie.value == GroupValue(Rational(2)));
  CHECK(tie.num_argmin == std::vector<long>{0, 2});

  MonomialVal shifted = monomial_val(rf("X"), fe("t"), Breadth(Rational(2)));
  CHECK(shifted.value == GroupValue(Rational(1)));  // X = t + (X - t), min(1, 2)

  CHECK_THROWS_AS(monomial_val(rf("0"), fe("0"), S2), precondition_error);
  CHECK_THROWS_AS(monomial_val(rf("X"), fe("0"), Breadth::infinity()), precondition_error);
}

TEST_CASE("value profiles certify the linear law") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  ValueProfile p = value_profile(rf("X/t"), e1);
  CHECK(p.certified);
  CHECK(p.lambda == 1);
  CHECK(p.gamma == Rational(-1));

  ValueProfile frozen = value_profile(rf("1/(X - t^(3/4))"), e1);
  CHECK(frozen.certified);
  CHECK(frozen.lambda == 0);
  CHECK(frozen.gamma == Rational(-3, 4));

  PCSeq e2 = PCSeq::fixture("E2", B, 32);
  ValueProfile q = value_profile(rf("X^2 - t^2"), e2);
  CHECK(q.certified);
  CHECK(q.lambda == 0);
  CHECK(q.gamma == Rational(2));

  PCSeq e4 = PCSeq::fixture("E4", B, 32);
  ValueProfile socle = value_profile(rf("X^2 - (1 + t)"), e4);
  CHECK(socle.certified);
  CHECK(socle.lambda == 1);
}

TEST_CASE("dominating degree counts traveling critical points with sign") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  CHECK(degdom(rf("X/t"), e1).value == 1);
  CHECK(degdom(rf("(X - t)*(X - t^3)/X"), e1).value == 1);
  CHECK(degdom(rf("X + t^(1/2)"), e1).value == 0);
  PCSeq e3 = PCSeq::fixture("E3", B, 32);
  CHECK(degdom(rf("1/(X - t/(1 - t))"), e3).value == -1);
}

TEST_CASE("limit valuation along the sequence") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  WEValue a = w_e(rf("X/t"), e1);
  CHECK(a.kind == WEValue::Kind::finite);
  CHECK(a.value == GroupValue(Rational(0)));
  CHECK(w_e(rf("(X - t)/t"), e1).value == GroupValue(Rational(0)));

  PCSeq e2 = PCSeq::fixture("E2", B, 32);
  CHECK(w_e(rf("X"), e2).value == gv(0, 1, 1));

  PCSeq e4 = PCSeq::fixture("E4", B, 32);
  WEValue socle = w_e(rf("X^2 - (1 + t)"), e4);
  CHECK(socle.kind == WEValue::Kind::plus_infinite);
  CHECK(socle.socle_order == 1);

  PCSeq e3 = PCSeq::fixture("E3", B, 32);
  WEValue pole = w_e(rf("1/(X - t/(1 - t))"), e3);
  CHECK(pole.kind == WEValue::Kind::minus_infinite);

  PCSeq e5 = PCSeq::fixture("E5", B, 32);
  CHECK(w_e(rf("X - 1"), e5).value == GroupValue(Rational(1, 2)));
}

TEST_CASE("limit valuation equals the weighted shift at the pseudo-limit") {
  // The rank-one identity behind the torsion dichotomy, spot-checked per backend.
  std::vector<std::string> pool = {"X/t",       "(X - t)/t",     "X^2 - t^2", "(X - t^3)/(X + t^(1/2))",
                                   "t/X",       "(X + t)^2/t^3", "X^3/t^2",   "1 - X/t"};
  for (const char* seq : {"E1", "E2"}) {
    PCSeq e = PCSeq::fixture(seq, B, 32);
    for (const std::string& text : pool) {
      CAPTURE(seq);
      CAPTURE(text);
      WEValue w = w_e(rf(text), e);
      REQUIRE(w.kind == WEValue::Kind::finite);
      CHECK(w.value == monomial_val(rf(text), *e.pseudo_limit(), e.breadth()).value);
    }
  }
}

TEST_CASE("the refined valuation picks the regime from the sequence") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  VeValue a = v_e(rf("X/t"), e1);
  REQUIRE(a.kind() == VeValue::Kind::rank2);
  CHECK(a.pair() == RankTwoValue(GroupValue(Rational(0)), -1));
  CHECK(a.to_string() == "(0, -1)");

  PCSeq e2 = PCSeq::fixture("E2", B, 32);
  VeValue b = v_e(rf("X"), e2);
  REQUIRE(b.kind() == VeValue::Kind::rank1);
  CHECK(b.group() == gv(0, 1, 1));

  PCSeq e3 = PCSeq::fixture("E3", B, 32);
  VeValue c = v_e(rf("X"), e3);
  REQUIRE(c.kind() == VeValue::Kind::at_limit);
  CHECK(c.limit_value() == ExtRat(Rational(1)));
  CHECK_THROWS_AS(v_e(rf("1/(X - t/(1 - t))"), e3), precondition_error);

  PCSeq e4 = PCSeq::fixture("E4", B, 32);
  VeValue d = v_e(rf("X^2 - (1 + t)"), e4);
  REQUIRE(d.kind() == VeValue::Kind::profile);
  CHECK(d.lambda() == 1);

  PCSeq e5 = PCSeq::fixture("E5", B, 32);
  VeValue f = v_e(rf("X - 1"), e5);
  REQUIRE(f.kind() == VeValue::Kind::rank1);
  CHECK(f.group() == GroupValue(Rational(1, 2)));
}

TEST_CASE("membership separates the two rings exactly in the torsion regime") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  CHECK(!member(rf("X/t"), e1, RingSide::V).value);
  CHECK(member(rf("X/t"), e1, RingSide::W).value);
  CHECK(member(rf("t/X"), e1, RingSide::V).value);
  CHECK(member(rf("t/X"), e1, RingSide::W).value);
  CHECK(member(rf("0"), e1, RingSide::V).value);

  PCSeq e2 = PCSeq::fixture("E2", B, 32);
  CHECK(member(rf("X/t"), e2, RingSide::V).value == member(rf("X/t"), e2, RingSide::W).value);

  CHECK_THROWS_AS(member(rf("X"), PCSeq::fixture("E3", B), RingSide::W), precondition_error);
  CHECK_THROWS_AS(member(rf("X"), PCSeq::fixture("E4", B), RingSide::W), precondition_error);
}

TEST_CASE("rank reports follow the breadth dichotomy") {
  RankReport r1 = rank_report(PCSeq::fixture("E1", B));
  CHECK(r1.rank == 2);
  CHECK(r1.reason == RankReport::Reason::torsion);
  REQUIRE(r1.witness);
  CHECK(*r1.witness == rf("X/t"));

  RankReport r2 = rank_report(PCSeq::fixture("E2", B));
  CHECK(r2.rank == 1);
  CHECK(r2.to_string() == "rank 1 (non-torsion: delta = sqrt(2))");

  RankReport r3 = rank_report(PCSeq::fixture("E3", B));
  CHECK(r3.rank == 2);
  CHECK(r3.reason == RankReport::Reason::infinite_breadth);
  REQUIRE(r3.minimal_polynomial);
  CHECK(*r3.minimal_polynomial == rf("X - t/(1 - t)"));
  CHECK(r3.overring == "K[X] localized at (" + r3.minimal_polynomial->to_string() + ")");

  RankReport r4 = rank_report(PCSeq::fixture("E4", B));
  CHECK(r4.rank == 2);
  CHECK(*r4.minimal_polynomial == rf("X^2 - (1 + t)"));

  RankReport r5 = rank_report(PCSeq::fixture("E5", B));
  CHECK(r5.rank == 1);
  CHECK(r5.reason == RankReport::Reason::transcendental);
}

TEST_CASE("annulus law between critical radii") {
  AnnulusLaw law = annulus_law(rf("X^2/t^3"), fe("0"), Rational(1, 2), ExtRat::infinity());
  CHECK(law.lambda == 2);
  CHECK(law.gamma == Rational(-3));
  CHECK_THROWS_AS(annulus_law(rf("X - t"), fe("0"), Rational(1, 2), ExtRat(Rational(2))),
                  precondition_error);

  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  StableAnnulus sa = stable_annulus(rf("X/t"), e1);
  CHECK(sa.lambda == 1);
  CHECK(sa.gamma == Rational(-1));
  StableAnnulus fr = stable_annulus(rf("(X + t^(1/2))/t"), e1);
  CHECK(fr.delta_prime == Rational(1, 2));
  CHECK(fr.lambda == 0);
  CHECK(fr.gamma == Rational(-1, 2));
  CHECK_THROWS_AS(stable_annulus(rf("X"), PCSeq::fixture("E5", B)), precondition_error);
}

TEST_CASE("the refined value is a valuation: sampled pair laws") {
  PCSeq e1 = PCSeq::fixture("E1", B, 32);
  std::vector<RationalFunction> pool;
  for (const char* s : {"X/t", "t/X", "X - t", "X + t^(1/2)", "(X - t)/(X - t^3)", "X^2 - t^2",
                        "1 + X", "t^2/(X^2 + t)"})
    pool.push_back(rf(s));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction& f = pool[pick(rng)];
    const RationalFunction& g = pool[pick(rng)];
    RankTwoValue vf = v_e(f, e1).pair();
    RankTwoValue vg = v_e(g, e1).pair();
    CHECK(v_e(f * g, e1).pair() == vf + vg);
    RationalFunction sum = f + g;
    if (!sum.is_zero()) {
      RankTwoValue vs = v_e(sum, e1).pair();
      CHECK(vs >= (vf < vg ? vf : vg));
    }
  }
}
