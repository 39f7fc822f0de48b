#include "pcval/valuations.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcval {

namespace {

/// min{val(a_i) + i*delta} over the expansion of f around alpha.
GroupValue shift_min(const Poly& f, const FieldElem& alpha, const Breadth& delta,
                     std::vector<long>& argmin) {
  Poly sh = f.taylor_shift(alpha);
  bool have = false;
  GroupValue best;
  for (long i = 0; i <= sh.degree(); ++i) {
    const FieldElem& a = sh.coeff(static_cast<std::size_t>(i));
    if (a.is_zero()) continue;
    GroupValue cand{a.val().q(), i, delta};
    if (!have || cand < best) {
      best = cand;
      argmin.clear();
      argmin.push_back(i);
      have = true;
    } else if (cand == best) {
      argmin.push_back(i);
    }
  }
  return best;
}

bool is_cauchy_kind(const PCSeq& e) {
  return e.kind() == SeqKind::cauchy_to_k || e.kind() == SeqKind::cauchy_series;
}

FieldElem radius_probe(const FieldElem& s, const Rational& m, const Backend& b) {
  return s + FieldElem::t_power(m, b);
}

Rational probe_val(const RationalFunction& phi, const FieldElem& x) {
  return phi.eval(x).val().q();
}

/// Solves gamma from three probe radii inside a critical-point-free annulus;
/// the three solutions must coincide.
Rational solve_gamma(const RationalFunction& phi, const FieldElem& s, long lambda,
                     const std::vector<Rational>& radii) {
  Backend b = phi.num().backend();
  bool have = false;
  Rational gamma;
  for (const Rational& m : radii) {
    Rational g = probe_val(phi, radius_probe(s, m, b)) - Rational(lambda) * m;
    if (!have) {
      gamma = g;
      have = true;
    } else if (g != gamma) {
      throw std::logic_error("annulus law probes disagree across radii");
    }
  }
  return gamma;
}

std::string annulus_text(const std::string& lo, const std::string& hi) {
  return "(" + lo + ", " + hi + ")";
}

}  // namespace

MonomialVal monomial_val(const RationalFunction& phi, const FieldElem& alpha,
                         const Breadth& delta) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  if (delta.is_infinite()) throw precondition_error("delta must be finite");
  MonomialVal out;
  GroupValue num = shift_min(phi.num(), alpha, delta, out.num_argmin);
  GroupValue den = shift_min(phi.den(), alpha, delta, out.den_argmin);
  out.value = num - den;
  return out;
}

ValueProfile value_profile(const RationalFunction& phi, const PCSeq& e) {
  return value_profile(phi, e, e.max_index());
}

ValueProfile value_profile(const RationalFunction& phi, const PCSeq& e, long max_index) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  ValueProfile out;
  StabilizedCount sc = stabilized_distance_count(phi, e.term_fn(), max_index);
  out.lambda = sc.count;
  out.scanned_to = sc.scanned_to;
  if (!sc.certified) {
    out.detail = "distance picture not stable within max_index = " + std::to_string(max_index);
    return out;
  }
  out.from_index = sc.certified_at;
  long solved_at = -1;
  long verified = 0;
  for (long n = sc.certified_at; n <= max_index; ++n) {
    RfVal v = rf_val_at(phi, e.term(n).cache);
    if (v.pole) continue;  // finitely many terms may sit on a pole
    if (v.v.is_infinite()) {
      out.detail = "term " + std::to_string(n) + " is a zero of phi past certification";
      return out;
    }
    if (solved_at < 0) {
      out.gamma = v.v.q() - Rational(out.lambda) * e.gauge(n);
      solved_at = n;
      continue;
    }
    if (v.v.q() != Rational(out.lambda) * e.gauge(n) + out.gamma) {
      out.detail = "law fails at index " + std::to_string(n) + "; certification was premature";
      return out;
    }
    if (++verified == 3) break;
  }
  if (solved_at < 0) {
    out.detail = "every index past certification sits on a pole";
    return out;
  }
  out.certified = true;
  return out;
}

Degdom degdom(const RationalFunction& phi, const PCSeq& e) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  StabilizedCount sc = stabilized_distance_count(phi, e.term_fn(), e.max_index());
  return {sc.count, sc.certified, sc.certified_at};
}

int WEValue::sign() const {
  if (kind == Kind::plus_infinite) return 1;
  if (kind == Kind::minus_infinite) return -1;
  return value.sign();
}

std::string WEValue::to_string() const {
  if (kind == Kind::finite) return value.to_string();
  std::string s = kind == Kind::plus_infinite ? "+inf" : "-inf";
  return s + " (socle " + socle + ", order " + std::to_string(socle_order) + ")";
}

WEValue w_e(const RationalFunction& phi, const PCSeq& e) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  WEValue out;
  if (is_cauchy_kind(e)) {
    Poly q;
    if (e.pseudo_limit())
      q = Poly::x(e.backend()) - Poly::constant(*e.pseudo_limit());
    else
      q = e.minimal_polynomial()->num().monic();
    long k = phi.num().factor_multiplicity(q) - phi.den().factor_multiplicity(q);
    if (k != 0) {
      out.kind = k > 0 ? WEValue::Kind::plus_infinite : WEValue::Kind::minus_infinite;
      out.socle_order = k;
      out.socle = RationalFunction(q).to_string();
      return out;
    }
    ValueProfile vp = value_profile(phi, e);
    if (!vp.certified) {
      out.certified = false;
      out.detail = vp.detail;
      out.value = GroupValue{vp.gamma};
      return out;
    }
    if (vp.lambda != 0)
      throw std::logic_error("socle-free function produced a traveling critical point");
    out.value = GroupValue{vp.gamma};
    out.certified_at = vp.from_index;
    return out;
  }
  Breadth delta = e.breadth();
  ValueProfile vp = value_profile(phi, e);
  bool have_ground_limit = e.pseudo_limit().has_value() && !delta.is_infinite();
  if (!vp.certified) {
    if (have_ground_limit) {
      out.value = monomial_val(phi, *e.pseudo_limit(), delta).value;
      out.detail = "computed from the shift expansion at the declared pseudo-limit; "
                   "the scan did not settle at this depth";
      return out;
    }
    out.certified = false;
    out.detail = vp.detail;
    out.value = GroupValue{vp.gamma};
    return out;
  }
  if (e.declared_type() == SeqType::transcendental && vp.lambda != 0)
    throw precondition_error("declared transcendental type produced a traveling critical point");
  out.value = GroupValue{vp.gamma, vp.lambda, delta};
  out.certified_at = vp.from_index;
  if (have_ground_limit) {
    GroupValue direct = monomial_val(phi, *e.pseudo_limit(), delta).value;
    if (direct != out.value)
      throw std::logic_error("limit valuation disagrees with the shift expansion at the "
                             "pseudo-limit");
  }
  return out;
}

VeValue VeValue::rank1(GroupValue g) {
  VeValue v;
  v.kind_ = Kind::rank1;
  v.g_ = std::move(g);
  return v;
}

VeValue VeValue::rank2(RankTwoValue r) {
  VeValue v;
  v.kind_ = Kind::rank2;
  v.r_ = std::move(r);
  return v;
}

VeValue VeValue::at_limit(ExtRat x) {
  VeValue v;
  v.kind_ = Kind::at_limit;
  v.lv_ = std::move(x);
  return v;
}

VeValue VeValue::profile(long lambda, Rational gamma) {
  VeValue v;
  v.kind_ = Kind::profile;
  v.lambda_ = lambda;
  v.gamma_ = std::move(gamma);
  return v;
}

int VeValue::sign() const {
  switch (kind_) {
    case Kind::rank1: return g_.sign();
    case Kind::rank2: return r_.sign();
    case Kind::at_limit: return lv_.is_infinite() ? 1 : sgn(lv_.q());
    case Kind::profile: return lambda_ != 0 ? (lambda_ > 0 ? 1 : -1) : sgn(gamma_);
  }
  return 0;
}

int VeValue::compare(const VeValue& o) const {
  if (kind_ != o.kind_)
    throw std::invalid_argument("values of different regimes are not comparable");
  switch (kind_) {
    case Kind::rank1: return g_.compare(o.g_);
    case Kind::rank2: return r_.compare(o.r_);
    case Kind::at_limit:
      return lv_ < o.lv_ ? -1 : o.lv_ < lv_ ? 1 : 0;
    case Kind::profile:
      if (lambda_ != o.lambda_) return lambda_ < o.lambda_ ? -1 : 1;
      return sgn(gamma_ - o.gamma_);
  }
  return 0;
}

std::string VeValue::to_string() const {
  switch (kind_) {
    case Kind::rank1: return g_.to_string();
    case Kind::rank2: return r_.to_string();
    case Kind::at_limit: return lv_.to_string();
    case Kind::profile:
      if (lambda_ == 0) return format_rational(gamma_);
      if (lambda_ > 0)
        return "+inf (order " + std::to_string(lambda_) + " at the limit)";
      return "-inf (pole of order " + std::to_string(-lambda_) + " at the limit)";
  }
  return "";
}

VeValue v_e(const RationalFunction& phi, const PCSeq& e) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  Breadth delta = e.breadth();
  if (delta.is_infinite() && e.pseudo_limit()) {
    RationalFunction::PointVal pv = phi.point_value(*e.pseudo_limit());
    if (pv.ord < 0) throw precondition_error("phi has a pole at the limit of the sequence");
    if (pv.ord > 0) return VeValue::at_limit(ExtRat::infinity());
    return VeValue::at_limit(pv.unit.val());
  }
  ValueProfile vp = value_profile(phi, e);
  if (delta.is_infinite()) {
    VeValue v = VeValue::profile(vp.lambda, vp.gamma);
    v.certified = vp.certified;
    v.detail = vp.detail;
    return v;
  }
  if (e.declared_type() == SeqType::transcendental && vp.certified && vp.lambda != 0)
    throw precondition_error("declared transcendental type produced a traveling critical point");
  GroupValue w{vp.gamma, vp.lambda, delta};
  bool torsion = e.declared_type() == SeqType::algebraic && delta.is_rational();
  VeValue v = torsion ? VeValue::rank2({w, -vp.lambda}) : VeValue::rank1(w);
  if (!vp.certified) {
    if (e.pseudo_limit()) {
      // The shift expansion at the declared pseudo-limit is exact; only the
      // second component still relies on the scan in the torsion regime.
      GroupValue direct = monomial_val(phi, *e.pseudo_limit(), delta).value;
      if (torsion) {
        v = VeValue::rank2({direct, -vp.lambda});
        v.certified = false;
        v.detail = vp.detail;
      } else {
        v = VeValue::rank1(direct);
      }
      return v;
    }
    v.certified = false;
    v.detail = vp.detail;
  }
  return v;
}

MemberVerdict member(const RationalFunction& phi, const PCSeq& e, RingSide side) {
  if (phi.is_zero()) return {true, true, "the zero function lies in every ring"};
  if (side == RingSide::W) {
    if (is_cauchy_kind(e))
      throw precondition_error(
          "the limit valuation of a convergent sequence of algebraic type is only a "
          "pseudo-valuation; W-membership is undefined");
    WEValue w = w_e(phi, e);
    return {w.sign() >= 0, w.certified, w.detail};
  }
  VeValue v = v_e(phi, e);
  return {v.sign() >= 0, v.certified, v.detail};
}

std::string RankReport::to_string() const {
  switch (reason) {
    case Reason::transcendental:
      return "rank 1 (transcendental type)";
    case Reason::non_torsion:
      return "rank 1 (non-torsion: delta = " + notes_delta + ")";
    case Reason::torsion:
      return "rank 2 (torsion: delta = " + notes_delta + ")";
    case Reason::infinite_breadth:
      return "rank 2 (infinite breadth: overring " + overring + ")";
  }
  return "";
}

RankReport rank_report(const PCSeq& e) {
  RankReport out;
  Breadth delta = e.breadth();
  if (e.declared_type() == SeqType::transcendental) {
    out.rank = 1;
    out.reason = RankReport::Reason::transcendental;
    out.notes = "immediate extension: value group and residue field are unchanged";
    return out;
  }
  if (delta.is_infinite()) {
    out.rank = 2;
    out.reason = RankReport::Reason::infinite_breadth;
    if (e.pseudo_limit()) {
      Poly q = Poly::x(e.backend()) - Poly::constant(*e.pseudo_limit());
      out.minimal_polynomial = RationalFunction(q);
    } else {
      out.minimal_polynomial = *e.minimal_polynomial();
    }
    out.overring = "K[X] localized at (" + out.minimal_polynomial->to_string() + ")";
    out.notes = "the valuation refines evaluation at the limit";
    return out;
  }
  if (delta.is_rational()) {
    out.rank = 2;
    out.reason = RankReport::Reason::torsion;
    out.notes_delta = format_rational(delta.rational());
    if (e.pseudo_limit()) {
      const Rational& d = delta.rational();
      if (!d.get_den().fits_slong_p())
        throw precondition_error("breadth denominator too large for a witness");
      long k = d.get_den().get_si();
      Rational p{d.get_num()};
      Poly lin = Poly::x(e.backend()) - Poly::constant(*e.pseudo_limit());
      Poly num = lin.pow(k);
      Poly den = Poly::constant(FieldElem::t_power(p, e.backend()));
      out.witness = RationalFunction(num, den);
    }
    return out;
  }
  out.rank = 1;
  out.reason = RankReport::Reason::non_torsion;
  out.notes_delta = delta.quad_irr().to_string();
  return out;
}

AnnulusLaw annulus_law(const RationalFunction& phi, const FieldElem& s, const Rational& theta1,
                       const ExtRat& theta2) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  if (!(ExtRat(theta1) < theta2))
    throw precondition_error("the annulus must have a nonempty interior");
  if (phi.is_constant()) {
    return {0, phi.num().coeff(0).val().q() - phi.den().coeff(0).val().q()};
  }
  DistanceMultiset dist = root_distances(phi, s);
  std::vector<ExtRat> offending;
  for (const auto& [d, m] : dist.entries())
    if (ExtRat(theta1) < d && d < theta2) offending.push_back(d);
  if (!offending.empty()) {
    std::string msg = "critical points inside the annulus at distances ";
    for (std::size_t i = 0; i < offending.size(); ++i)
      msg += (i ? ", " : "") + offending[i].to_string();
    msg += "; largest critical-point-free annuli: ";
    std::vector<std::string> cuts;
    cuts.push_back("-inf");
    for (const auto& [d, m] : dist.entries()) cuts.push_back(d.to_string());
    if (cuts.back() != "inf") cuts.push_back("inf");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      msg += (i ? ", " : "") + annulus_text(cuts[i], cuts[i + 1]);
    throw precondition_error(msg);
  }
  AnnulusLaw out;
  out.lambda = dist.count_ge(theta2);
  std::vector<Rational> radii;
  if (theta2.is_infinite()) {
    for (long i = 1; i <= 3; ++i) radii.push_back(theta1 + Rational(i));
  } else {
    Rational width = theta2.q() - theta1;
    for (long i = 1; i <= 3; ++i) radii.push_back(theta1 + width * Rational(i) / Rational(4));
  }
  out.gamma = solve_gamma(phi, s, out.lambda, radii);
  return out;
}

StableAnnulus stable_annulus(const RationalFunction& phi, const PCSeq& e) {
  if (phi.is_zero()) throw precondition_error("phi must be nonzero");
  Breadth delta = e.breadth();
  if (e.declared_type() != SeqType::algebraic || delta.is_infinite() || !e.pseudo_limit())
    throw precondition_error(
        "a stable annulus needs an algebraic sequence with finite breadth and a ground-field "
        "pseudo-limit");
  const FieldElem& beta = *e.pseudo_limit();
  StableAnnulus out;
  Rational base;
  bool have_base = false;
  if (!phi.is_constant()) {
    DistanceMultiset dist = root_distances(phi, beta);
    for (const auto& [d, m] : dist.entries()) {
      if (d.is_infinite()) {
        out.lambda += m;
        continue;
      }
      if (delta.compare(d) > 0) {
        if (!have_base || d.q() > base) base = d.q();
        have_base = true;
      } else {
        out.lambda += m;
      }
    }
  }
  if (!have_base) {
    Int f = delta.is_rational() ? floor_rational(delta.rational()) : delta.quad_irr().floor();
    base = Rational(f - 1);
    if (sgn(base) > 0) base = Rational(0);
  }
  std::vector<Rational> radii;
  if (delta.is_rational()) {
    Rational width = delta.rational() - base;
    for (long i = 1; i <= 3; ++i) radii.push_back(base + width * Rational(i) / Rational(4));
  } else {
    for (std::size_t want = 12; radii.size() < 3 && want <= 96; want *= 2) {
      radii.clear();
      for (const Rational& m : delta.quad_irr().lower_approximants(want))
        if (m > base && radii.size() < 3) radii.push_back(m);
    }
    if (radii.size() < 3) throw std::logic_error("no probe radii below the breadth");
  }
  out.gamma = solve_gamma(phi, beta, out.lambda, radii);
  out.delta_prime = base;
  if (out.lambda != 0) {
    Rational cross = -out.gamma / Rational(out.lambda);
    if (cross > base && delta.compare(ExtRat(cross)) > 0) out.delta_prime = cross;
  }
  return out;
}

}  // namespace pcval
