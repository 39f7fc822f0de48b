#include "pcval/topology.hpp"

#include <algorithm>
#include <sstream>

namespace pcval {

namespace {

RationalFunction linear_at(const FieldElem& s, const Backend& b) {
  return RationalFunction(Poly::x(b) - Poly::constant(s));
}

// V_E membership with poles at a declared limit read as exclusion.
bool in_ve(const RationalFunction& phi, const PCSeq& e) {
  if (phi.is_zero()) return true;
  if (e.breadth().is_infinite() && e.pseudo_limit()) {
    auto pv = phi.point_value(*e.pseudo_limit());
    if (pv.ord != 0) return pv.ord > 0;
    ExtRat u = pv.unit.val();
    return u.is_infinite() || sgn(u.q()) >= 0;
  }
  return member(phi, e, RingSide::V).value;
}

// w_F(X - s) <= gamma
bool we_le(const WEValue& w, const Rational& gamma) {
  if (w.kind == WEValue::Kind::plus_infinite) return false;
  if (w.kind == WEValue::Kind::minus_infinite) return true;
  return (w.value - GroupValue(gamma)).sign() <= 0;
}

WEValue w_of_linear(const PCSeq& f, const FieldElem& s) {
  return w_e(linear_at(s, f.backend()), f);
}

Rational quad_floor(const GroupValue& g) {
  const QuadIrr& d = g.delta().quad_irr();
  QuadIrr q(g.rational_part() + Rational(g.delta_coeff()) * d.a(),
            Rational(g.delta_coeff()) * d.b(), d.d());
  return Rational(q.floor());
}

// smallest few rationals above an irrational group value, descending to it
std::vector<Rational> upper_probes(const GroupValue& g, int count) {
  const QuadIrr& d = g.delta().quad_irr();
  QuadIrr q(g.rational_part() + Rational(g.delta_coeff()) * d.a(),
            Rational(g.delta_coeff()) * d.b(), d.d());
  return q.upper_approximants(count);
}

bool lt_we(const Rational& q, const WEValue& hi) {
  if (hi.kind == WEValue::Kind::plus_infinite) return true;
  if (hi.kind == WEValue::Kind::minus_infinite) return false;
  return GroupValue(q).compare(hi.value) < 0;
}

// gamma with lo <= gamma < hi, when the gap admits a rational
std::optional<Rational> rational_in(const WEValue& lo, const WEValue& hi) {
  if (lo.kind == WEValue::Kind::plus_infinite) return std::nullopt;
  if (lo.kind == WEValue::Kind::minus_infinite) {
    if (hi.kind == WEValue::Kind::minus_infinite) return std::nullopt;
    if (hi.kind == WEValue::Kind::plus_infinite) return Rational(0);
    if (hi.value.delta_coeff() == 0) return hi.value.rational_part() - 1;
    return quad_floor(hi.value);
  }
  if (hi.kind == WEValue::Kind::minus_infinite) return std::nullopt;
  if (lo.value.delta_coeff() == 0) {
    Rational q = lo.value.rational_part();
    return lt_we(q, hi) ? std::optional<Rational>(q) : std::nullopt;
  }
  if (hi.kind == WEValue::Kind::plus_infinite) return quad_floor(lo.value) + 1;
  for (const Rational& q : upper_probes(lo.value, 24))
    if (lt_we(q, hi)) return q;
  return std::nullopt;
}

}  // namespace

RingDescriptor RingDescriptor::ve(PCSeq e) {
  return RingDescriptor(Kind::ve, std::move(e), std::nullopt);
}
RingDescriptor RingDescriptor::we(PCSeq e) {
  return RingDescriptor(Kind::we, std::move(e), std::nullopt);
}
RingDescriptor RingDescriptor::w_point(FieldElem s) {
  return RingDescriptor(Kind::w_point, std::nullopt, std::move(s));
}
const PCSeq& RingDescriptor::seq() const {
  if (!seq_) throw std::logic_error("ring descriptor has no sequence");
  return *seq_;
}
const FieldElem& RingDescriptor::point() const {
  if (!point_) throw std::logic_error("ring descriptor has no point");
  return *point_;
}
std::string RingDescriptor::label() const {
  switch (kind_) {
    case Kind::ve: return "V_" + seq_->name();
    case Kind::we: return "W_" + seq_->name();
    case Kind::w_point: return "W(" + point_->to_string() + ")";
  }
  return "?";
}

bool in_B(const RationalFunction& phi, const RingDescriptor& r) {
  switch (r.kind()) {
    case RingDescriptor::Kind::ve: return in_ve(phi, r.seq());
    case RingDescriptor::Kind::we: return member(phi, r.seq(), RingSide::W).value;
    case RingDescriptor::Kind::w_point: {
      if (phi.is_zero()) return true;
      FieldElem y = phi.eval(r.point());  // pole_error propagates
      if (y.is_zero()) return true;
      return sgn(y.val().q()) >= 0;
    }
  }
  return false;
}

std::string OmegaSet::to_string() const {
  return "Omega(" + s.to_string() + ", " + format_rational(gamma) + ")";
}

bool omega_membership(const PCSeq& e, const FieldElem& s, const Rational& gamma) {
  return we_le(w_of_linear(e, s), gamma);
}

OmegaWitness omega_identity_witness(const FieldElem& s, const Rational& gamma,
                                    const Backend& backend) {
  (void)s;
  return OmegaWitness{FieldElem::t_power(gamma, backend), 1};
}

RationalFunction omega_witness_function(const FieldElem& s, const Rational& gamma,
                                        const Backend& backend) {
  OmegaWitness w = omega_identity_witness(s, gamma, backend);
  Poly den = Poly::x(backend) - Poly::constant(s);
  Poly num = Poly::constant(w.c);
  Poly d = den;
  for (long i = 1; i < w.k; ++i) d = d * den;
  return RationalFunction(num, d);
}

ConvergenceReport convergence_scan(const PCSeq& e, const std::vector<RationalFunction>& fns,
                                   long depth) {
  if (!e.pseudo_limit() && e.kind() != SeqKind::cauchy_series)
    throw precondition_error(
        "convergence scan needs a pseudo-limit in the ground field or a convergent sequence");
  depth = std::min(depth, e.max_index());
  ConvergenceReport rep;
  rep.depth = depth;
  for (const RationalFunction& phi : fns) {
    ConvergenceRow row;
    row.fn = phi.to_string();
    std::vector<bool> verdicts;
    verdicts.reserve(static_cast<std::size_t>(depth + 1));
    for (long n = 0; n <= depth; ++n) {
      try {
        verdicts.push_back(in_B(phi, RingDescriptor::w_point(e.term(n).value)));
      } catch (const pole_error&) {
        verdicts.push_back(false);
        ++row.poles;
      }
    }
    long last_flip = 0;
    for (long n = 1; n <= depth; ++n)
      if (verdicts[static_cast<std::size_t>(n)] != verdicts[static_cast<std::size_t>(n - 1)])
        last_flip = n;
    row.stable_from = last_flip;
    row.stable_value = verdicts.back();
    row.undecided = depth - last_flip < 8;
    row.limit_value = in_ve(phi, e);
    row.matches = !row.undecided && row.stable_value == row.limit_value;
    rep.all_match = rep.all_match && row.matches;
    rep.all_decided = rep.all_decided && !row.undecided;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string ConvergenceReport::to_string() const {
  std::ostringstream out;
  for (const ConvergenceRow& r : rows) {
    out << r.fn << ": ";
    if (r.undecided) {
      out << "undecided at depth " << depth;
    } else {
      out << (r.stable_value ? "in" : "out") << " from index " << r.stable_from << ", limit "
          << (r.limit_value ? "in" : "out") << (r.matches ? " (match)" : " (MISMATCH)");
    }
    if (r.poles > 0) out << " [" << r.poles << " pole term(s)]";
    out << "\n";
  }
  return out.str();
}

std::vector<IncreasingCandidate> enumerate_increasing(const RationalFunction& phi,
                                                      const Rational& target,
                                                      const FieldElem& center) {
  if (phi.is_zero()) throw precondition_error("the zero function has no value profile");
  const Backend b = phi.num().backend();
  DistanceMultiset dist = root_distances(phi, center);

  std::vector<Rational> radii;
  for (const auto& [d, mult] : dist.entries())
    if (!d.is_infinite()) radii.push_back(d.q());

  std::vector<IncreasingCandidate> out;
  std::size_t pieces = radii.size() + 1;
  for (std::size_t i = 0; i < pieces; ++i) {
    Rational m;  // interior probe radius of piece i
    if (radii.empty())
      m = Rational(0);
    else if (i == 0)
      m = radii.front() - 1;
    else if (i == radii.size())
      m = radii.back() + 1;
    else
      m = (radii[i - 1] + radii[i]) / 2;

    long lambda = dist.count_ge(ExtRat(m));
    if (lambda <= 0) continue;

    // v(phi(center + u)) = lambda * v(u) + gamma on this piece
    FieldElem u = FieldElem::t_power(m, b);
    Rational gamma;
    try {
      FieldElem y = phi.eval(center + u);
      if (y.is_zero()) continue;  // probe hit a root; the piece is degenerate
      gamma = y.val().q() - Rational(lambda) * m;
    } catch (const pole_error&) {
      continue;
    }

    Rational delta = (target - gamma) / Rational(lambda);
    bool inside;
    std::string tag;
    if (radii.empty()) {
      inside = true;
      tag = "(-inf, inf)";
    } else if (i == 0) {
      inside = delta <= radii.front();
      tag = "(-inf, " + format_rational(radii.front()) + "]";
    } else if (i == radii.size()) {
      inside = delta > radii.back();
      tag = "(" + format_rational(radii.back()) + ", inf)";
    } else {
      inside = delta > radii[i - 1] && delta <= radii[i];
      tag = "(" + format_rational(radii[i - 1]) + ", " + format_rational(radii[i]) + "]";
    }
    if (!inside) continue;
    out.push_back(IncreasingCandidate{center, delta, lambda, gamma, tag});
  }
  return out;
}

std::string WitnessPart::to_string() const {
  std::ostringstream out;
  if (kind == Kind::omega)
    out << omega->to_string();
  else {
    out << "B(";
    for (std::size_t i = 0; i < fns.size(); ++i) out << (i ? ", " : "") << fns[i].to_string();
    out << ")";
  }
  out << " [V_E " << (e_inside ? "inside" : "outside") << "; separates";
  for (const std::string& c : covers) out << " " << c;
  out << "]";
  if (!note.empty()) out << " " << note;
  return out.str();
}

std::string SeparationWitness::to_string() const {
  std::ostringstream out;
  if (parts.empty()) out << "trivial witness (empty sample)\n";
  for (const WitnessPart& p : parts) out << p.to_string() << "\n";
  out << (verified ? "verified" : "NOT VERIFIED: " + detail) << "\n";
  return out.str();
}

namespace {

bool omega_holds(const OmegaSet& o, const PCSeq& f) { return omega_membership(f, o.s, o.gamma); }

// true when the part puts e and f on opposite sides
bool part_separates(const WitnessPart& p, const PCSeq& e, const PCSeq& f) {
  if (p.kind == WitnessPart::Kind::omega) {
    bool es = omega_holds(*p.omega, e);
    bool fs = omega_holds(*p.omega, f);
    return es == p.e_inside && fs != p.e_inside;
  }
  bool es = true, fs = true;
  for (const RationalFunction& fn : p.fns) {
    es = es && in_ve(fn, e);
    fs = fs && in_ve(fn, f);
  }
  return es == p.e_inside && fs != p.e_inside;
}

std::optional<WitnessPart> omega_part(const PCSeq& e, const PCSeq& f, const FieldElem& s,
                                      const std::string& note) {
  WEValue ae = w_of_linear(e, s);
  WEValue af = w_of_linear(f, s);
  // f inside, e outside
  if (auto g = rational_in(af, ae)) {
    WitnessPart p;
    p.kind = WitnessPart::Kind::omega;
    p.omega = OmegaSet{s, *g};
    p.e_inside = false;
    p.covers = {"V_" + f.name()};
    p.note = note;
    if (part_separates(p, e, f)) return p;
  }
  // e inside, f outside
  if (auto g = rational_in(ae, af)) {
    WitnessPart p;
    p.kind = WitnessPart::Kind::omega;
    p.omega = OmegaSet{s, *g};
    p.e_inside = true;
    p.covers = {"V_" + f.name()};
    p.note = note;
    if (part_separates(p, e, f)) return p;
  }
  return std::nullopt;
}

}  // namespace

SeparationWitness separator(const PCSeq& e, const std::vector<RationalFunction>& closed_set,
                            const std::vector<PCSeq>& sample) {
  for (const RationalFunction& phi : closed_set)
    if (!in_ve(phi, e))
      throw precondition_error("closed-set function " + phi.to_string() + " is not in V_" +
                               e.name());
  SeparationWitness w;
  if (sample.empty()) {
    w.verified = true;
    w.detail = "empty sample";
    return w;
  }

  const Backend b = e.backend();
  for (const PCSeq& f : sample) {
    const RationalFunction* phi_f = nullptr;
    for (const RationalFunction& phi : closed_set)
      if (!in_ve(phi, f)) {
        phi_f = &phi;
        break;
      }

    std::optional<WitnessPart> part;

    // position witnesses first: omega sets at the declared limits (the
    // annulus picture for an algebraic center), else at a deep term of e
    std::vector<std::pair<FieldElem, std::string>> centers;
    long nf = f.max_index() * 3 / 4;
    long ne = e.max_index() * 3 / 4;
    if (e.pseudo_limit())
      centers.push_back({*e.pseudo_limit(), "at the declared limit of " + e.name()});
    else
      centers.push_back({e.term(ne).value, "at a deep term of " + e.name()});
    if (f.pseudo_limit())
      centers.push_back({*f.pseudo_limit(), "at the declared limit of " + f.name()});
    for (auto& [s, note] : centers) {
      part = omega_part(e, f, s, note);
      if (part) break;
    }

    if (!part && phi_f) {
      WEValue wf = w_e(*phi_f, f);
      if (wf.sign() < 0) {
        // the sample ring rejects phi_f outright: divide by it
        Rational rho;
        if (wf.kind == WEValue::Kind::minus_infinite)
          rho = Rational(-1);
        else if (wf.value.delta_coeff() == 0)
          rho = wf.value.rational_part() / 2;
        else {
          rho = quad_floor(wf.value) + 1;  // between the value and 0 when possible
          if (sgn(rho) >= 0) rho = upper_probes(wf.value, 24).back();
        }
        if (sgn(rho) < 0) {
          RationalFunction d = RationalFunction::constant(FieldElem::t_power(rho, b));
          RationalFunction psi = d / *phi_f;
          WitnessPart p;
          p.kind = WitnessPart::Kind::basic;
          p.fns = {psi};
          p.e_inside = false;
          p.covers = {"V_" + f.name()};
          p.note = "val(" + d.to_string() + ") = " + format_rational(rho);
          if (part_separates(p, e, f)) part = p;
        }
      }
    }

    if (!part) {
      // rings sitting in the same position: omega sets at deep terms tell
      // the breadths apart
      std::vector<std::pair<FieldElem, std::string>> deep;
      deep.push_back({f.term(nf).value, "at a deep term of " + f.name()});
      deep.push_back({e.term(ne).value, "at a deep term of " + e.name()});
      for (auto& [s, note] : deep) {
        part = omega_part(e, f, s, note);
        if (part) break;
      }
      if (part && phi_f) {
        ValueProfile pr = value_profile(*phi_f, f);
        WEValue wf = w_e(*phi_f, f);
        if (wf.sign() == 0 && pr.lambda > 0)
          part->note += "; " + phi_f->to_string() + " meets 0 increasingly at breadth " +
                        f.breadth().to_string();
      }
    }

    if (!part) {
      w.verified = false;
      w.detail = "no witness separates V_" + f.name();
      return w;
    }
    w.parts.push_back(std::move(*part));
  }

  for (const WitnessPart& p : w.parts)
    for (const PCSeq& f : sample)
      if (std::find(p.covers.begin(), p.covers.end(), "V_" + f.name()) != p.covers.end() &&
          !part_separates(p, e, f)) {
        w.verified = false;
        w.detail = "verification failed on sample ring V_" + f.name();
        return w;
      }
  w.verified = true;
  w.detail = std::to_string(w.parts.size()) + " part(s), all verified";
  return w;
}

RationalFunction residue_separator(const FieldElem& s, const Rational& delta, const Backend& b) {
  if (!b.is_prime_field())
    throw precondition_error("residue separator needs a finite residue field");
  long p = static_cast<long>(b.p);
  FieldElem z = FieldElem::t_power(delta, b);
  Poly den = Poly::constant(FieldElem::one(b));
  Poly lin = Poly::x(b) - Poly::constant(s);
  for (long u = 0; u < p; ++u) {
    FieldElem cu = FieldElem::constant(Coeff::from_long(u, b));
    den = den * (lin - Poly::constant(z * cu));
  }
  FieldElem zp = z;
  for (long i = 1; i < p; ++i) zp = zp * z;
  RationalFunction psi(Poly::constant(zp), den);

  // probe sweep: below, at, and above delta, every residue class at delta
  auto member_at = [&](const FieldElem& x) {
    try {
      FieldElem y = psi.eval(x);
      if (y.is_zero()) return true;
      return sgn(y.val().q()) >= 0;
    } catch (const pole_error&) {
      return false;
    }
  };
  FieldElem bump = FieldElem::one(b) + FieldElem::t_power(Rational(1), b);
  for (long c = 1; c < p; ++c) {
    FieldElem cu = FieldElem::constant(Coeff::from_long(c, b));
    for (const Rational& rho : {Rational(delta - 1), Rational(delta - Rational(1, 2)), delta,
                                Rational(delta + Rational(1, 2))}) {
      bool want = rho < delta;
      FieldElem u = cu * FieldElem::t_power(rho, b);
      if (member_at(s + u) != want || member_at(s + u * bump) != want)
        throw std::logic_error("residue separator failed its probe sweep");
    }
  }
  return psi;
}

std::string IntRReport::to_string() const {
  std::ostringstream out;
  for (const Probe& pr : probes)
    out << "  " << pr.x << ": " << (pr.pole ? "pole" : pr.value + (pr.member ? " (in V)" : " (not in V)"))
        << "\n";
  for (const SampleRow& s : samples)
    out << "  " << s.name << ": w = " << s.w << (s.in_w ? " (member)" : " (excluded)") << "\n";
  if (!counterexample.empty()) out << "  counterexample: " << counterexample << "\n";
  out << (consistent ? "consistent" : "INCONSISTENT" + (detail.empty() ? "" : ": " + detail))
      << "\n";
  return out.str();
}

IntRReport intr_consistency(const RationalFunction& phi, const std::vector<PCSeq>& sample) {
  IntRReport rep;
  const Backend b = phi.num().backend();

  std::vector<FieldElem> probes;
  probes.push_back(FieldElem::parse("0", b));
  std::vector<Rational> ladder = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                  Rational(1, 2), Rational(1),  Rational(2)};
  long cmax = b.is_prime_field() ? static_cast<long>(b.p) - 1 : 3;
  for (const Rational& rho : ladder)
    for (long c = 1; c <= cmax; ++c)
      probes.push_back(FieldElem::constant(Coeff::from_long(c, b)) * FieldElem::t_power(rho, b));
  for (const PCSeq& f : sample) probes.push_back(f.term(f.max_index() * 3 / 4).value);

  std::optional<FieldElem> bad_probe;
  for (const FieldElem& x : probes) {
    IntRReport::Probe row;
    row.x = x.to_string();
    if (phi.is_zero()) {
      row.member = true;
      row.value = "inf";
    } else {
      try {
        FieldElem y = phi.eval(x);
        if (y.is_zero()) {
          row.member = true;
          row.value = "inf";
        } else {
          ExtRat v = y.val();
          row.member = sgn(v.q()) >= 0;
          row.value = v.to_string();
        }
      } catch (const pole_error&) {
        row.pole = true;
      }
    }
    if (!row.pole && !row.member) {
      rep.all_probes_member = false;
      if (!bad_probe && !x.is_zero()) bad_probe = x;
    }
    rep.probes.push_back(std::move(row));
  }

  bool some_sample_excludes = false;
  for (const PCSeq& f : sample) {
    IntRReport::SampleRow row;
    row.name = f.name();
    WEValue w = phi.is_zero() ? WEValue{} : w_e(phi, f);
    if (phi.is_zero()) {
      row.in_w = true;
      row.w = "inf";
    } else {
      row.in_w = w.sign() >= 0;
      row.w = w.to_string();
    }
    some_sample_excludes = some_sample_excludes || !row.in_w;
    rep.samples.push_back(std::move(row));
  }

  // a failing probe pins down a sequence ring that excludes phi: a ball
  // around the probe tighter than every critical radius
  if (!rep.all_probes_member) {
    FieldElem x0 = bad_probe ? *bad_probe : FieldElem::parse("0", b);
    Rational big(0);
    DistanceMultiset dist = root_distances(phi, x0);
    for (const auto& [d, m] : dist.entries())
      if (!d.is_infinite() && d.q() > big) big = d.q();
    big += 1;
    PCSeq g = PCSeq::single_term("G", x0, GaugeSpec::dyadic(big, Rational(1)), b, 16);
    WEValue wg = w_e(phi, g);
    rep.counterexample = "the sequence settling at " + x0.to_string() + " within radius " +
                         format_rational(big) + " gives w = " + wg.to_string();
    rep.consistent = wg.sign() < 0;
    if (!rep.consistent) rep.detail = "constructed ring does not exclude phi";
  } else if (some_sample_excludes) {
    // every ground-field probe passed, yet a sampled ring excludes phi; the
    // excluded ring's own deep terms were probed above, so this is a defect
    rep.consistent = false;
    rep.detail = "a sample ring excludes phi but no probe exhibits a bad point";
  }
  return rep;
}

}  // namespace pcval
