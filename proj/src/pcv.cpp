#include "pcval/pcv.hpp"

#include <mutex>
#include <stdexcept>

namespace pcval {

GaugeSpec GaugeSpec::dyadic(Rational limit, Rational scale) {
  if (sgn(scale) <= 0) throw precondition_error("dyadic gauge requires a positive scale");
  return GaugeSpec(Dyadic{std::move(limit), std::move(scale)});
}

GaugeSpec GaugeSpec::quad_irr(QuadIrr target) { return GaugeSpec(QuadIrrTarget{std::move(target)}); }

GaugeSpec GaugeSpec::linear(Rational slope) {
  if (sgn(slope) <= 0) throw precondition_error("linear gauge requires a positive slope");
  return GaugeSpec(Linear{std::move(slope)});
}

Rational GaugeSpec::at(long n) const {
  if (n < 0) throw std::invalid_argument("gauge index must be nonnegative");
  if (const auto* d = std::get_if<Dyadic>(&v_)) {
    Int p2(1);
    mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<unsigned long>(n));
    return d->limit - d->scale / Rational(p2);
  }
  if (const auto* q = std::get_if<QuadIrrTarget>(&v_)) {
    if (n == 0) return Rational(q->target.floor() - 1);
    return q->target.lower_approximants(static_cast<std::size_t>(n)).back();
  }
  const auto& l = std::get<Linear>(v_);
  return l.slope * Rational(n + 1);
}

Breadth GaugeSpec::limit() const {
  if (const auto* d = std::get_if<Dyadic>(&v_)) return Breadth(d->limit);
  if (const auto* q = std::get_if<QuadIrrTarget>(&v_)) return Breadth(q->target);
  return Breadth::infinity();
}

std::string GaugeSpec::to_string() const {
  if (const auto* d = std::get_if<Dyadic>(&v_))
    return "dyadic(limit=" + format_rational(d->limit) + ", scale=" + format_rational(d->scale) + ")";
  if (const auto* q = std::get_if<QuadIrrTarget>(&v_))
    return "lower-convergents(" + q->target.to_string() + ")";
  return "linear(slope=" + format_rational(std::get<Linear>(v_).slope) + ")";
}

std::string to_string(SeqKind k) {
  switch (k) {
    case SeqKind::single_term: return "SingleTerm";
    case SeqKind::partial_sum: return "PartialSum";
    case SeqKind::cauchy_to_k: return "CauchyToK";
    case SeqKind::cauchy_series: return "CauchySeries";
  }
  return "?";
}

std::string to_string(SeqType t) {
  return t == SeqType::algebraic ? "algebraic" : "transcendental";
}

namespace {

/// Series expansion of a ground-field element, keeping exponents < bound.
SparseSum series_expand(const FieldElem& x, const Rational& bound) {
  if (x.is_zero()) return SparseSum();
  const SparseSum& num = x.num();
  // den is 1 + u with val(u) > 0 by the normal form.
  SparseSum u = x.den() - SparseSum::one(x.backend());
  if (u.is_zero()) return num.truncated_below(bound);
  Rational eps = u.val().q();
  if (sgn(eps) <= 0) throw std::logic_error("denominator not in normal form");
  Rational tail_bound = bound - num.val().q();
  SparseSum inv = SparseSum::one(x.backend());
  SparseSum upow = SparseSum::one(x.backend());
  SparseSum neg_u = u.negated();
  while (true) {
    upow = (upow * neg_u).truncated_below(tail_bound);
    if (upow.is_zero()) break;
    inv = inv + upow;
  }
  return (num * inv).truncated_below(bound);
}

Rational binom_coeff(const Rational& a, long k, Rational prev) {
  // C(a, k) from C(a, k-1); C(a, 0) = 1.
  if (k == 0) return Rational(1);
  return prev * (a - Rational(k - 1)) / Rational(k);
}

}  // namespace

struct PCSeq::State {
  std::string name;
  SeqKind kind;
  SeqType type;
  Backend backend;
  long max_index;
  GaugeSpec gauge;
  std::optional<FieldElem> beta;  // pseudo-limit in K
  std::optional<RationalFunction> minpoly;
  std::optional<Rational> binom_a;

  mutable std::mutex mu;
  mutable std::deque<SeqTerm> terms;
  mutable std::vector<Rational> gauges;
  mutable Rational last_coeff;  // running binomial coefficient for cauchy_series

  State(std::string nm, SeqKind k, SeqType t, Backend b, long mi, GaugeSpec g)
      : name(std::move(nm)), kind(k), type(t), backend(b), max_index(mi), gauge(std::move(g)) {}

  Rational gauge_unlocked(long n) const {
    while (static_cast<long>(gauges.size()) <= n) {
      long m = static_cast<long>(gauges.size());
      gauges.push_back(kind == SeqKind::partial_sum ? gauge.at(m + 1) : gauge.at(m));
    }
    return gauges[static_cast<std::size_t>(n)];
  }

  Rational gauge_at(long n) const {
    check_index(n);
    std::lock_guard<std::mutex> lock(mu);
    return gauge_unlocked(n);
  }

  void check_index(long n) const {
    if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
    if (n > max_index)
      throw precondition_error("index " + std::to_string(n) +
                               " exceeds the configured bound max_index = " +
                               std::to_string(max_index));
  }

  const SeqTerm& term_at(long n) const {
    check_index(n);
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(terms.size()) <= n) {
      long m = static_cast<long>(terms.size());
      FieldElem value = materialize_unlocked(m);
      terms.emplace_back(std::move(value), gauge_unlocked(m), m);
    }
    return terms[static_cast<std::size_t>(n)];
  }

  FieldElem materialize_unlocked(long m) const {
    switch (kind) {
      case SeqKind::single_term:
        return *beta + FieldElem::t_power(gauge.at(m), backend);
      case SeqKind::partial_sum: {
        FieldElem piece = FieldElem::t_power(gauge.at(m), backend);
        return m == 0 ? piece : terms.back().value + piece;
      }
      case SeqKind::cauchy_to_k:
        return FieldElem(series_expand(*beta, gauge_unlocked(m)));
      case SeqKind::cauchy_series: {
        last_coeff = binom_coeff(*binom_a, m, last_coeff);
        FieldElem piece =
            FieldElem::constant(Coeff::from_rational(last_coeff, backend)) *
            FieldElem::t_power(Rational(m), backend);
        return m == 0 ? piece : terms.back().value + piece;
      }
    }
    throw std::logic_error("unreachable sequence kind");
  }
};

namespace {

void validate_seq(const PCSeq& e) {
  long d = std::min<long>(12, e.max_index());
  Breadth br = e.breadth();
  for (long n = 0; n <= d; ++n) {
    Rational g = e.gauge(n);
    if (br.compare(ExtRat(g)) <= 0)
      throw precondition_error("gauge must stay below the breadth: gauge(" + std::to_string(n) +
                               ") = " + format_rational(g) + " vs breadth " + br.to_string());
    if (n > 0 && !(e.gauge(n - 1) < g))
      throw precondition_error("gauge must be strictly increasing at n = " + std::to_string(n));
  }
  for (long n = 0; n + 1 <= d; ++n) {
    ExtRat diff = (e.term(n + 1).value - e.term(n).value).val();
    if (diff != ExtRat(e.gauge(n)))
      throw precondition_error("pseudo-convergence law violated: val(s_" + std::to_string(n + 1) +
                               " - s_" + std::to_string(n) + ") = " + diff.to_string() +
                               " but gauge(" + std::to_string(n) + ") = " +
                               format_rational(e.gauge(n)));
  }
  if (e.pseudo_limit()) {
    for (long n = 0; n <= d; ++n) {
      ExtRat dist = (*e.pseudo_limit() - e.term(n).value).val();
      if (dist != ExtRat(e.gauge(n)))
        throw precondition_error("declared pseudo-limit must sit at gauge distance: val(beta - s_" +
                                 std::to_string(n) + ") = " + dist.to_string() + " but gauge(" +
                                 std::to_string(n) + ") = " + format_rational(e.gauge(n)));
    }
  }
}

}  // namespace

PCSeq PCSeq::single_term(std::string name, FieldElem beta, GaugeSpec g, const Backend& b,
                         long max_index) {
  if (!beta.is_zero() && !(beta.backend() == b))
    throw std::invalid_argument("beta backend differs from the sequence backend");
  auto st = std::make_shared<State>(std::move(name), SeqKind::single_term, SeqType::algebraic, b,
                                    max_index, std::move(g));
  st->beta = std::move(beta);
  PCSeq e(std::move(st));
  validate_seq(e);
  return e;
}

PCSeq PCSeq::partial_sum(std::string name, GaugeSpec exponents, const Backend& b, long max_index) {
  auto st = std::make_shared<State>(std::move(name), SeqKind::partial_sum,
                                    SeqType::transcendental, b, max_index, std::move(exponents));
  PCSeq e(std::move(st));
  validate_seq(e);
  return e;
}

PCSeq PCSeq::cauchy_to_k(std::string name, FieldElem limit, Rational slope, const Backend& b,
                         long max_index) {
  if (limit.is_zero()) throw precondition_error("a Cauchy sequence to 0 is not pseudo-convergent");
  if (!(limit.backend() == b))
    throw std::invalid_argument("limit backend differs from the sequence backend");
  auto st = std::make_shared<State>(std::move(name), SeqKind::cauchy_to_k, SeqType::algebraic, b,
                                    max_index, GaugeSpec::linear(std::move(slope)));
  st->beta = std::move(limit);
  PCSeq e(std::move(st));
  validate_seq(e);
  return e;
}

PCSeq PCSeq::cauchy_series(std::string name, Rational binom_exponent, const Backend& b,
                           std::optional<RationalFunction> minimal_polynomial, long max_index) {
  auto st = std::make_shared<State>(std::move(name), SeqKind::cauchy_series, SeqType::algebraic, b,
                                    max_index, GaugeSpec::linear(Rational(1)));
  st->binom_a = std::move(binom_exponent);
  st->minpoly = std::move(minimal_polynomial);
  PCSeq e(std::move(st));
  validate_seq(e);
  return e;
}

PCSeq PCSeq::fixture(const std::string& name, const Backend& b, long max_index) {
  if (name == "E1")
    return single_term("E1", FieldElem(), GaugeSpec::dyadic(Rational(1), Rational(1)), b, max_index);
  if (name == "E2")
    return single_term("E2", FieldElem(),
                       GaugeSpec::quad_irr(QuadIrr(Rational(0), Rational(1), Int(2))), b, max_index);
  if (name == "E3")
    return cauchy_to_k("E3", FieldElem::parse("t/(1 - t)", b), Rational(1), b, max_index);
  if (name == "E4")
    return cauchy_series("E4", Rational(1, 2), b, RationalFunction::parse("X^2 - (1 + t)", b),
                         max_index);
  if (name == "E5")
    return partial_sum("E5", GaugeSpec::dyadic(Rational(1), Rational(1)), b, max_index);
  throw std::invalid_argument("unknown fixture: " + name);
}

const std::vector<std::pair<std::string, std::string>>& PCSeq::fixture_catalog() {
  static const std::vector<std::pair<std::string, std::string>> cat = {
      {"E1", "s_n = t^(1 - 1/2^n); breadth 1; pseudo-limit 0"},
      {"E2", "s_n = t^(q_n) with q_n the lower convergents of sqrt(2); breadth sqrt(2); pseudo-limit 0"},
      {"E3", "partial geometric sums converging to t/(1 - t); breadth inf"},
      {"E4", "partial sums of the binomial series for (1 + t)^(1/2); breadth inf; minimal polynomial X^2 - (1 + t)"},
      {"E5", "s_n = sum_{i<=n} t^(1 - 1/2^i); breadth 1; no pseudo-limit in the ground field"},
  };
  return cat;
}

const std::string& PCSeq::name() const { return s_->name; }
SeqKind PCSeq::kind() const { return s_->kind; }
SeqType PCSeq::declared_type() const { return s_->type; }
Backend PCSeq::backend() const { return s_->backend; }
long PCSeq::max_index() const { return s_->max_index; }
const GaugeSpec& PCSeq::gauge_spec() const { return s_->gauge; }
const std::optional<FieldElem>& PCSeq::pseudo_limit() const { return s_->beta; }
const std::optional<RationalFunction>& PCSeq::minimal_polynomial() const { return s_->minpoly; }
const std::optional<Rational>& PCSeq::binom_exponent() const { return s_->binom_a; }

Breadth PCSeq::breadth() const { return s_->gauge.limit(); }
Rational PCSeq::gauge(long n) const { return s_->gauge_at(n); }
const SeqTerm& PCSeq::term(long n) const { return s_->term_at(n); }

GaugeFn PCSeq::gauge_fn() const {
  return [s = s_](long n) { return s->gauge_at(n); };
}

TermFn PCSeq::term_fn() const {
  return [s = s_](long n) -> const SeqTerm& { return s->term_at(n); };
}

std::string PCSeq::describe() const {
  std::string out = s_->name + ": " + pcval::to_string(s_->kind) + ", gauge " +
                    s_->gauge.to_string() + ", breadth " + breadth().to_string();
  if (s_->beta) out += ", pseudo-limit " + s_->beta->to_string();
  if (s_->minpoly) out += ", minimal polynomial " + s_->minpoly->to_string();
  out += ", type " + pcval::to_string(s_->type);
  return out;
}

bool in_breadth_ideal(const PCSeq& e, const FieldElem& b) {
  return e.breadth().compare(b.val()) <= 0;
}

PlAnswer is_pseudo_limit(const PCSeq& e, const FieldElem& alpha, long depth) {
  if (e.pseudo_limit()) {
    bool v = in_breadth_ideal(e, alpha - *e.pseudo_limit());
    return PlAnswer{v, false, "breadth-ball criterion at the declared pseudo-limit"};
  }
  if (e.kind() == SeqKind::cauchy_series)
    return PlAnswer{false, false, "the series limit lies outside the ground field"};
  depth = std::min(depth, e.max_index());
  long window = std::min<long>(8, depth);
  bool ok = true;
  for (long n = depth - window; n <= depth; ++n) {
    ExtRat d = (alpha - e.term(n).value).val();
    if (d != ExtRat(e.gauge(n))) {
      ok = false;
      break;
    }
  }
  return PlAnswer{ok, true, "definitional check only (depth " + std::to_string(depth) + ")"};
}

TypeReport classify_type(const PCSeq& e, long depth) {
  depth = std::min(depth, e.max_index());
  TypeReport r;
  r.type = e.declared_type();
  r.scan_depth = depth;
  if (e.declared_type() == SeqType::algebraic) {
    if (e.pseudo_limit()) {
      r.certificate = TypeReport::Certificate::pseudo_limit;
      r.witness = RationalFunction::x(e.backend()) -
                  RationalFunction::constant(*e.pseudo_limit());
      r.detail = "X - beta takes strictly increasing values along the sequence";
    } else {
      r.certificate = TypeReport::Certificate::minimal_polynomial;
      r.witness = e.minimal_polynomial();
      r.detail = "the minimal polynomial takes strictly increasing values along the sequence";
    }
    if (!r.witness) {
      r.scan_ok = false;
      r.detail = "no witness available; certificate unverified";
      return r;
    }
    bool increasing = true;
    ExtRat prev;
    bool have_prev = false;
    for (long n = std::max<long>(0, depth - 8); n <= depth; ++n) {
      RfVal v = rf_val_at(*r.witness, e.term(n).cache);
      if (v.pole || (have_prev && !(prev < v.v))) {
        increasing = false;
        break;
      }
      prev = v.v;
      have_prev = true;
    }
    r.scan_ok = increasing;
    if (!increasing) r.detail += "; scan failed; certificate unverified";
    return r;
  }
  r.certificate = TypeReport::Certificate::denominator_growth;
  r.detail = "gauge exponent denominators grow without bound";
  bool all_stable = true;
  for (const char* fn : {"X", "X - 1", "X^2 - t", "X^3 - t^2"}) {
    RationalFunction f = RationalFunction::parse(fn, e.backend());
    ExtRat prev;
    bool have_prev = false;
    bool stable = true;
    for (long n = std::max<long>(0, depth - 4); n <= depth; ++n) {
      RfVal v = rf_val_at(f, e.term(n).cache);
      if (v.pole) {
        stable = false;
        break;
      }
      if (have_prev && !(prev == v.v)) stable = false;
      prev = v.v;
      have_prev = true;
    }
    if (!stable) {
      all_stable = false;
      break;
    }
  }
  r.scan_ok = all_stable;
  r.detail += all_stable
                  ? "; value scan found no traveling critical points for the test battery"
                  : "; scan failed; certificate unverified";
  return r;
}

bool definitional_after(const PCSeq& e, const PCSeq& f, long depth) {
  depth = std::min({depth, e.max_index(), f.max_index()});
  std::vector<std::vector<ExtRat>> dist(static_cast<std::size_t>(depth + 1));
  for (long i = 0; i <= depth; ++i)
    for (long j = 0; j <= depth; ++j)
      dist[static_cast<std::size_t>(i)].push_back((e.term(i).value - f.term(j).value).val());
  long k_max = depth / 2;
  for (long k = 0; k <= k_max; ++k) {
    ExtRat bound{f.gauge(k)};
    bool found = false;
    for (long m = 0; m <= depth && !found; ++m) {
      bool ok = true;
      for (long i = m; i <= depth && ok; ++i)
        for (long j = m; j <= depth && ok; ++j)
          if (!(bound < dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) ok = false;
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

EquivReport equivalent(const PCSeq& e, const PCSeq& f, long depth) {
  EquivReport r;
  Breadth be = e.breadth(), bf = f.breadth();
  if (be != bf) {
    r.value = false;
    r.criterion = EquivReport::Criterion::breadth_mismatch;
    r.detail = "breadths " + be.to_string() + " vs " + bf.to_string();
    return r;
  }
  if (e.pseudo_limit() && f.pseudo_limit()) {
    FieldElem diff = *e.pseudo_limit() - *f.pseudo_limit();
    bool same_ball = in_breadth_ideal(e, diff);
    r.value = same_ball;
    r.criterion = same_ball ? EquivReport::Criterion::ball_match
                            : EquivReport::Criterion::ball_mismatch;
    r.detail = "val(beta_E - beta_F) = " + diff.val().to_string() + " vs breadth " +
               be.to_string();
    return r;
  }
  bool es = e.kind() == SeqKind::cauchy_series, fs = f.kind() == SeqKind::cauchy_series;
  if (es && fs) {
    bool same = e.binom_exponent() && f.binom_exponent() &&
                *e.binom_exponent() == *f.binom_exponent() && e.backend() == f.backend();
    r.value = same;
    r.criterion = EquivReport::Criterion::series_limits;
    r.detail = same ? "identical series limits" : "distinct series limits";
    return r;
  }
  if (es != fs && (e.pseudo_limit() || f.pseudo_limit())) {
    r.value = false;
    r.criterion = EquivReport::Criterion::limit_kind_mismatch;
    r.detail = "one limit lies outside the ground field";
    return r;
  }
  r.value = definitional_after(e, f, depth) && definitional_after(f, e, depth);
  r.criterion = EquivReport::Criterion::definitional;
  r.detail = "definitional two-sided check to depth " + std::to_string(depth) +
             " (no pseudo-limit data)";
  return r;
}

}  // namespace pcval
