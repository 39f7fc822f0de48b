#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "pcval/newton.hpp"

namespace pcval {

/// Closed-form strictly increasing rational ladders.
class GaugeSpec {
 public:
  struct Dyadic {
    Rational limit, scale;  // value at n: limit - scale/2^n; scale > 0
  };
  struct QuadIrrTarget {
    QuadIrr target;  // value at 0: floor(target)-1; at n>=1: n-th lower convergent
  };
  struct Linear {
    Rational slope;  // value at n: slope*(n+1); slope > 0
  };

  static GaugeSpec dyadic(Rational limit, Rational scale);
  static GaugeSpec quad_irr(QuadIrr target);
  static GaugeSpec linear(Rational slope);

  Rational at(long n) const;
  /// Least upper bound of the ladder (infinite for Linear).
  Breadth limit() const;

  bool is_dyadic() const { return std::holds_alternative<Dyadic>(v_); }
  bool is_quad_irr() const { return std::holds_alternative<QuadIrrTarget>(v_); }
  bool is_linear() const { return std::holds_alternative<Linear>(v_); }
  const Dyadic& dyadic_params() const { return std::get<Dyadic>(v_); }
  const QuadIrrTarget& quad_irr_params() const { return std::get<QuadIrrTarget>(v_); }
  const Linear& linear_params() const { return std::get<Linear>(v_); }
  std::string to_string() const;

 private:
  explicit GaugeSpec(std::variant<Dyadic, QuadIrrTarget, Linear> v) : v_(std::move(v)) {}
  std::variant<Dyadic, QuadIrrTarget, Linear> v_;
};

enum class SeqKind { single_term, partial_sum, cauchy_to_k, cauchy_series };
enum class SeqType { algebraic, transcendental };

std::string to_string(SeqKind k);
std::string to_string(SeqType t);

/// A pseudo-convergent sequence with a closed-form generator.
/// Values are immutable; term materialization is memoized and synchronized.
/// Construction validates the pseudo-convergence law v(s_{n+1} - s_n) = delta_n
/// to a fixed depth and throws precondition_error naming the violated clause.
class PCSeq {
 public:
  /// s_n = beta + t^(g(n)).
  static PCSeq single_term(std::string name, FieldElem beta, GaugeSpec g, const Backend& b,
                           long max_index = 64);
  /// s_n = sum_{i<=n} t^(g(i)); gauge(n) = g(n+1).
  static PCSeq partial_sum(std::string name, GaugeSpec exponents, const Backend& b,
                           long max_index = 64);
  /// s_n = the series expansion of limit truncated below gauge(n); gauge(n) = slope*(n+1).
  static PCSeq cauchy_to_k(std::string name, FieldElem limit, Rational slope, const Backend& b,
                           long max_index = 64);
  /// s_n = sum_{k<=n} binom(a, k) t^k, partial sums of (1 + t)^a; gauge(n) = n + 1.
  static PCSeq cauchy_series(std::string name, Rational binom_exponent, const Backend& b,
                             std::optional<RationalFunction> minimal_polynomial,
                             long max_index = 64);

  /// Named fixtures E1..E5.
  static PCSeq fixture(const std::string& name, const Backend& b, long max_index = 64);
  static const std::vector<std::pair<std::string, std::string>>& fixture_catalog();

  const std::string& name() const;
  SeqKind kind() const;
  SeqType declared_type() const;
  Backend backend() const;
  long max_index() const;
  const GaugeSpec& gauge_spec() const;
  /// Pseudo-limit in the ground field, when one is declared.
  const std::optional<FieldElem>& pseudo_limit() const;
  const std::optional<RationalFunction>& minimal_polynomial() const;
  const std::optional<Rational>& binom_exponent() const;

  Breadth breadth() const;
  Rational gauge(long n) const;
  const SeqTerm& term(long n) const;
  GaugeFn gauge_fn() const;
  TermFn term_fn() const;
  std::string describe() const;

 private:
  struct State;
  explicit PCSeq(std::shared_ptr<State> s) : s_(std::move(s)) {}
  std::shared_ptr<State> s_;
};

/// True iff val(b) exceeds every gauge value, decided against the breadth.
bool in_breadth_ideal(const PCSeq& e, const FieldElem& b);

struct PlAnswer {
  bool value = false;
  bool definitional_only = false;  // no pseudo-limit data; depth-bounded answer
  std::string detail;
};
/// Whether alpha is a pseudo-limit of e. Uses the breadth-ball criterion when
/// pseudo-limit data exists; otherwise a depth-bounded definitional check.
PlAnswer is_pseudo_limit(const PCSeq& e, const FieldElem& alpha, long depth = 24);

struct TypeReport {
  SeqType type;
  enum class Certificate { pseudo_limit, minimal_polynomial, denominator_growth } certificate;
  std::optional<RationalFunction> witness;  // function with strictly increasing values
  bool scan_ok = false;
  long scan_depth = 0;
  std::string detail;
};
TypeReport classify_type(const PCSeq& e, long depth = 16);

struct EquivReport {
  bool value = false;
  enum class Criterion {
    breadth_mismatch,
    ball_match,
    ball_mismatch,
    limit_kind_mismatch,
    series_limits,
    definitional
  } criterion;
  std::string detail;
};
/// Equivalence of pseudo-convergent sequences: equal breadths and the same
/// pseudo-limit ball. Pairs without pseudo-limit data fall back to the
/// definitional two-sided check to the given depth (flagged in the report).
EquivReport equivalent(const PCSeq& e, const PCSeq& f, long depth = 16);

/// One-sided definitional comparison: every deep difference s_i - t_j
/// eventually exceeds each of F's gauge values. Depth-bounded.
bool definitional_after(const PCSeq& e, const PCSeq& f, long depth);

}  // namespace pcval
