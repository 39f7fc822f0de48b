#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcval/group_value.hpp"
#include "pcval/newton.hpp"
#include "pcval/pcv.hpp"

namespace pcval {

struct MonomialVal {
  GroupValue value;
  std::vector<long> num_argmin;  // coefficient indices attaining the minimum
  std::vector<long> den_argmin;
};

/// Weighted-shift value: expand around alpha and take min{val(a_i) + i*delta},
/// numerator minus denominator. Ties are legal data; every minimizing index
/// is reported. Requires finite delta and a nonzero function.
MonomialVal monomial_val(const RationalFunction& phi, const FieldElem& alpha,
                         const Breadth& delta);

struct ValueProfile {
  long lambda = 0;
  Rational gamma{0};
  long from_index = -1;  // law holds for every index from here on
  bool certified = false;
  long scanned_to = -1;
  std::string detail;  // reason when not certified
};

/// Linear law val(phi(s_n)) = lambda*delta_n + gamma for n >= from_index.
/// lambda comes from the stabilized distance count; gamma is solved at the
/// certification index and re-verified at the next three defined indices.
ValueProfile value_profile(const RationalFunction& phi, const PCSeq& e);
ValueProfile value_profile(const RationalFunction& phi, const PCSeq& e, long max_index);

struct Degdom {
  long value = 0;
  bool certified = false;
  long certified_at = -1;
};

/// Signed count of critical points traveling with the sequence.
Degdom degdom(const RationalFunction& phi, const PCSeq& e);

struct WEValue {
  enum class Kind { finite, plus_infinite, minus_infinite };
  Kind kind = Kind::finite;
  GroupValue value;       // finite kind only
  long socle_order = 0;   // net multiplicity at the socle, infinite kinds
  std::string socle;      // socle polynomial, infinite kinds
  bool certified = true;
  long certified_at = -1;
  std::string detail;
  int sign() const;
  std::string to_string() const;
};

/// Limit valuation phi -> lim val(phi(s_n)) as a group value. For a
/// convergent sequence of algebraic type this is only a pseudo-valuation:
/// functions meeting the socle get an explicit infinite verdict, never a
/// silent number.
WEValue w_e(const RationalFunction& phi, const PCSeq& e);

class VeValue {
 public:
  enum class Kind { rank1, rank2, at_limit, profile };

  static VeValue rank1(GroupValue g);
  static VeValue rank2(RankTwoValue r);
  static VeValue at_limit(ExtRat v);
  static VeValue profile(long lambda, Rational gamma);

  Kind kind() const { return kind_; }
  const GroupValue& group() const { return g_; }
  const RankTwoValue& pair() const { return r_; }
  const ExtRat& limit_value() const { return lv_; }
  long lambda() const { return lambda_; }
  const Rational& gamma() const { return gamma_; }

  bool certified = true;
  std::string detail;

  int sign() const;
  /// Values of distinct kinds never arise on one sequence; mixing throws.
  int compare(const VeValue& o) const;
  bool operator>(const VeValue& o) const { return compare(o) > 0; }
  bool operator<(const VeValue& o) const { return compare(o) < 0; }
  std::string to_string() const;

 private:
  Kind kind_ = Kind::rank1;
  GroupValue g_;
  RankTwoValue r_;
  ExtRat lv_{Rational(0)};
  long lambda_ = 0;
  Rational gamma_{0};
};

/// The finer sequence valuation: a lexicographic refinement of w_e in the
/// torsion regime, w_e itself in the rank-one regimes, and the value at the
/// limit for convergent sequences.
VeValue v_e(const RationalFunction& phi, const PCSeq& e);

enum class RingSide { V, W };

struct MemberVerdict {
  bool value = false;
  bool certified = true;
  std::string detail;
};

MemberVerdict member(const RationalFunction& phi, const PCSeq& e, RingSide side);

struct RankReport {
  int rank = 1;
  enum class Reason { transcendental, infinite_breadth, torsion, non_torsion } reason;
  std::optional<RationalFunction> minimal_polynomial;
  std::string overring;                      // infinite-breadth case
  std::optional<RationalFunction> witness;   // torsion case: in W but not in V
  std::string notes_delta;                   // breadth rendered for the finite cases
  std::string notes;
  std::string to_string() const;
};

RankReport rank_report(const PCSeq& e);

struct AnnulusLaw {
  long lambda = 0;
  Rational gamma{0};
};

/// val(phi(x)) = lambda*val(x - s) + gamma for val(x - s) inside the open
/// annulus (theta1, theta2), which must be free of critical points of phi.
/// The law is solved at one probe radius and re-verified at two more.
AnnulusLaw annulus_law(const RationalFunction& phi, const FieldElem& s, const Rational& theta1,
                       const ExtRat& theta2);

struct StableAnnulus {
  Rational delta_prime{0};
  long lambda = 0;
  Rational gamma{0};
};

/// Rational delta' below the breadth such that every critical distance under
/// the breadth is at most delta' and val(phi(x)) keeps one sign for
/// val(x - beta) in (delta', breadth). Requires an algebraic sequence with
/// finite breadth and a ground-field pseudo-limit.
StableAnnulus stable_annulus(const RationalFunction& phi, const PCSeq& e);

}  // namespace pcval
