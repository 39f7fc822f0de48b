#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcval/oracle.hpp"
#include "pcval/valuations.hpp"

namespace pcval {

/// Finite-sample experiments on the space of valuation rings attached to
/// pseudo-convergent sequences and to points of the ground field.

class RingDescriptor {
 public:
  enum class Kind { ve, we, w_point };

  static RingDescriptor ve(PCSeq e);
  static RingDescriptor we(PCSeq e);
  static RingDescriptor w_point(FieldElem s);

  Kind kind() const { return kind_; }
  const PCSeq& seq() const;
  const FieldElem& point() const;
  std::string label() const;

 private:
  RingDescriptor(Kind k, std::optional<PCSeq> e, std::optional<FieldElem> s)
      : kind_(k), seq_(std::move(e)), point_(std::move(s)) {}
  Kind kind_;
  std::optional<PCSeq> seq_;
  std::optional<FieldElem> point_;
};

/// Membership of phi in the described ring. Throws pole_error when the ring
/// is a point ring and the point is a pole of phi.
bool in_B(const RationalFunction& phi, const RingDescriptor& r);

/// The set of sequence rings whose distance to s is at most gamma:
/// {V_F : w_F(X - s) <= gamma}.
struct OmegaSet {
  FieldElem s;
  Rational gamma;
  std::string to_string() const;
};

bool omega_membership(const PCSeq& e, const FieldElem& s, const Rational& gamma);

struct OmegaWitness {
  FieldElem c;  // val(c) = k * gamma
  long k = 1;
};
/// A function whose basic set equals the omega set: c/(X-s)^k.
OmegaWitness omega_identity_witness(const FieldElem& s, const Rational& gamma,
                                    const Backend& backend);
RationalFunction omega_witness_function(const FieldElem& s, const Rational& gamma,
                                        const Backend& backend);

struct ConvergenceRow {
  std::string fn;
  bool stable_value = false;
  long stable_from = 0;   // first index from which the verdict never changes
  bool undecided = false; // still flipping too close to the end of the scan
  bool limit_value = false;
  bool matches = false;
  long poles = 0;
};
struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  long depth = 0;
  bool all_match = true;
  bool all_decided = true;
  std::string to_string() const;
};
/// Membership of each phi in the term rings W_{s_n}, scanned to depth; the
/// stable verdict is compared with membership in V_E.
ConvergenceReport convergence_scan(const PCSeq& e, const std::vector<RationalFunction>& fns,
                                   long depth);

struct IncreasingCandidate {
  FieldElem center;
  Rational delta;  // breadth at which the limit value meets the target
  long lambda = 0;
  Rational gamma;
  std::string interval;  // critical-radius interval the solution falls in
};
/// Solves lambda * delta + gamma = target on every interval between critical
/// radii of phi around the center; candidates with lambda > 0 are the breadths
/// at which a sequence ring meets the target with strictly increasing values.
std::vector<IncreasingCandidate> enumerate_increasing(const RationalFunction& phi,
                                                      const Rational& target,
                                                      const FieldElem& center);

struct WitnessPart {
  enum class Kind { omega, basic };
  Kind kind = Kind::omega;
  std::optional<OmegaSet> omega;                // kind omega
  std::vector<RationalFunction> fns;            // kind basic: intersection of B(f)
  bool e_inside = false;                        // side holding V_E
  std::vector<std::string> covers;              // sample rings this part separates
  std::string note;
  std::string to_string() const;
};
struct SeparationWitness {
  std::vector<WitnessPart> parts;
  bool verified = false;
  std::string detail;  // names the offending ring when verification fails
  std::string to_string() const;
};
/// Builds a witness separating V_E (inside the basic set of the closed_set
/// functions) from every sample ring outside it, then verifies every part.
SeparationWitness separator(const PCSeq& e, const std::vector<RationalFunction>& closed_set,
                            const std::vector<PCSeq>& sample);

/// phi with phi(x) in V exactly when val(x - s) < delta; finite residue
/// fields only.
RationalFunction residue_separator(const FieldElem& s, const Rational& delta, const Backend& b);

struct IntRReport {
  struct Probe {
    std::string x;
    bool pole = false;
    bool member = false;
    std::string value;
  };
  struct SampleRow {
    std::string name;
    bool in_w = false;
    std::string w;
  };
  std::vector<Probe> probes;
  bool all_probes_member = true;
  std::vector<SampleRow> samples;
  bool consistent = true;
  std::string counterexample;
  std::string detail;
  std::string to_string() const;
};
/// Integral-closure consistency at finite scale: ground-field probes of phi
/// against the W-verdicts of the sampled sequence rings. A failing probe is
/// turned into an explicit sequence ring excluding phi.
IntRReport intr_consistency(const RationalFunction& phi, const std::vector<PCSeq>& sample);

}  // namespace pcval
