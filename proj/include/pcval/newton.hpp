#pragma once

#include <functional>
#include <map>

#include "pcval/quad_irr.hpp"
#include "pcval/rational_function.hpp"

namespace pcval {

/// (valuation, multiplicity) pairs for the roots of f in an algebraic closure,
/// read off the lower Newton polygon. Roots equal to zero report infinity.
/// Sorted by ascending valuation.
std::vector<std::pair<ExtRat, long>> root_valuations(const Poly& f);

/// Multiset over extended rationals with signed multiplicities.
/// Entries with multiplicity zero are never stored.
class DistanceMultiset {
 public:
  void add(const ExtRat& d, long mult);
  long at(const ExtRat& d) const;
  long total() const;
  long count_lt(const ExtRat& theta) const;
  long count_ge(const ExtRat& theta) const;
  DistanceMultiset restrict_lt(const ExtRat& theta) const;
  DistanceMultiset restrict_ge(const ExtRat& theta) const;
  const std::map<ExtRat, long>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  bool operator==(const DistanceMultiset& o) const { return m_ == o.m_; }
  bool operator!=(const DistanceMultiset& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  std::map<ExtRat, long> m_;
};

/// Signed multiset of v(s - r) over zeros (+) and poles (-) of f, with
/// multiplicity. Reduced form makes this independent of the presentation.
DistanceMultiset root_distances(const RationalFunction& f, const FieldElem& s);

/// Same distances computed through the point's power cache; avoids
/// re-expanding powers when many functions are probed at one point.
DistanceMultiset root_distances(const RationalFunction& f, const PowCache& s);

struct StabilizedCount {
  long count = 0;  // signed number of critical points traveling with the sequence
  bool certified = false;
  long certified_at = -1;
  long scanned_to = -1;
  DistanceMultiset frozen;  // distances below the gauge once certified
  DistanceMultiset moving;  // gauge-tracking entries once certified
};

using TermFn = std::function<const SeqTerm&(long)>;
using GaugeFn = std::function<Rational(long)>;

/// Scans the whole index range and reads the answer off the final picture:
/// the distances that settled strictly below the gauge form the frozen part,
/// everything at or above the final gauge is counted as traveling.
/// certified_at is the first index from which the frozen part never changed
/// again and the gauge had passed its largest entry; certification needs at
/// least two stable comparisons before the scan ends. A distance planted
/// exactly on a gauge value deeper than the scan is indistinguishable from a
/// traveling one; a larger max_index resolves it.
StabilizedCount stabilized_distance_count(const RationalFunction& f, const TermFn& term,
                                          long max_index);

}  // namespace pcval
