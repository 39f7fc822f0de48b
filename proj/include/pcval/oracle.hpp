#pragma once

#include <string>
#include <vector>

#include "pcval/pcv.hpp"
#include "pcval/rational_function.hpp"

namespace pcval {

/// Brute-force counterpart of the symbolic routines: everything here is
/// computed by substituting terms and taking valuations, nothing else.

struct ScanRow {
  long n = 0;
  bool pole = false;      // s_n is a pole of phi
  bool infinite = false;  // phi(s_n) = 0
  Rational value;         // v(phi(s_n)) when neither flag holds
};

/// v(phi(s_n)) for n in [n0, n1], by direct evaluation.
std::vector<ScanRow> profile_scan(const RationalFunction& phi, const PCSeq& e, long n0, long n1);

/// Aligned two-column rendering of a scan.
std::string scan_table(const std::vector<ScanRow>& rows);

struct OracleVerdict {
  bool value = false;
  bool finite_check = true;  // every verdict here is depth-bounded
  long settled_from = 0;
  std::string detail;
};

/// True iff v(phi(s_n)) >= 0 for every checked index past the settling
/// window. The window start is the certified stabilization index when the
/// distance scan certifies one, else 8.
OracleVerdict member_definitional(const RationalFunction& phi, const PCSeq& e, long depth);

/// Cross-distance test: for each gauge step k <= k_max, some tail of the
/// (i, j) grid must have v(s_i - t_j) beyond the step, in both directions,
/// and the breadths must agree exactly.
OracleVerdict equivalent_definitional(const PCSeq& e, const PCSeq& f, long k_max, long depth);

}  // namespace pcval
