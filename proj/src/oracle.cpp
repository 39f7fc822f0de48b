#include "pcval/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace pcval {

std::vector<ScanRow> profile_scan(const RationalFunction& phi, const PCSeq& e, long n0, long n1) {
  if (n0 < 0 || n1 > e.max_index() || n0 > n1)
    throw precondition_error("scan range [" + std::to_string(n0) + ", " + std::to_string(n1) +
                             "] is outside the materialized index range");
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(n1 - n0 + 1));
  for (long n = n0; n <= n1; ++n) {
    ScanRow row;
    row.n = n;
    try {
      FieldElem y = phi.eval(e.term(n).value);
      if (y.is_zero())
        row.infinite = true;
      else
        row.value = y.val().q();
    } catch (const pole_error&) {
      row.pole = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_table(const std::vector<ScanRow>& rows) {
  std::size_t w = 1;
  for (const ScanRow& r : rows) w = std::max(w, std::to_string(r.n).size());
  std::ostringstream out;
  for (const ScanRow& r : rows) {
    std::string n = std::to_string(r.n);
    out << std::string(w - n.size(), ' ') << n << "  ";
    if (r.pole)
      out << "pole";
    else if (r.infinite)
      out << "inf";
    else
      out << format_rational(r.value);
    out << "\n";
  }
  return out.str();
}

OracleVerdict member_definitional(const RationalFunction& phi, const PCSeq& e, long depth) {
  OracleVerdict v;
  if (phi.is_zero()) {
    v.value = true;
    v.detail = "zero function";
    return v;
  }
  depth = std::min(depth, e.max_index());
  long n0 = 8;
  StabilizedCount sc = stabilized_distance_count(phi, e.term_fn(), std::min(depth, e.max_index()));
  if (sc.certified) n0 = sc.certified_at;
  n0 = std::min(n0, depth);
  v.settled_from = n0;

  long poles = 0;
  bool ok = true;
  Rational witness;
  long witness_n = -1;
  for (long n = n0; n <= depth; ++n) {
    try {
      FieldElem y = phi.eval(e.term(n).value);
      if (y.is_zero()) continue;
      Rational val = y.val().q();
      if (sgn(val) < 0 && ok) {
        ok = false;
        witness = val;
        witness_n = n;
      }
    } catch (const pole_error&) {
      ++poles;
    }
  }
  v.value = ok;
  std::ostringstream d;
  d << "checked indices " << n0 << ".." << depth;
  if (!ok) d << "; v(phi(s_" << witness_n << ")) = " << format_rational(witness) << " < 0";
  if (poles > 0) d << "; skipped " << poles << " pole index(es)";
  v.detail = d.str();
  return v;
}

namespace {

// smallest m with v(s_i - t_j) > bound for all i, j in [m, depth]; -1 if none
long grid_tail_start(const std::vector<std::vector<ExtRat>>& dist, const ExtRat& bound,
                     long depth) {
  for (long m = 0; m <= depth; ++m) {
    bool ok = true;
    for (long i = m; i <= depth && ok; ++i)
      for (long j = m; j <= depth && ok; ++j)
        if (!(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > bound)) ok = false;
    if (ok) return m;
  }
  return -1;
}

}  // namespace

OracleVerdict equivalent_definitional(const PCSeq& e, const PCSeq& f, long k_max, long depth) {
  OracleVerdict v;
  if (e.breadth() != f.breadth()) {
    v.value = false;
    v.detail = "breadths " + e.breadth().to_string() + " vs " + f.breadth().to_string();
    return v;
  }
  depth = std::min({depth, e.max_index(), f.max_index()});
  k_max = std::min({k_max, depth - 1, e.max_index() - 1, f.max_index() - 1});

  std::vector<std::vector<ExtRat>> dist(static_cast<std::size_t>(depth + 1));
  for (long i = 0; i <= depth; ++i) {
    dist[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(depth + 1));
    for (long j = 0; j <= depth; ++j)
      dist[static_cast<std::size_t>(i)].push_back((e.term(i).value - f.term(j).value).val());
  }

  for (long k = 0; k <= k_max; ++k) {
    long me = grid_tail_start(dist, ExtRat(f.gauge(k)), depth);
    long mf = grid_tail_start(dist, ExtRat(e.gauge(k)), depth);
    if (me < 0 || mf < 0) {
      v.value = false;
      v.detail = "no grid tail clears gauge step " + std::to_string(k) + " within depth " +
                 std::to_string(depth);
      return v;
    }
  }
  v.value = true;
  v.detail = "cross-distance grid to depth " + std::to_string(depth) + ", gauge steps 0.." +
             std::to_string(k_max) + "; breadths equal";
  return v;
}

}  // namespace pcval
