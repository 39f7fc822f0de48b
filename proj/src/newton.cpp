#include "pcval/newton.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pcval {

namespace {

struct HullPoint {
  long x;
  Rational y;
};

/// Lower convex hull of points sorted by strictly increasing x.
/// Collinear points are dropped so each segment is maximal.
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> h;
  for (const auto& p : pts) {
    while (h.size() >= 2) {
      const HullPoint& a = h[h.size() - 2];
      const HullPoint& b = h[h.size() - 1];
      Rational cross = Rational(b.x - a.x) * (p.y - a.y) - (b.y - a.y) * Rational(p.x - a.x);
      if (sgn(cross) <= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(p);
  }
  return h;
}

/// Root valuations of a polynomial given the valuations of its coefficients
/// (missing index = zero coefficient). Appends signed results into out.
void slopes_into(const std::map<long, Rational>& coeff_vals, long ord, DistanceMultiset& out,
                 long sign) {
  if (ord > 0) out.add(ExtRat::infinity(), sign * ord);
  std::vector<HullPoint> pts;
  for (const auto& [i, v] : coeff_vals) pts.push_back({i, v});
  std::vector<HullPoint> hull = lower_hull(pts);
  for (std::size_t k = 1; k < hull.size(); ++k) {
    Rational slope = (hull[k].y - hull[k - 1].y) / Rational(hull[k].x - hull[k - 1].x);
    out.add(ExtRat(Rational(-slope)), sign * (hull[k].x - hull[k - 1].x));
  }
}

std::map<long, Rational> poly_coeff_vals(const Poly& f) {
  std::map<long, Rational> vals;
  for (long i = 0; i <= f.degree(); ++i) {
    const FieldElem& c = f.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) vals[i] = c.val().q();
  }
  return vals;
}

/// Valuations of the coefficients of f(X + s) for a cleared polynomial,
/// using cached powers of the point. The common denominator shifts every
/// coefficient valuation equally, which leaves the polygon slopes intact,
/// so it is not subtracted here.
std::map<long, Rational> shifted_coeff_vals(const ClearedPoly& f, const PowCache& s) {
  std::map<long, Rational> vals;
  long d = static_cast<long>(f.coeffs.size()) - 1;
  Backend b = Backend::q();
  for (const auto& a : f.coeffs)
    if (!a.is_zero()) b = a.leading().backend();
  for (long i = 0; i <= d; ++i) {
    SparseSum acc;
    for (long j = i; j <= d; ++j) {
      const SparseSum& a = f.coeffs[static_cast<std::size_t>(j)];
      if (a.is_zero()) continue;
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(i));
      Coeff cb = Coeff::from_rational(Rational(binom), b);
      if (cb.is_zero()) continue;
      SparseSum piece = a * s.num_pow(j - i) * s.den_pow(d - j + i);
      acc = acc + piece.scaled(cb, Rational(0));
    }
    if (!acc.is_zero()) vals[i] = acc.val().q();
  }
  return vals;
}

long lowest_index(const std::map<long, Rational>& vals) {
  return vals.empty() ? -1 : vals.begin()->first;
}

}  // namespace

std::vector<std::pair<ExtRat, long>> root_valuations(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("root valuations of the zero polynomial");
  DistanceMultiset ds;
  slopes_into(poly_coeff_vals(f), f.ord(), ds, 1);
  std::vector<std::pair<ExtRat, long>> out;
  for (const auto& [v, m] : ds.entries()) out.emplace_back(v, m);
  return out;
}

void DistanceMultiset::add(const ExtRat& d, long mult) {
  if (mult == 0) return;
  auto it = m_.find(d);
  if (it == m_.end()) {
    m_.emplace(d, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) m_.erase(it);
}

long DistanceMultiset::at(const ExtRat& d) const {
  auto it = m_.find(d);
  return it == m_.end() ? 0 : it->second;
}

long DistanceMultiset::total() const {
  long s = 0;
  for (const auto& [d, m] : m_) s += m;
  return s;
}

long DistanceMultiset::count_lt(const ExtRat& theta) const {
  long s = 0;
  for (const auto& [d, m] : m_)
    if (d < theta) s += m;
  return s;
}

long DistanceMultiset::count_ge(const ExtRat& theta) const { return total() - count_lt(theta); }

DistanceMultiset DistanceMultiset::restrict_lt(const ExtRat& theta) const {
  DistanceMultiset out;
  for (const auto& [d, m] : m_)
    if (d < theta) out.add(d, m);
  return out;
}

DistanceMultiset DistanceMultiset::restrict_ge(const ExtRat& theta) const {
  DistanceMultiset out;
  for (const auto& [d, m] : m_)
    if (!(d < theta)) out.add(d, m);
  return out;
}

std::string DistanceMultiset::to_string() const {
  if (m_.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& [d, m] : m_) {
    if (!first) out += ", ";
    first = false;
    out += d.to_string() + ": " + std::to_string(m);
  }
  return out + "}";
}

DistanceMultiset root_distances(const RationalFunction& f, const FieldElem& s) {
  DistanceMultiset out;
  if (f.is_zero()) throw std::invalid_argument("root distances of the zero function");
  if (f.num().degree() > 0) {
    Poly ns = f.num().taylor_shift(s);
    slopes_into(poly_coeff_vals(ns), ns.ord(), out, 1);
  }
  if (f.den().degree() > 0) {
    Poly ds = f.den().taylor_shift(s);
    slopes_into(poly_coeff_vals(ds), ds.ord(), out, -1);
  }
  return out;
}

DistanceMultiset root_distances(const RationalFunction& f, const PowCache& s) {
  DistanceMultiset out;
  if (f.is_zero()) throw std::invalid_argument("root distances of the zero function");
  if (f.num().degree() > 0) {
    auto nv = shifted_coeff_vals(f.num_cleared(), s);
    slopes_into(nv, lowest_index(nv), out, 1);
  }
  if (f.den().degree() > 0) {
    auto dv = shifted_coeff_vals(f.den_cleared(), s);
    slopes_into(dv, lowest_index(dv), out, -1);
  }
  return out;
}

StabilizedCount stabilized_distance_count(const RationalFunction& f, const TermFn& term,
                                          long max_index) {
  StabilizedCount out;
  if (f.is_constant()) {
    // No critical points at all: certified immediately with empty picture.
    out.certified = true;
    out.certified_at = 0;
    out.scanned_to = 0;
    return out;
  }
  std::vector<DistanceMultiset> lows;
  std::vector<Rational> deltas;
  lows.reserve(static_cast<std::size_t>(max_index) + 1);
  deltas.reserve(static_cast<std::size_t>(max_index) + 1);
  DistanceMultiset final_dist;
  for (long n = 0; n <= max_index; ++n) {
    const SeqTerm& tn = term(n);
    DistanceMultiset dist = root_distances(f, tn.cache);
    lows.push_back(dist.restrict_lt(ExtRat(tn.delta)));
    deltas.push_back(tn.delta);
    if (n == max_index) final_dist = std::move(dist);
  }
  out.scanned_to = max_index;
  out.frozen = lows.back();
  out.moving = final_dist.restrict_ge(ExtRat(deltas.back()));
  out.count = out.moving.total();
  long stable_from = 1;
  for (long n = max_index; n >= 1; --n)
    if (lows[static_cast<std::size_t>(n)] != lows[static_cast<std::size_t>(n - 1)]) {
      stable_from = n + 1;
      break;
    }
  long gate_from = -1;
  if (out.frozen.empty()) {
    gate_from = 1;
  } else {
    ExtRat largest = out.frozen.entries().rbegin()->first;
    for (long n = 0; n <= max_index; ++n)
      if (ExtRat(deltas[static_cast<std::size_t>(n)]) > largest) {
        gate_from = std::max(n, 1L);
        break;
      }
  }
  if (gate_from < 0) return out;  // gauge never passed the frozen distances
  out.certified_at = std::max(stable_from, gate_from);
  // Two stable comparisons after the certification index guard against a
  // picture that only just settled at the end of the scan.
  out.certified = out.certified_at + 2 <= max_index;
  if (!out.certified) out.certified_at = -1;
  return out;
}

}  // namespace pcval