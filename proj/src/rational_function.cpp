#include "pcval/rational_function.hpp"

namespace pcval {

RationalFunction::RationalFunction(Poly num) {
  Backend b = num.backend();
  *this = RationalFunction(std::move(num), Poly::constant(FieldElem::one(b)));
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw pole_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(FieldElem::one(den_.backend()));
  } else {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
    FieldElem lead = den_.leading();
    if (!lead.is_one()) {
      FieldElem inv = lead.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
  refresh_cleared();
}

void RationalFunction::refresh_cleared() {
  num_cleared_ = clear_denominators(num_);
  den_cleared_ = clear_denominators(den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + o.negated(); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw pole_error("division by the zero function");
  if (is_zero()) return RationalFunction();
  return *this * o.inverse();
}

RationalFunction RationalFunction::negated() const {
  RationalFunction out = *this;
  out.num_ = out.num_.negated();
  out.refresh_cleared();
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw pole_error("inverse of the zero function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  return RationalFunction(num_.pow(k), den_.pow(k));
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return num_ * o.den_ == o.num_ * den_;
}

FieldElem RationalFunction::eval(const FieldElem& s) const {
  FieldElem d = den_.eval(s);
  if (d.is_zero()) throw pole_error("evaluation at a pole");
  return num_.eval(s) / d;
}

RationalFunction::PointVal RationalFunction::point_value(const FieldElem& s) const {
  if (is_zero()) throw std::invalid_argument("point_value of the zero function");
  Poly ns = num_.taylor_shift(s);
  Poly ds = den_.taylor_shift(s);
  long no = ns.ord(), do_ = ds.ord();
  return PointVal{no - do_, ns.coeff(static_cast<std::size_t>(no)) / ds.coeff(static_cast<std::size_t>(do_))};
}

std::string RationalFunction::to_string() const {
  bool den_one = den_.degree() == 0 && den_.coeff(0).is_one();
  if (den_one) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ExtRat poly_val_at(const ClearedPoly& f, const PowCache& p) {
  if (f.coeffs.empty()) return ExtRat::infinity();
  std::size_t d = f.coeffs.size() - 1;
  SparseSum acc;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    acc = acc + f.coeffs[i] * p.num_pow(i) * p.den_pow(d - i);
  }
  if (acc.is_zero()) return ExtRat::infinity();
  Rational v = acc.val().q() - f.den.val().q() - Rational(static_cast<long>(d)) * p.den().val().q();
  return ExtRat(v);
}

RfVal rf_val_at(const RationalFunction& f, const PowCache& p) {
  if (f.is_zero()) return RfVal{false, ExtRat::infinity()};
  ExtRat dv = poly_val_at(f.den_cleared(), p);
  if (dv.is_infinite()) return RfVal{true, ExtRat::infinity()};
  ExtRat nv = poly_val_at(f.num_cleared(), p);
  if (nv.is_infinite()) return RfVal{false, ExtRat::infinity()};
  return RfVal{false, ExtRat(nv.q() - dv.q())};
}

}  // namespace pcval
