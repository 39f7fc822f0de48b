#include "pcval/field_elem.hpp"

namespace pcval {

FieldElem::FieldElem(SparseSum num, SparseSum den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    if (num_.is_zero()) throw std::invalid_argument("0/0 is not a field element");
    throw pole_error("division by zero in the ground field");
  }
  if (num_.is_zero()) {
    den_ = SparseSum::one(Backend::q());
    return;
  }
  // Normal form: denominator starts at exponent 0 with leading coefficient 1.
  Rational shift = -den_.val().q();
  Coeff scale = den_.leading().inverse();
  den_ = den_.scaled(scale, shift);
  num_ = num_.scaled(scale, shift);
}

FieldElem::FieldElem(SparseSum num) {
  Backend b = num.is_zero() ? Backend::q() : num.leading().backend();
  *this = FieldElem(std::move(num), SparseSum::one(b));
}

bool FieldElem::is_one() const { return !is_zero() && num_ == den_; }

ExtRat FieldElem::val() const {
  if (num_.is_zero()) return ExtRat::infinity();
  return ExtRat(num_.val().q() - den_.val().q());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
  return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + o.negated(); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (is_zero() || o.is_zero()) return FieldElem();
  return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::negated() const {
  FieldElem out = *this;
  out.num_ = out.num_.negated();
  return out;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw pole_error("inverse of zero");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElem base = *this;
  FieldElem out = FieldElem(SparseSum::one(is_zero() ? Backend::q() : num_.leading().backend()));
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return num_ * o.den_ == o.num_ * den_;
}

std::string FieldElem::to_string() const {
  bool den_is_one = den_.size() == 1 && den_.val() == ExtRat(Rational(0)) &&
                    den_.leading() == Coeff::one(den_.leading().backend());
  if (den_is_one) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool den_bare = den_.size() == 1 && den_.leading() == Coeff::one(den_.leading().backend());
  if (!den_bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace pcval
