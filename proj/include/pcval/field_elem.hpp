#pragma once

#include "pcval/sparse_sum.hpp"

namespace pcval {

/// Element of the ground field: a quotient of sparse t-sums.
/// Normal form: zero is 0/1; otherwise the denominator starts at exponent 0
/// with leading coefficient 1. Equality is semantic (cross-multiplication).
class FieldElem {
 public:
  FieldElem() : num_(), den_(SparseSum::one(Backend::q())) {}
  FieldElem(SparseSum num, SparseSum den);
  explicit FieldElem(SparseSum num);

  static FieldElem t_power(const Rational& e, const Backend& b) {
    return FieldElem(SparseSum::term(Coeff::one(b), e));
  }
  static FieldElem constant(const Coeff& c) { return FieldElem(SparseSum::constant(c)); }
  static FieldElem one(const Backend& b) { return FieldElem(SparseSum::one(b)); }
  static FieldElem from_rational(const Rational& q, const Backend& b) {
    return constant(Coeff::from_rational(q, b));
  }

  const SparseSum& num() const { return num_; }
  const SparseSum& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// Zero elements are backend-neutral and report the rational backend.
  Backend backend() const {
    return num_.is_zero() ? den_.leading().backend() : num_.leading().backend();
  }

  /// val(num) - val(den); infinity for zero.
  ExtRat val() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem negated() const;
  FieldElem inverse() const;
  FieldElem pow(long k) const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Parses the element grammar (sums of rational multiples of powers of t,
  /// quotients allowed). Rejects input mentioning X.
  static FieldElem parse(const std::string& text, const Backend& b);

 private:
  SparseSum num_, den_;  // den is nonzero
};

}  // namespace pcval
