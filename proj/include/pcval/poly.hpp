#pragma once

#include <vector>

#include "pcval/field_elem.hpp"

namespace pcval {

/// Polynomial in X over the ground field, coefficients ascending, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FieldElem> coeffs);
  static Poly x(const Backend& b) { return Poly({FieldElem(), FieldElem::one(b)}); }
  static Poly constant(const FieldElem& c) { return Poly({c}); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Zero polynomials are backend-neutral and report the rational backend.
  Backend backend() const { return c_.empty() ? Backend::q() : c_.back().backend(); }
  /// Lowest index with a nonzero coefficient; -1 for the zero polynomial.
  long ord() const;
  const FieldElem& coeff(std::size_t i) const;
  const std::vector<FieldElem>& coeffs() const { return c_; }
  const FieldElem& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly negated() const;
  Poly scaled(const FieldElem& c) const;
  Poly pow(long k) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  FieldElem eval(const FieldElem& s) const;
  /// Coefficients of f(X + a), i.e. the expansion of f around a.
  Poly taylor_shift(const FieldElem& a) const;
  /// Exact division; throws std::invalid_argument if it does not divide.
  Poly divided_exact(const Poly& d) const;
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;
  /// Multiplicity of q as a factor (0 if coprime). q nonconstant.
  long factor_multiplicity(const Poly& q) const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

/// Denominator-cleared view: coeffs[i] / den equals the original coefficient i.
struct ClearedPoly {
  std::vector<SparseSum> coeffs;
  SparseSum den;
};

ClearedPoly clear_denominators(const Poly& f);

}  // namespace pcval
