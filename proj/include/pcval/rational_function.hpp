#pragma once

#include "pcval/poly.hpp"
#include "pcval/term.hpp"

namespace pcval {

/// Quotient of polynomials in X over the ground field.
/// Invariant: num and den are coprime and den is monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Poly::constant(FieldElem::one(Backend::q()))) { refresh_cleared(); }
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num);
  static RationalFunction x(const Backend& b) { return RationalFunction(Poly::x(b)); }
  static RationalFunction constant(const FieldElem& c) { return RationalFunction(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const ClearedPoly& num_cleared() const { return num_cleared_; }
  const ClearedPoly& den_cleared() const { return den_cleared_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction negated() const;
  RationalFunction inverse() const;
  RationalFunction pow(long k) const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Exact value at s; throws pole_error at a pole of the reduced fraction.
  FieldElem eval(const FieldElem& s) const;

  /// phi = (X - s)^ord * u with u finite and nonzero at s.
  struct PointVal {
    long ord;
    FieldElem unit;  // u(s)
  };
  PointVal point_value(const FieldElem& s) const;

  std::string to_string() const;
  /// Expression grammar over +, -, *, /, ^ with atoms rational | t | X.
  /// Rational exponents only on t. Throws parse_error.
  static RationalFunction parse(const std::string& text, const Backend& b);

 private:
  void refresh_cleared();
  Poly num_, den_;
  ClearedPoly num_cleared_, den_cleared_;
};

/// val(f(point)) for a cleared polynomial, using the point's power cache.
ExtRat poly_val_at(const ClearedPoly& f, const PowCache& p);

/// Value-with-pole-flag of a rational function at a cached point.
struct RfVal {
  bool pole = false;
  ExtRat v;  // meaningful when !pole; inf when the value is 0
};
RfVal rf_val_at(const RationalFunction& f, const PowCache& p);

}  // namespace pcval
