#pragma once

#include <map>
#include <string>

#include "pcval/coeff.hpp"

namespace pcval {

/// Finite sum of terms c * t^e with rational exponents e, ordered by exponent.
/// Never stores a zero coefficient; the empty sum is 0.
class SparseSum {
 public:
  SparseSum() = default;
  static SparseSum term(const Coeff& c, const Rational& e);
  static SparseSum constant(const Coeff& c) { return term(c, Rational(0)); }
  static SparseSum one(const Backend& b) { return constant(Coeff::one(b)); }

  bool is_zero() const { return terms_.empty(); }
  /// Least exponent; infinity for the zero sum.
  ExtRat val() const;
  /// Coefficient at the least exponent; throws on zero sum.
  const Coeff& leading() const;
  const std::map<Rational, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff_at(const Rational& e) const;

  SparseSum operator+(const SparseSum& o) const;
  SparseSum operator-(const SparseSum& o) const;
  SparseSum operator*(const SparseSum& o) const;
  SparseSum negated() const;
  /// Multiply every term by c * t^e.
  SparseSum scaled(const Coeff& c, const Rational& e) const;
  bool operator==(const SparseSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparseSum& o) const { return !(*this == o); }

  /// Keep terms with exponent strictly below the bound.
  SparseSum truncated_below(const Rational& bound) const;

  std::string to_string() const;

 private:
  void add_term(const Rational& e, const Coeff& c);
  std::map<Rational, Coeff> terms_;
};

}  // namespace pcval
