#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pcval/rational.hpp"

namespace pcval {

/// Sign of q + b*sqrt(d), decided exactly by squaring (d >= 0 integer).
int sign_with_radical(const Rational& q, const Rational& b, const Int& d);

/// Quadratic surd a + b*sqrt(d), irrational by invariant (b != 0, d not a square).
/// The canonical form extracts square factors of d into b.
class QuadIrr {
 public:
  /// Throws std::invalid_argument if the value would be rational.
  QuadIrr(Rational a, Rational b, Int d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Int& d() const { return d_; }

  /// Sign of (*this) - q.
  int compare(const Rational& q) const;
  /// Sign of (*this) - other.
  int compare(const QuadIrr& other) const;
  bool operator==(const QuadIrr& other) const { return compare(other) == 0; }

  Int floor() const;

  /// Continued-fraction convergents that approximate from below, strictly
  /// increasing, in order. Returns `count` of them.
  std::vector<Rational> lower_approximants(std::size_t count) const;
  /// Convergents approximating from above, strictly decreasing.
  std::vector<Rational> upper_approximants(std::size_t count) const;

  std::string to_string() const;

 private:
  Rational a_, b_;
  Int d_;
};

/// Limit of a strictly increasing gauge: a rational, a quadratic surd, or +inf.
class Breadth {
 public:
  Breadth(Rational q) : v_(std::move(q)) {}
  Breadth(QuadIrr s) : v_(std::move(s)) {}
  static Breadth infinity() { return Breadth(Inf{}); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_quad_irr() const { return std::holds_alternative<QuadIrr>(v_); }
  bool is_infinite() const { return std::holds_alternative<Inf>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadIrr& quad_irr() const { return std::get<QuadIrr>(v_); }

  /// Sign of (*this) - x, exact in every case.
  int compare(const ExtRat& x) const;
  int compare(const Breadth& other) const;
  bool operator==(const Breadth& other) const { return compare(other) == 0; }
  bool operator!=(const Breadth& other) const { return !(*this == other); }

  std::string to_string() const;
  /// Accepts "inf", a rational literal, or "[a +] [b*]sqrt(d)" with rational a, b.
  static Breadth parse(const std::string& text);

 private:
  struct Inf {};
  explicit Breadth(Inf i) : v_(i) {}
  std::variant<Rational, QuadIrr, Inf> v_;
};

}  // namespace pcval
