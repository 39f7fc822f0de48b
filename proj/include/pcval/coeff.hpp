#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "pcval/rational.hpp"

namespace pcval {

enum class BackendKind { rational_field, prime_field };

/// Session-wide choice of coefficient field: Q, or F_p for a prime p.
struct Backend {
  BackendKind kind = BackendKind::rational_field;
  std::uint64_t p = 0;

  static Backend q() { return Backend{BackendKind::rational_field, 0}; }
  static Backend fp(std::uint64_t p);

  bool operator==(const Backend& o) const { return kind == o.kind && p == o.p; }
  bool is_prime_field() const { return kind == BackendKind::prime_field; }
  std::string to_string() const;
};

/// A coefficient from the session backend's field. Exact in both backends.
class Coeff {
 public:
  Coeff() : v_(Rational(0)) {}

  static Coeff from_rational(const Rational& q, const Backend& b);
  static Coeff from_long(long n, const Backend& b) { return from_rational(Rational(n), b); }
  static Coeff one(const Backend& b) { return from_long(1, b); }
  static Coeff zero(const Backend& b) { return from_long(0, b); }

  Backend backend() const;
  bool is_zero() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff negated() const;
  /// Multiplicative inverse; throws on zero.
  Coeff inverse() const;
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Rational value (rational backend only).
  const Rational& rational() const;
  /// Canonical representative 0..p-1 (prime-field backend only).
  std::uint64_t residue() const;

  std::string to_string() const;

 private:
  struct Fp {
    std::uint64_t v, p;
    bool operator==(const Fp& o) const { return v == o.v && p == o.p; }
  };
  explicit Coeff(Rational q) : v_(std::move(q)) {}
  explicit Coeff(Fp f) : v_(f) {}
  std::variant<Rational, Fp> v_;
};

}  // namespace pcval
