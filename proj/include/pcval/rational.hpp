#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pcval {

using Int = mpz_class;
using Rational = mpq_class;

inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

/// Error carrying a position into the offending input text.
struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact parse of "p", "-p" or "p/q". Rejects q = 0 and trailing garbage.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" rendering; always re-parses to the same value.
std::string format_rational(const Rational& q);

Rational rational_from_long(long n);

/// Largest integer <= q.
Int floor_rational(const Rational& q);

/// A rational extended with +infinity; the codomain of val().
class ExtRat {
 public:
  ExtRat() : finite_(0) {}
  ExtRat(Rational q) : finite_(std::move(q)) {}
  ExtRat(long n) : finite_(rational_from_long(n)) {}
  static ExtRat infinity() {
    ExtRat e;
    e.finite_.reset();
    return e;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  /// Requires a finite value.
  const Rational& q() const {
    if (!finite_) throw std::logic_error("ExtRat: infinite value has no rational part");
    return *finite_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return *a.finite_ == *b.finite_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.finite_ < *b.finite_;
  }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

  /// inf + x = inf; finite values add exactly.
  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtRat(*a.finite_ + *b.finite_);
  }

  std::string to_string() const { return is_infinite() ? "inf" : format_rational(*finite_); }

 private:
  std::optional<Rational> finite_;
};

}  // namespace pcval
