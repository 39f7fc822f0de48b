#include "pcval/coeff.hpp"

#include <stdexcept>

namespace pcval {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid over signed 128-bit intermediates; p < 2^31 by Backend::fp.
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p (p not prime?)");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t p) {
  Int z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

}  // namespace

Backend Backend::fp(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t(1) << 31)) throw std::invalid_argument("prime out of range");
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
  return Backend{BackendKind::prime_field, p};
}

std::string Backend::to_string() const {
  return is_prime_field() ? "fp:" + std::to_string(p) : "q";
}

Coeff Coeff::from_rational(const Rational& q, const Backend& b) {
  if (!b.is_prime_field()) return Coeff(q);
  Int p(static_cast<unsigned long>(b.p));
  Int num = q.get_num() % p;
  if (sgn(num) < 0) num += p;
  Int den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by p");
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  std::uint64_t v = (n % b.p) * mod_inverse(d % b.p, b.p) % b.p;
  return Coeff(Fp{v, b.p});
}

Backend Coeff::backend() const {
  if (std::holds_alternative<Rational>(v_)) return Backend::q();
  return Backend{BackendKind::prime_field, std::get<Fp>(v_).p};
}

bool Coeff::is_zero() const {
  if (auto* q = std::get_if<Rational>(&v_)) return sgn(*q) == 0;
  return std::get<Fp>(v_).v == 0;
}

namespace {
void require_same(const Coeff& a, const Coeff& b) {
  if (!(a.backend() == b.backend())) throw std::invalid_argument("mixed coefficient backends");
}
}  // namespace

Coeff Coeff::operator+(const Coeff& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<Rational>(&v_)) return Coeff(*q + std::get<Rational>(o.v_));
  const Fp& a = std::get<Fp>(v_);
  const Fp& b = std::get<Fp>(o.v_);
  return Coeff(Fp{(a.v + b.v) % a.p, a.p});
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + o.negated(); }

Coeff Coeff::operator*(const Coeff& o) const {
  require_same(*this, o);
  if (auto* q = std::get_if<Rational>(&v_)) return Coeff(*q * std::get<Rational>(o.v_));
  const Fp& a = std::get<Fp>(v_);
  const Fp& b = std::get<Fp>(o.v_);
  return Coeff(Fp{a.v * b.v % a.p, a.p});
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::negated() const {
  if (auto* q = std::get_if<Rational>(&v_)) return Coeff(Rational(-*q));
  const Fp& a = std::get<Fp>(v_);
  return Coeff(Fp{a.v == 0 ? 0 : a.p - a.v, a.p});
}

Coeff Coeff::inverse() const {
  if (auto* q = std::get_if<Rational>(&v_)) {
    if (sgn(*q) == 0) throw std::domain_error("inverse of zero");
    return Coeff(Rational(1 / *q));
  }
  const Fp& a = std::get<Fp>(v_);
  return Coeff(Fp{mod_inverse(a.v, a.p), a.p});
}

bool Coeff::operator==(const Coeff& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (auto* q = std::get_if<Rational>(&v_)) return *q == std::get<Rational>(o.v_);
  return std::get<Fp>(v_) == std::get<Fp>(o.v_);
}

const Rational& Coeff::rational() const {
  if (auto* q = std::get_if<Rational>(&v_)) return *q;
  throw std::logic_error("not a rational-backend coefficient");
}

std::uint64_t Coeff::residue() const {
  if (auto* f = std::get_if<Fp>(&v_)) return f->v;
  throw std::logic_error("not a prime-field coefficient");
}

std::string Coeff::to_string() const {
  if (auto* q = std::get_if<Rational>(&v_)) return format_rational(*q);
  return std::to_string(std::get<Fp>(v_).v);
}

}  // namespace pcval
