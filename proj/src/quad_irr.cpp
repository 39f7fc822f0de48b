#include "pcval/quad_irr.hpp"

#include <stdexcept>

namespace pcval {

namespace {

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Sign of sqrt(n) - m for integer n >= 0.
int cmp_sqrt_int(const Int& n, const Int& m) {
  if (sgn(m) < 0) return +1;
  Int mm = m * m;
  if (n > mm) return +1;
  if (n < mm) return -1;
  return 0;
}

}  // namespace

int sign_with_radical(const Rational& q, const Rational& b, const Int& d) {
  if (sgn(d) < 0) throw std::invalid_argument("negative radicand");
  int sq = sgn(q);
  Rational bb = b * b * Rational(d);
  int sb = sgn(b) == 0 || sgn(d) == 0 ? 0 : sgn(b);
  if (sb == 0) return sq;
  if (sq == 0) return sb;
  if (sq == sb) return sq;
  // Opposite signs: |q| vs |b|*sqrt(d), squared comparison is exact.
  Rational diff = q * q - bb;
  int s2 = sgn(diff);
  if (s2 == 0) return 0;
  return s2 > 0 ? sq : sb;
}

QuadIrr::QuadIrr(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) <= 0) throw std::invalid_argument("radicand must be positive");
  if (sgn(b_) == 0) throw std::invalid_argument("surd coefficient must be nonzero");
  // Extract square factors of d into b so (a, b, d) is canonical for equality.
  if (is_square(d_)) throw std::invalid_argument("radicand is a perfect square: value is rational");
  for (Int f(2); f <= 4096 && f * f <= d_; ++f) {
    Int ff = f * f;
    while (d_ % ff == 0) {
      d_ /= ff;
      b_ *= Rational(f);
    }
  }
  if (sgn(b_) < 0) {
    // Keep b > 0; a - b*sqrt(d) values are not produced by gauges.
    throw std::invalid_argument("surd coefficient must be positive");
  }
}

int QuadIrr::compare(const Rational& q) const { return sign_with_radical(a_ - q, b_, d_); }

int QuadIrr::compare(const QuadIrr& other) const {
  if (d_ == other.d_) {
    Rational db = b_ - other.b_;
    return sign_with_radical(a_ - other.a_, db, d_);
  }
  // sign of A + B with A = a - a', B = b*sqrt(d) - b'*sqrt(d'), d != d'.
  Rational A = a_ - other.a_;
  int sB = sgn(b_ * b_ * Rational(d_) - other.b_ * other.b_ * Rational(other.d_));
  int sA = sgn(A);
  if (sA == 0) return sB;
  if (sB == 0) return sA;
  if (sA == sB) return sA;
  // A^2 - B^2 = A^2 - b^2 d - b'^2 d' + 2 b b' sqrt(d d').
  Rational C = A * A - b_ * b_ * Rational(d_) - other.b_ * other.b_ * Rational(other.d_);
  int s2 = sign_with_radical(C, 2 * b_ * other.b_, d_ * other.d_);
  if (s2 == 0) return 0;
  return s2 > 0 ? sA : sB;
}

Int QuadIrr::floor() const {
  // floor((P + B*sqrt(d))/Q) with everything over a common denominator.
  Int den = a_.get_den() * b_.get_den();
  Int P = a_.get_num() * b_.get_den();
  Int B = b_.get_num() * a_.get_den();
  // floor((P + sqrt(B^2 d)) / den), den > 0, radical irrational.
  Int N = B * B * d_;
  Int approx = P + isqrt(N);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), approx.get_mpz_t(), den.get_mpz_t());
  // Fix up exactly: want f <= x < f+1, i.e. sqrt(N) >= f*den - P and sqrt(N) < (f+1)*den - P.
  while (cmp_sqrt_int(N, f * den - P) < 0) --f;
  while (cmp_sqrt_int(N, (f + 1) * den - P) >= 0) ++f;
  return f;
}

namespace {

/// Continued-fraction expansion state for (P + sqrt(N)) / Q, Q | N - P^2.
struct SurdCF {
  Int P, Q, N;

  static SurdCF start(const QuadIrr& x) {
    Int den = x.a().get_den() * x.b().get_den();
    Int P = x.a().get_num() * x.b().get_den();
    Int B = x.b().get_num() * x.a().get_den();
    Int N = B * B * x.d();
    Int Q = den;
    if ((N - P * P) % Q != 0) {
      P *= Q;
      N *= Q * Q;
      Q *= Q;
    }
    return SurdCF{P, Q, N};
  }

  Int next_term() {
    // a = floor((P + sqrt(N)) / Q), exact for either sign of Q.
    Int approx = P + isqrt(N);
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), approx.get_mpz_t(), Q.get_mpz_t());
    auto ge = [&](const Int& c) {
      // (P + sqrt(N)) / Q >= c ?
      if (sgn(Q) > 0) return cmp_sqrt_int(N, c * Q - P) >= 0;
      return cmp_sqrt_int(N, c * Q - P) <= 0;
    };
    while (!ge(a)) --a;
    while (ge(a + 1)) ++a;
    P = a * Q - P;
    Q = (N - P * P) / Q;
    return a;
  }
};

}  // namespace

std::vector<Rational> QuadIrr::lower_approximants(std::size_t count) const {
  std::vector<Rational> out;
  SurdCF cf = SurdCF::start(*this);
  Int h2(0), h1(1), k2(1), k1(0);  // h_{-2}=0,h_{-1}=1,k_{-2}=1,k_{-1}=0
  std::size_t k = 0;
  while (out.size() < count && k < 4 * count + 64) {
    Int a = cf.next_term();
    Int h = a * h1 + h2, den = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = den;
    Rational c(h, den);
    c.canonicalize();
    if (compare(c) > 0 && (out.empty() || c > out.back())) out.push_back(c);
    ++k;
  }
  if (out.size() < count) throw std::logic_error("continued fraction failed to produce lower approximants");
  return out;
}

std::vector<Rational> QuadIrr::upper_approximants(std::size_t count) const {
  std::vector<Rational> out;
  SurdCF cf = SurdCF::start(*this);
  Int h2(0), h1(1), k2(1), k1(0);
  std::size_t k = 0;
  while (out.size() < count && k < 4 * count + 64) {
    Int a = cf.next_term();
    Int h = a * h1 + h2, den = a * k1 + k2;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = den;
    Rational c(h, den);
    c.canonicalize();
    if (compare(c) < 0 && (out.empty() || c < out.back())) out.push_back(c);
    ++k;
  }
  if (out.size() < count) throw std::logic_error("continued fraction failed to produce upper approximants");
  return out;
}

std::string QuadIrr::to_string() const {
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string bpart;
  if (b_ == 1)
    bpart = root;
  else
    bpart = format_rational(b_) + "*" + root;
  if (sgn(a_) == 0) return bpart;
  return format_rational(a_) + " + " + bpart;
}

int Breadth::compare(const ExtRat& x) const {
  if (is_infinite()) return x.is_infinite() ? 0 : +1;
  if (x.is_infinite()) return -1;
  if (is_rational()) {
    const Rational& q = rational();
    if (q < x.q()) return -1;
    if (q > x.q()) return +1;
    return 0;
  }
  return quad_irr().compare(x.q());
}

int Breadth::compare(const Breadth& other) const {
  if (is_infinite() || other.is_infinite()) {
    if (is_infinite() && other.is_infinite()) return 0;
    return is_infinite() ? +1 : -1;
  }
  if (is_rational()) return -other.compare(ExtRat(rational()));
  if (other.is_rational()) return quad_irr().compare(other.rational());
  return quad_irr().compare(other.quad_irr());
}

std::string Breadth::to_string() const {
  if (is_infinite()) return "inf";
  if (is_rational()) return format_rational(rational());
  return quad_irr().to_string();
}

Breadth Breadth::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "inf" || s == "infinity") return Breadth::infinity();
  auto root = s.find("sqrt(");
  if (root == std::string::npos) return Breadth(parse_rational(s));
  if (s.back() != ')') throw parse_error("expected ')' closing sqrt", s.size());
  std::string dpart = s.substr(root + 5, s.size() - root - 6);
  Int d(dpart.c_str());
  Rational a(0), b(1);
  std::string head = s.substr(0, root);  // "", "b*", "a+b*", "a+"
  if (!head.empty()) {
    if (head.back() == '*')
      head.pop_back();
    else if (head.back() == '+')
      head += "1";
    auto plus = head.rfind('+');
    if (plus == std::string::npos) {
      if (!head.empty()) b = parse_rational(head);
    } else {
      a = parse_rational(head.substr(0, plus));
      b = parse_rational(head.substr(plus + 1));
    }
  }
  return Breadth(QuadIrr(a, b, d));
}

}  // namespace pcval
