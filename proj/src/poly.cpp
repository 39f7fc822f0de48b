#include "pcval/poly.hpp"

#include <stdexcept>

namespace pcval {

Poly::Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

long Poly::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

const FieldElem& Poly::coeff(std::size_t i) const {
  static const FieldElem zero;
  if (i >= c_.size()) return zero;
  return c_[i];
}

const FieldElem& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FieldElem> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<FieldElem> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
  return Poly(std::move(out));
}

Poly Poly::negated() const {
  std::vector<FieldElem> out = c_;
  for (auto& c : out) c = c.negated();
  return Poly(std::move(out));
}

Poly Poly::scaled(const FieldElem& s) const {
  if (s.is_zero()) return Poly();
  std::vector<FieldElem> out = c_;
  for (auto& c : out) c = c * s;
  return Poly(std::move(out));
}

Poly Poly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("negative polynomial power");
  Backend b = is_zero() ? Backend::q() : c_.back().num().leading().backend();
  Poly out({FieldElem::one(b)});
  Poly base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

FieldElem Poly::eval(const FieldElem& s) const {
  FieldElem acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Poly Poly::taylor_shift(const FieldElem& a) const {
  if (c_.size() <= 1 || a.is_zero()) return *this;
  std::vector<FieldElem> b = c_;
  long d = static_cast<long>(b.size()) - 1;
  for (long k = 0; k < d; ++k)
    for (long i = d - 1; i >= k; --i)
      b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] + a * b[static_cast<std::size_t>(i + 1)];
  return Poly(std::move(b));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<FieldElem> rem = a.c_;
  long db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<FieldElem> quot(a.degree() - db + 1);
  FieldElem lead_inv = b.leading().inverse();
  for (long i = a.degree(); i >= db; --i) {
    std::size_t ui = static_cast<std::size_t>(i);
    if (rem.size() <= ui || rem[ui].is_zero()) continue;
    FieldElem q = rem[ui] * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] =
          rem[static_cast<std::size_t>(i - db + j)] - q * b.c_[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divided_exact(const Poly& d) const {
  auto [q, r] = divmod(*this, d);
  if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r).monic();
  }
  return a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

long Poly::factor_multiplicity(const Poly& q) const {
  if (q.degree() < 1) throw std::invalid_argument("factor must be nonconstant");
  long mult = 0;
  Poly rest = *this;
  while (!rest.is_zero()) {
    auto [quot, rem] = divmod(rest, q);
    if (!rem.is_zero()) break;
    ++mult;
    rest = quot;
  }
  return mult;
}

namespace {

/// True when the coefficient prints as a bare product like "2*t^2" that can
/// prefix "*X^k" without parentheses.
bool simple_coeff(const FieldElem& c) {
  bool den_is_one = c.den().size() == 1 && c.den().val() == ExtRat(Rational(0)) &&
                    c.den().leading() == Coeff::one(c.den().leading().backend());
  return den_is_one && c.num().size() == 1;
}

}  // namespace

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  auto top_level_pm = [](const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ')
        return true;
    }
    return false;
  };
  auto t_pow = [](const Rational& e) {
    if (e == Rational(1)) return std::string("t");
    std::string es = format_rational(e);
    if (es.find('/') == std::string::npos && sgn(e) > 0) return "t^" + es;
    return "t^(" + es + ")";
  };
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const FieldElem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string xpart = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string piece;
    bool neg = false;
    std::string cs = c.to_string();
    if (i == 0) {
      // Trailing constant: its own additive chain splices into the output.
      neg = cs[0] == '-';
      piece = neg ? cs.substr(1) : cs;
    } else if (simple_coeff(c)) {
      Rational e = c.num().val().q();
      FieldElem k = c;
      if (sgn(e) != 0) k = c * FieldElem::t_power(-e, c.backend());
      std::string ks = k.to_string();
      if (ks[0] == '-') {
        neg = true;
        ks = ks.substr(1);
      }
      if (sgn(e) < 0) {
        piece = (ks == "1" ? xpart : ks + "*" + xpart) + "/" + t_pow(-e);
      } else {
        std::string cpart;
        if (sgn(e) == 0)
          cpart = ks == "1" ? "" : ks;
        else
          cpart = (ks == "1" ? "" : ks + "*") + t_pow(e);
        piece = cpart.empty() ? xpart : cpart + "*" + xpart;
      }
    } else {
      neg = cs[0] == '-';
      std::string body = neg ? (FieldElem() - c).to_string() : cs;
      if (top_level_pm(body)) body = "(" + body + ")";
      piece = body + "*" + xpart;
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += piece;
  }
  return out;
}

ClearedPoly clear_denominators(const Poly& f) {
  ClearedPoly out;
  Backend b = Backend::q();
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) b = c.num().leading().backend();
  out.den = SparseSum::one(b);
  // den = product of all coefficient denominators; coeffs[i] = num_i * prod_{j != i} den_j.
  std::vector<SparseSum> dens;
  bool any_nontrivial = false;
  SparseSum one = SparseSum::one(b);
  for (const auto& c : f.coeffs()) {
    bool trivial = c.is_zero() || c.den() == one;
    dens.push_back(trivial ? one : c.den());
    any_nontrivial = any_nontrivial || !trivial;
  }
  std::size_t n = f.coeffs().size();
  if (!any_nontrivial) {
    for (const auto& c : f.coeffs()) out.coeffs.push_back(c.num());
    return out;
  }
  std::vector<SparseSum> prefix(n + 1, one), suffix(n + 1, one);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * dens[i];
  for (std::size_t i = n; i > 0; --i) suffix[i - 1] = suffix[i] * dens[i - 1];
  out.den = prefix[n];
  for (std::size_t i = 0; i < n; ++i) out.coeffs.push_back(f.coeffs()[i].num() * (prefix[i] * suffix[i + 1]));
  return out;
}

}  // namespace pcval
