#include "pcval/sparse_sum.hpp"

namespace pcval {

SparseSum SparseSum::term(const Coeff& c, const Rational& e) {
  SparseSum s;
  if (!c.is_zero()) s.terms_.emplace(e, c);
  return s;
}

ExtRat SparseSum::val() const {
  if (terms_.empty()) return ExtRat::infinity();
  return ExtRat(terms_.begin()->first);
}

const Coeff& SparseSum::leading() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
  return terms_.begin()->second;
}

Coeff SparseSum::coeff_at(const Rational& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return Coeff();
  return it->second;
}

void SparseSum::add_term(const Rational& e, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparseSum SparseSum::operator+(const SparseSum& o) const {
  SparseSum out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

SparseSum SparseSum::operator-(const SparseSum& o) const { return *this + o.negated(); }

SparseSum SparseSum::operator*(const SparseSum& o) const {
  SparseSum out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

SparseSum SparseSum::negated() const {
  SparseSum out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.negated());
  return out;
}

SparseSum SparseSum::scaled(const Coeff& c, const Rational& e) const {
  SparseSum out;
  if (c.is_zero()) return out;
  for (const auto& [e1, c1] : terms_) out.add_term(e1 + e, c1 * c);
  return out;
}

SparseSum SparseSum::truncated_below(const Rational& bound) const {
  SparseSum out;
  for (const auto& [e, c] : terms_) {
    if (e >= bound) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

namespace {

std::string format_exponent(const Rational& e) {
  if (e == 1) return "t";
  if (e.get_den() == 1 && sgn(e) > 0) return "t^" + e.get_num().get_str();
  return "t^(" + format_rational(e) + ")";
}

}  // namespace

std::string SparseSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff abs = c;
    bool neg = false;
    if (!c.backend().is_prime_field() && sgn(c.rational()) < 0) {
      neg = true;
      abs = c.negated();
    }
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = abs == Coeff::one(abs.backend());
    if (sgn(e) == 0)
      out += abs.to_string();
    else if (unit)
      out += format_exponent(e);
    else
      out += abs.to_string() + "*" + format_exponent(e);
  }
  return out;
}

}  // namespace pcval
