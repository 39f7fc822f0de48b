#include "pcval/rational.hpp"

namespace pcval {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational", 0);
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-') {
    neg = true;
    ++i;
  }
  auto read_digits = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw parse_error(std::string("expected ") + what, start);
    return text.substr(start, i - start);
  };
  std::string num = read_digits("integer");
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_digits("denominator");
  }
  if (i != text.size()) throw parse_error("trailing characters after rational", i);
  Int n(num), d(den);
  if (d == 0) throw parse_error("zero denominator", 0);
  Rational q(n, d);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

Rational rational_from_long(long n) { return Rational(n); }

Int floor_rational(const Rational& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

}  // namespace pcval
