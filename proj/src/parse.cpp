#include "pcval/rational_function.hpp"

namespace pcval {

namespace {

struct Token {
  enum Kind { number, sym_t, sym_x, plus, minus, star, slash, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::number, s.substr(start, i - start), start});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case 't': k = Token::sym_t; break;
      case 'X': k = Token::sym_x; break;
      case '+': k = Token::plus; break;
      case '-': k = Token::minus; break;
      case '*': k = Token::star; break;
      case '/': k = Token::slash; break;
      case '^': k = Token::caret; break;
      case '(': k = Token::lparen; break;
      case ')': k = Token::rparen; break;
      default: throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

struct RfOps {
  using Value = RationalFunction;
  Backend b;
  Value x(std::size_t) const { return RationalFunction::x(b); }
  Value t_power(const Rational& e) const {
    return RationalFunction::constant(FieldElem::t_power(e, b));
  }
  Value from_int(const Int& n) const {
    return RationalFunction::constant(FieldElem::from_rational(Rational(n), b));
  }
};

struct FeOps {
  using Value = FieldElem;
  Backend b;
  Value x(std::size_t pos) const {
    throw parse_error("X is not allowed in a ground-field element", pos);
  }
  Value t_power(const Rational& e) const { return FieldElem::t_power(e, b); }
  Value from_int(const Int& n) const { return FieldElem::from_rational(Rational(n), b); }
};

template <class Ops>
class Parser {
 public:
  using Value = typename Ops::Value;

  Parser(const std::string& text, Ops ops) : toks_(tokenize(text)), ops_(std::move(ops)) {}

  Value parse_all() {
    Value r = parse_expr();
    expect(Token::end, "end of input");
    return r;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw parse_error(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  Value parse_expr() {
    Value acc = parse_term();
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool neg = take().kind == Token::minus;
      Value rhs = parse_term();
      acc = neg ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (peek().kind == Token::star || peek().kind == Token::slash) {
      Token op = take();
      Value rhs = parse_factor();
      if (op.kind == Token::star) {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) throw parse_error("division by zero", op.pos);
        acc = acc / rhs;
      }
    }
    return acc;
  }

  Value parse_factor() {
    if (peek().kind == Token::minus) {
      ++i_;
      return parse_factor().negated();
    }
    return parse_power();
  }

  Value parse_power() {
    bool base_is_t = peek().kind == Token::sym_t;
    Token base_tok = peek();
    Value base = parse_atom();
    if (peek().kind != Token::caret) return base;
    ++i_;
    bool paren = peek().kind == Token::lparen;
    Rational e = parse_exponent();
    if (e.get_den() == 1) {
      if (abs(e.get_num()) > 4096) throw parse_error("integer exponent too large", base_tok.pos);
      long k = static_cast<long>(e.get_num().get_si());
      if (!paren && k < 0) throw parse_error("negative exponent must be parenthesized", base_tok.pos);
      if (base.is_zero() && k <= 0) throw parse_error("zero to a non-positive power", base_tok.pos);
      return base.pow(k);
    }
    if (!base_is_t) throw parse_error("rational exponent requires base t", base_tok.pos);
    return ops_.t_power(e);
  }

  Rational parse_exponent() {
    if (peek().kind == Token::lparen) {
      ++i_;
      Rational q = parse_signed_rational();
      expect(Token::rparen, "')'");
      return q;
    }
    if (peek().kind == Token::number) return Rational(Int(take().text.c_str()));
    throw parse_error("expected exponent", peek().pos);
  }

  Rational parse_signed_rational() {
    bool neg = false;
    if (peek().kind == Token::minus) {
      neg = true;
      ++i_;
    }
    if (peek().kind != Token::number) throw parse_error("expected rational", peek().pos);
    Int num(take().text.c_str());
    Int den(1);
    if (peek().kind == Token::slash) {
      ++i_;
      if (peek().kind != Token::number) throw parse_error("expected denominator", peek().pos);
      den = Int(take().text.c_str());
      if (den == 0) throw parse_error("zero denominator", peek().pos);
    }
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  Value parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::number:
        return ops_.from_int(Int(take().text.c_str()));
      case Token::sym_t:
        ++i_;
        return ops_.t_power(Rational(1));
      case Token::sym_x:
        ++i_;
        return ops_.x(tok.pos);
      case Token::lparen: {
        ++i_;
        Value r = parse_expr();
        expect(Token::rparen, "')'");
        return r;
      }
      default:
        throw parse_error("expected a value", tok.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Ops ops_;
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text, const Backend& b) {
  Parser<RfOps> p(text, RfOps{b});
  try {
    return p.parse_all();
  } catch (const pole_error& e) {
    throw parse_error(std::string("undefined value: ") + e.what(), 0);
  }
}

FieldElem FieldElem::parse(const std::string& text, const Backend& b) {
  Parser<FeOps> p(text, FeOps{b});
  try {
    return p.parse_all();
  } catch (const pole_error& e) {
    throw parse_error(std::string("undefined value: ") + e.what(), 0);
  }
}

}  // namespace pcval
