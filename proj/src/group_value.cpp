#include "pcval/group_value.hpp"

#include <stdexcept>

namespace pcval {

GroupValue::GroupValue(Rational q, long m, Breadth delta)
    : q_(std::move(q)), m_(m), delta_(std::move(delta)) {
  if (m_ == 0) return;
  if (delta_.is_infinite())
    throw std::invalid_argument("infinite delta with a nonzero delta coefficient");
  if (delta_.is_rational()) {
    q_ += Rational(m_) * delta_.rational();
    m_ = 0;
  }
}

int GroupValue::sign() const {
  if (m_ == 0) return sgn(q_);
  const QuadIrr& d = delta_.quad_irr();
  return sign_with_radical(q_ + Rational(m_) * d.a(), Rational(m_) * d.b(),
                           d.d());
}

int GroupValue::compare(const GroupValue& o) const {
  if (m_ != 0 && o.m_ != 0 && !(delta_.quad_irr() == o.delta_.quad_irr()))
    throw std::invalid_argument("group values over distinct deltas are not comparable");
  GroupValue diff{q_ - o.q_, m_ - o.m_, m_ != 0 ? delta_ : o.delta_};
  return diff.sign();
}

GroupValue GroupValue::operator+(const GroupValue& o) const {
  if (m_ != 0 && o.m_ != 0 && !(delta_.quad_irr() == o.delta_.quad_irr()))
    throw std::invalid_argument("group values over distinct deltas cannot be combined");
  return {q_ + o.q_, m_ + o.m_, m_ != 0 ? delta_ : o.delta_};
}

GroupValue GroupValue::operator-(const GroupValue& o) const { return *this + (-o); }

GroupValue GroupValue::operator-() const {
  GroupValue out;
  out.q_ = -q_;
  out.m_ = -m_;
  out.delta_ = delta_;
  return out;
}

GroupValue GroupValue::scaled(long k) const {
  if (k == 0) return GroupValue{};
  GroupValue out;
  out.q_ = q_ * Rational(k);
  out.m_ = m_ * k;
  out.delta_ = delta_;
  return out;
}

std::string GroupValue::to_string() const {
  if (m_ == 0) return format_rational(q_);
  std::string ds = delta_.to_string();
  if (ds.find(' ') != std::string::npos) ds = "(" + ds + ")";
  long a = m_ < 0 ? -m_ : m_;
  std::string part = a == 1 ? ds : std::to_string(a) + "*" + ds;
  if (sgn(q_) == 0) return (m_ < 0 ? "-" : "") + part;
  return format_rational(q_) + (m_ < 0 ? " - " : " + ") + part;
}

int RankTwoValue::sign() const {
  int s = first_.sign();
  if (s != 0) return s;
  return second_ < 0 ? -1 : second_ > 0 ? 1 : 0;
}

int RankTwoValue::compare(const RankTwoValue& o) const {
  int s = first_.compare(o.first_);
  if (s != 0) return s;
  return second_ < o.second_ ? -1 : second_ > o.second_ ? 1 : 0;
}

std::string RankTwoValue::to_string() const {
  return "(" + first_.to_string() + ", " + std::to_string(second_) + ")";
}

}  // namespace pcval
