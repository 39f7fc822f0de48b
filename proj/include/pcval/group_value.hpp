#pragma once

#include <string>

#include "pcval/quad_irr.hpp"

namespace pcval {

/// Element q + m*delta of the value group extended by the breadth delta.
/// A rational delta folds into the rational part, so m is nonzero only when
/// delta is a quadratic irrational. Infinite delta admits only m = 0.
class GroupValue {
 public:
  GroupValue() = default;
  explicit GroupValue(Rational q) : q_(std::move(q)) {}
  GroupValue(Rational q, long m, Breadth delta);

  const Rational& rational_part() const { return q_; }
  long delta_coeff() const { return m_; }
  const Breadth& delta() const { return delta_; }

  int sign() const;
  /// Exact order; mixing two distinct irrational deltas is not supported.
  int compare(const GroupValue& o) const;
  GroupValue operator+(const GroupValue& o) const;
  GroupValue operator-(const GroupValue& o) const;
  GroupValue operator-() const;
  GroupValue scaled(long k) const;
  bool operator==(const GroupValue& o) const { return compare(o) == 0; }
  bool operator!=(const GroupValue& o) const { return compare(o) != 0; }
  bool operator<(const GroupValue& o) const { return compare(o) < 0; }
  bool operator<=(const GroupValue& o) const { return compare(o) <= 0; }
  bool operator>(const GroupValue& o) const { return compare(o) > 0; }
  bool operator>=(const GroupValue& o) const { return compare(o) >= 0; }

  std::string to_string() const;

 private:
  Rational q_{0};
  long m_ = 0;
  Breadth delta_{Rational(0)};
};

/// Lexicographic pair; value of a product adds componentwise.
class RankTwoValue {
 public:
  RankTwoValue() = default;
  RankTwoValue(GroupValue first, long second) : first_(std::move(first)), second_(second) {}
  const GroupValue& first() const { return first_; }
  long second() const { return second_; }
  int sign() const;
  int compare(const RankTwoValue& o) const;
  RankTwoValue operator+(const RankTwoValue& o) const {
    return {first_ + o.first_, second_ + o.second_};
  }
  RankTwoValue operator-() const { return {-first_, -second_}; }
  bool operator==(const RankTwoValue& o) const { return compare(o) == 0; }
  bool operator<(const RankTwoValue& o) const { return compare(o) < 0; }
  bool operator>(const RankTwoValue& o) const { return compare(o) > 0; }
  bool operator>=(const RankTwoValue& o) const { return compare(o) >= 0; }
  std::string to_string() const;

 private:
  GroupValue first_;
  long second_ = 0;
};

}  // namespace pcval
