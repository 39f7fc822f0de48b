#pragma once

#include <deque>
#include <mutex>

#include "pcval/field_elem.hpp"

namespace pcval {

/// Cached powers of a point's numerator and denominator sums. Evaluation of
/// cleared polynomials at the point reuses these across a whole function pool.
/// Returned references stay valid as the cache grows; growth is synchronized.
class PowCache {
 public:
  explicit PowCache(const FieldElem& point) : num_(point.num()), den_(point.den()) {}
  PowCache(const PowCache&) = delete;
  PowCache& operator=(const PowCache&) = delete;

  const SparseSum& num_pow(std::size_t k) const { return pow(num_pows_, num_, k); }
  const SparseSum& den_pow(std::size_t k) const { return pow(den_pows_, den_, k); }
  const SparseSum& num() const { return num_; }
  const SparseSum& den() const { return den_; }

 private:
  const SparseSum& pow(std::deque<SparseSum>& cache, const SparseSum& base, std::size_t k) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache.empty())
      cache.push_back(SparseSum::one(base.is_zero() ? Backend::q() : base.leading().backend()));
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  }
  SparseSum num_, den_;
  mutable std::mutex mu_;
  mutable std::deque<SparseSum> num_pows_, den_pows_;
};

/// One materialized term of a pseudo-convergent sequence.
struct SeqTerm {
  FieldElem value;
  Rational delta;  // val(s_{n+1} - s_n)
  long index = 0;
  PowCache cache;

  SeqTerm(FieldElem v, Rational d, long i) : value(std::move(v)), delta(std::move(d)), index(i), cache(value) {}
  SeqTerm(const SeqTerm&) = delete;
  SeqTerm& operator=(const SeqTerm&) = delete;
};

}  // namespace pcval
