#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>

namespace gns {

/// log(exp(a) + exp(b)) without overflow; -inf inputs contribute zero mass.
inline double log_add_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

/// log sum_k exp(v_k), stable for magnitudes near +-700 and below.
inline double log_sum_exp(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("log_sum_exp: empty input");
  }
  double m = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (v > m) m = v;
  }
  if (m == -std::numeric_limits<double>::infinity()) {
    return m;  // every term is zero
  }
  double s = 0.0;
  for (double v : values) {
    s += std::exp(v - m);
  }
  return m + std::log(s);
}

/// Streaming accumulator with the same semantics as log_sum_exp, for use
/// where the terms are produced one at a time and never stored.
class LogSumExpAccumulator {
 public:
  void add(double v) {
    if (v == -std::numeric_limits<double>::infinity()) return;
    if (v <= max_) {
      sum_ += std::exp(v - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - v) + 1.0;
      max_ = v;
    }
  }

  /// Merge another accumulator (their term multisets concatenate).
  void merge(const LogSumExpAccumulator& o) {
    if (o.max_ == -std::numeric_limits<double>::infinity()) return;
    if (o.max_ <= max_) {
      sum_ += o.sum_ * std::exp(o.max_ - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - o.max_) + o.sum_;
      max_ = o.max_;
    }
  }

  double value() const {
    if (max_ == -std::numeric_limits<double>::infinity()) return max_;
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

}  // namespace gns
