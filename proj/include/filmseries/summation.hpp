#pragma once

#include <cmath>

namespace filmseries {

enum class Summation { compensated, naive };

/// Running sum with Neumaier's error-free-transform compensation.
///
/// Unlike plain Kahan the correction survives an addend larger than the
/// running sum, which happens for the alternating eigenfunction series.
class CompensatedSum {
 public:
  explicit CompensatedSum(Summation mode = Summation::compensated) : mode_(mode) {}

  void add(double term) {
    if (mode_ == Summation::naive) {
      sum_ += term;
      return;
    }
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      correction_ += (sum_ - t) + term;
    } else {
      correction_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  double value() const { return sum_ + correction_; }
  bool compensated() const { return mode_ == Summation::compensated; }

 private:
  Summation mode_;
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace filmseries
