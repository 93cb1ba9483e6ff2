#include "filmseries/hyperbolic.hpp"

#include <cmath>

#include "filmseries/errors.hpp"

namespace filmseries {

double stable_coth(double x) {
  if (!(x > 0.0)) {
    throw DomainError("coth requires a positive argument");
  }
  if (x > kHyperbolicSaturation) {
    return 1.0;
  }
  if (x < 1e-8) {
    return 1.0 / x + x / 3.0;
  }
  return 1.0 / std::tanh(x);
}

double stable_tanh(double x) {
  if (x > kHyperbolicSaturation) {
    return 1.0;
  }
  if (x < -kHyperbolicSaturation) {
    return -1.0;
  }
  return std::tanh(x);
}

double sinh_ratio(double a, double b) {
  if (!(b > 0.0) || a < 0.0 || a > b) {
    throw DomainError("sinh_ratio requires 0 <= a <= b and b > 0");
  }
  // sinh(a)/sinh(b) = e^{a-b} (1 - e^{-2a}) / (1 - e^{-2b})
  return std::exp(a - b) * (std::expm1(-2.0 * a) / std::expm1(-2.0 * b));
}

double sqrt_coth(double p) {
  if (!(p > 0.0)) {
    throw DomainError("sqrt_coth requires p > 0");
  }
  const double s = std::sqrt(p);
  if (s < 1e-8) {
    return 1.0 + p / 3.0;
  }
  return s * stable_coth(s);
}

}  // namespace filmseries
