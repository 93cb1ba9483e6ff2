#include "filmseries/params.hpp"

#include <cmath>
#include <string>

#include "filmseries/errors.hpp"

namespace filmseries {

ModelParams ModelParams::from_gamma(double gamma, double epsilon) {
  return ModelParams{.w1 = gamma, .w2 = 1.0, .beta_s = 1.0, .epsilon = epsilon};
}

DerivedParams derive(const ModelParams& params, double gamma_floor) {
  if (!std::isfinite(params.w1) || !std::isfinite(params.w2) || !std::isfinite(params.beta_s) ||
      !std::isfinite(params.epsilon)) {
    throw DomainError("model parameters must be finite");
  }
  if (params.epsilon <= 0.0) {
    throw DomainError("epsilon must be positive, got " + std::to_string(params.epsilon));
  }
  const double gamma = params.w1 * params.beta_s;
  if (std::abs(1.0 - gamma) < gamma_floor) {
    throw DegeneracyError("gamma = w1*beta_s is too close to 1; 1/(1-gamma) is unbounded");
  }
  const double sqrt_eps = std::sqrt(params.epsilon);
  return DerivedParams{.gamma = gamma, .sqrt_eps = sqrt_eps, .ratio = gamma / sqrt_eps};
}

DerivedParams derive_from_gamma(double gamma, double epsilon, double gamma_floor) {
  return derive(ModelParams::from_gamma(gamma, epsilon), gamma_floor);
}

}  // namespace filmseries
