#include "filmseries/profiles.hpp"

#include <cmath>
#include <ostream>

#include "filmseries/csv.hpp"
#include "filmseries/errors.hpp"
#include "filmseries/hyperbolic.hpp"
#include "filmseries/series.hpp"
#include "filmseries/summation.hpp"

namespace filmseries {

namespace {

DerivedParams checked_params(const ModelParams& params, const EigenSet& set, std::size_t n_terms) {
  const DerivedParams d = derive(params);
  if (set.params.gamma != d.gamma || set.params.sqrt_eps != d.sqrt_eps) {
    throw DomainError("eigenset was computed for different (gamma, epsilon)");
  }
  if (n_terms > set.size()) {
    throw RangeError("requested " + std::to_string(n_terms) + " terms but only " +
                     std::to_string(set.size()) + " eigenvalues are available");
  }
  return d;
}

DerivedParams checked_request(const ProfileRequest& req) {
  if (!(req.x >= 0.0 && req.x <= 1.0)) {
    throw DomainError("profile position x must lie in [0, 1], got " + format_full(req.x));
  }
  if (!(req.tau >= 0.0) || !std::isfinite(req.tau)) {
    throw DomainError("profile time tau must be finite and >= 0, got " + format_full(req.tau));
  }
  return checked_params(req.params, req.eigenset, req.n_terms);
}

double checked_g(double q, const DerivedParams& d, std::size_t index) {
  const double g = g_of_q(q, d);
  if (std::abs(g) < kDefaultGFloor) {
    throw DegenerateGError(index, q, g);
  }
  return g;
}

void require_positive_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("Laplace parameter p must be positive and finite, got " + format_full(p));
  }
}

}  // namespace

std::string to_string(ProfileKind kind) {
  return kind == ProfileKind::concentration ? "concentration" : "temperature";
}

ProfilePoint concentration(const ProfileRequest& req) {
  const DerivedParams d = checked_request(req);
  const double w2 = req.params.w2;
  const double s = 1.0 - req.x;
  CompensatedSum series;
  for (std::size_t n = 0; n < req.n_terms; ++n) {
    const double q = req.eigenset.roots[n];
    const double g = checked_g(q, d, n + 1);
    series += std::cos(q * d.sqrt_eps) * std::sin(q * s) * std::exp(-q * q * req.tau) / (q * g);
  }
  const double value = w2 * s / (1.0 - d.gamma) + 2.0 * w2 * series.value();
  return ProfilePoint{.x = req.x,
                      .tau = req.tau,
                      .value = value,
                      .kind = ProfileKind::concentration,
                      .truncation_warning = req.tau == 0.0};
}

ProfilePoint temperature(const ProfileRequest& req) {
  const DerivedParams d = checked_request(req);
  const double w2 = req.params.w2;
  const double beta = req.params.beta_s;
  const double s = 1.0 - req.x;
  CompensatedSum series;
  for (std::size_t n = 0; n < req.n_terms; ++n) {
    const double q = req.eigenset.roots[n];
    const double g = checked_g(q, d, n + 1);
    series += std::cos(q) * std::sin(q * d.sqrt_eps * s) * std::exp(-q * q * req.tau) / (q * g);
  }
  const double value =
      w2 * beta * s / (1.0 - d.gamma) + 2.0 * w2 * beta / d.sqrt_eps * series.value();
  return ProfilePoint{.x = req.x,
                      .tau = req.tau,
                      .value = value,
                      .kind = ProfileKind::temperature,
                      .truncation_warning = req.tau == 0.0};
}

double concentration_gradient(const ProfileRequest& req) {
  const DerivedParams d = checked_request(req);
  const double w2 = req.params.w2;
  const double s = 1.0 - req.x;
  CompensatedSum series;
  for (std::size_t n = 0; n < req.n_terms; ++n) {
    const double q = req.eigenset.roots[n];
    const double g = checked_g(q, d, n + 1);
    series += std::cos(q * d.sqrt_eps) * std::cos(q * s) * std::exp(-q * q * req.tau) / g;
  }
  return -w2 / (1.0 - d.gamma) - 2.0 * w2 * series.value();
}

double temperature_gradient(const ProfileRequest& req) {
  const DerivedParams d = checked_request(req);
  const double w2 = req.params.w2;
  const double beta = req.params.beta_s;
  const double s = 1.0 - req.x;
  CompensatedSum series;
  for (std::size_t n = 0; n < req.n_terms; ++n) {
    const double q = req.eigenset.roots[n];
    const double g = checked_g(q, d, n + 1);
    series += std::cos(q) * std::cos(q * d.sqrt_eps * s) * std::exp(-q * q * req.tau) / g;
  }
  return -w2 * beta / (1.0 - d.gamma) - 2.0 * w2 * beta * series.value();
}

double transform_concentration(double x, double p, const ModelParams& params) {
  require_positive_p(p);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("transform position x must lie in [0, 1]");
  }
  const DerivedParams d = derive(params);
  const double sp = std::sqrt(p);
  // cosh(x√p) − coth√p·sinh(x√p) = sinh[(1−x)√p]/sinh√p
  const double bracket = sinh_ratio((1.0 - x) * sp, sp);
  const double denom = 1.0 - d.ratio * stable_coth(sp) * stable_tanh(std::sqrt(d.epsilon() * p));
  if (std::abs(denom) < 1e-300) {
    throw DegeneracyError("concentration transform: denominator vanishes");
  }
  return params.w2 * bracket / (p * denom);
}

double transform_temperature(double x, double p, const ModelParams& params) {
  require_positive_p(p);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("transform position x must lie in [0, 1]");
  }
  const DerivedParams d = derive(params);
  const double sep = std::sqrt(d.epsilon() * p);
  const double bracket = sinh_ratio((1.0 - x) * sep, sep);
  const double denom = stable_coth(sep) * stable_tanh(std::sqrt(p)) - d.ratio;
  if (std::abs(denom) < 1e-300) {
    throw DegeneracyError("temperature transform: denominator vanishes");
  }
  return params.w2 * params.beta_s * bracket / (p * d.sqrt_eps * denom);
}

CouplingResiduals coupling_residuals(double tau, const ModelParams& params,
                                     const EigenSet& eigenset, std::size_t n_terms) {
  if (!(tau > 0.0)) {
    throw DomainError("coupling residuals need tau > 0");
  }
  const ProfileRequest req{
      .params = params, .x = 0.0, .tau = tau, .n_terms = n_terms, .eigenset = eigenset};
  const double a = concentration(req).value;
  const double theta = temperature(req).value;
  const double da = concentration_gradient(req);
  const double dtheta = temperature_gradient(req);
  return CouplingResiduals{.bc5 = a - params.w1 * theta - params.w2,
                           .bc6 = dtheta - params.beta_s * da};
}

TransformCheck termwise_transform_check(double x, double p, const ModelParams& params,
                                        const EigenSet& eigenset, std::size_t n_terms) {
  require_positive_p(p);
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("transform position x must lie in [0, 1]");
  }
  const DerivedParams d = checked_params(params, eigenset, n_terms);
  const double w2 = params.w2;
  const double s = 1.0 - x;
  CompensatedSum series;
  for (std::size_t n = 0; n < n_terms; ++n) {
    const double q = eigenset.roots[n];
    const double g = checked_g(q, d, n + 1);
    series += std::cos(q * d.sqrt_eps) * std::sin(q * s) / (q * g * (p + q * q));
  }
  const double series_side = w2 * s / ((1.0 - d.gamma) * p) + 2.0 * w2 * series.value();
  return TransformCheck{.series_side = series_side,
                        .closed_side = transform_concentration(x, p, params)};
}

void write_profile_csv(std::ostream& out, std::span<const ProfilePoint> points) {
  out << "kind,x,tau,value\n";
  for (const auto& pt : points) {
    out << to_string(pt.kind) << ',' << format_full(pt.x) << ',' << format_full(pt.tau) << ','
        << format_full(pt.value) << '\n';
  }
}

}  // namespace filmseries
