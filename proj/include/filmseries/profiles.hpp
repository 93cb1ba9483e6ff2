#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "filmseries/eigen_solver.hpp"
#include "filmseries/params.hpp"

namespace filmseries {

enum class ProfileKind { concentration, temperature };

std::string to_string(ProfileKind kind);

struct ProfileRequest {
  ModelParams params;
  double x = 0.0;
  double tau = 0.0;
  std::size_t n_terms = 25;
  const EigenSet& eigenset;
};

struct ProfilePoint {
  double x = 0.0;
  double tau = 0.0;
  double value = 0.0;
  ProfileKind kind = ProfileKind::concentration;
  /// τ = 0: the zero initial condition only holds for the infinite series.
  bool truncation_warning = false;
};

/// a(x, τ) = w2(1−x)/(1−γ) + 2w2·Σ cos(q√ε)·sin[q(1−x)]·e^{−q²τ} / [q·G(q)].
ProfilePoint concentration(const ProfileRequest& req);

/// θ(x, τ) = w2β_s(1−x)/(1−γ) + (2w2β_s/√ε)·Σ cos q·sin[q√ε(1−x)]·e^{−q²τ} / [q·G(q)].
ProfilePoint temperature(const ProfileRequest& req);

/// ∂a/∂x from term-wise differentiation of the concentration series.
double concentration_gradient(const ProfileRequest& req);

/// ∂θ/∂x from term-wise differentiation of the temperature series.
double temperature_gradient(const ProfileRequest& req);

/// Laplace transform of a(x, τ):
/// w2·sinh[(1−x)√p]/sinh√p / (p·[1 − (γ/√ε)·coth√p·tanh√(εp)]).
double transform_concentration(double x, double p, const ModelParams& params);

/// Laplace transform of θ(x, τ):
/// w2β_s·sinh[(1−x)√(εp)]/sinh√(εp) / (p√ε·[coth√(εp)·tanh√p − γ/√ε]).
double transform_temperature(double x, double p, const ModelParams& params);

struct CouplingResiduals {
  /// a(0,τ) − w1·θ(0,τ) − w2
  double bc5 = 0.0;
  /// ∂θ/∂x − β_s·∂a/∂x at x = 0
  double bc6 = 0.0;
};

/// Surface boundary conditions evaluated on the truncated series.
CouplingResiduals coupling_residuals(double tau, const ModelParams& params,
                                     const EigenSet& eigenset, std::size_t n_terms);

struct TransformCheck {
  double series_side = 0.0;
  double closed_side = 0.0;
};

/// Term-by-term Laplace transform of the concentration series against the
/// closed-form transform:
/// series = w2(1−x)/[(1−γ)p] + 2w2·Σ cos(q√ε)·sin[q(1−x)] / [q·G(q)·(p + q²)].
TransformCheck termwise_transform_check(double x, double p, const ModelParams& params,
                                        const EigenSet& eigenset, std::size_t n_terms);

/// CSV with header kind,x,tau,value.
void write_profile_csv(std::ostream& out, std::span<const ProfilePoint> points);

}  // namespace filmseries
