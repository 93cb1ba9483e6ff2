#pragma once

namespace filmseries {

/// Dimensionless constants of the coupled heat/mass film-penetration model.
///
/// Boundary coupling at the gas-liquid surface is a = w1·θ + w2 and
/// ∂θ/∂x = beta_s·∂a/∂x; epsilon multiplies ∂θ/∂τ.
struct ModelParams {
  double w1 = 0.0;
  double w2 = 1.0;
  double beta_s = 0.0;
  double epsilon = 1.0;

  /// Parameters for the formula-level commands, which only see (γ, ε).
  /// Synthesizes w1 = γ, beta_s = 1, w2 = 1.
  static ModelParams from_gamma(double gamma, double epsilon);
};

/// The two constants every series identity actually depends on, plus the
/// ratio γ/√ε that appears in the eigenvalue equation.
struct DerivedParams {
  double gamma = 0.0;
  double sqrt_eps = 1.0;
  double ratio = 0.0;

  double epsilon() const { return sqrt_eps * sqrt_eps; }
  double one_minus_gamma() const { return 1.0 - gamma; }
};

inline constexpr double kDefaultGammaFloor = 1e-12;

/// γ = w1·β_s, √ε and γ/√ε.
///
/// Throws DomainError when ε ≤ 0 or any input is non-finite and
/// DegeneracyError when |1 − γ| < gamma_floor (every steady-state prefactor
/// is 1/(1 − γ)).
DerivedParams derive(const ModelParams& params, double gamma_floor = kDefaultGammaFloor);

/// derive(ModelParams::from_gamma(gamma, epsilon)).
DerivedParams derive_from_gamma(double gamma, double epsilon,
                                double gamma_floor = kDefaultGammaFloor);

}  // namespace filmseries
