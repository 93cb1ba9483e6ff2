#pragma once

namespace filmseries {

/// Above this argument coth and tanh are 1 to better than 1e-17 relative.
inline constexpr double kHyperbolicSaturation = 20.0;

/// coth(x) for x > 0 without overflow. Throws DomainError for x ≤ 0.
double stable_coth(double x);

/// tanh(x), saturating to ±1 beyond kHyperbolicSaturation.
double stable_tanh(double x);

/// sinh(a)/sinh(b) for 0 ≤ a ≤ b, b > 0, in exp-difference form so it neither
/// overflows for large b nor cancels for small a.
double sinh_ratio(double a, double b);

/// √p·coth√p, which tends to 1 as p → 0⁺.
double sqrt_coth(double p);

}  // namespace filmseries
