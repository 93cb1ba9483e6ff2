#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "filmseries/eigen_solver.hpp"
#include "filmseries/params.hpp"
#include "filmseries/summation.hpp"

namespace filmseries {

/// A truncated series.
struct SeriesEval {
  double value = 0.0;
  std::size_t terms_used = 0;
  /// |last included term|.
  double last_term = 0.0;
  /// Estimate of |omitted tail|, when one is available.
  std::optional<double> tail_estimate;
  bool compensated = true;
  /// Set by bernoulli_series outside its radius of convergence.
  bool diverged = false;
};

/// Inputs shared by the eigenfunction-series sides of formulae 1 and 2.
struct FormulaOperands {
  double p;
  DerivedParams d;
  const EigenSet& eigenset;
};

inline constexpr double kDefaultGFloor = 1e-12;

/// G(q) = (1 − γ)cos(q√ε)cos q − (√ε − γ/√ε)sin(q√ε)sin q.
double g_of_q(double q, const DerivedParams& d);

/// 2·cos q·sin(q√ε) / [q(1 + q²/p)G(q)], the n-th summand of formula 1.
double formula1_term(double q, double p, const DerivedParams& d, double g_floor = kDefaultGFloor);

/// 2·cos(q√ε)·cos q / [(1 + q²/p)G(q)], the n-th summand of formula 2.
double formula2_term(double q, double p, const DerivedParams& d, double g_floor = kDefaultGFloor);

/// 2 / (1 + n²π²/p), the n-th summand of formula 3.
double formula3_term(std::size_t n, double p);

/// Formula 1, series side: √ε/(1 − γ) + Σ formula1_term over the first n_terms roots.
/// Throws RangeError if the eigenset is shorter than n_terms and DegenerateGError
/// naming n when |G(q_n)| < g_floor.
SeriesEval formula1_lhs(const FormulaOperands& op, std::size_t n_terms,
                        Summation mode = Summation::compensated,
                        double g_floor = kDefaultGFloor);

/// Formula 1, closed side: 1 / [coth(√(εp))·tanh√p − γ/√ε].
double formula1_rhs(double p, const DerivedParams& d);

/// Formula 2, series side: 1/(1 − γ) + Σ formula2_term.
SeriesEval formula2_lhs(const FormulaOperands& op, std::size_t n_terms,
                        Summation mode = Summation::compensated,
                        double g_floor = kDefaultGFloor);

/// Formula 2, closed side: √p·coth√p / [1 − (γ/√ε)·coth√p·tanh(√(εp))].
double formula2_rhs(double p, const DerivedParams& d);

/// Formula 3, series side: 1 + Σ_{n=1}^{N} 2/(1 + n²π²/p).
///
/// tail_estimate is always the integral ∫_N^∞ 2p/(p + x²π²) dx
/// = (2√p/π)(π/2 − arctan(Nπ/√p)); it is added to value when tail_correction is set.
SeriesEval formula3_lhs(double p, std::size_t n_terms, bool tail_correction,
                        Summation mode = Summation::compensated);

/// Formula 3, closed side: √p·coth√p.
double formula3_rhs(double p);

inline constexpr std::size_t kMaxBernoulliCount = 60;

/// B_0, B_2, ..., B_{2·count} from Σ_{k=0}^{m} C(m+1,k)·B_k = 0.
/// Throws RangeError for count > kMaxBernoulliCount.
std::vector<double> bernoulli_numbers(std::size_t count);

/// Σ_{n=0}^{N} 2^{2n}B_{2n}p^n/(2n)!, the power series of √p·coth√p.
///
/// Only converges for |p| < π². Outside that radius, or whenever the term
/// magnitudes stop decreasing, `diverged` is set.
SeriesEval bernoulli_series(double p, std::size_t n_terms);

/// Sine series (2/b)·Σ ϑ_n/(σ_m² + ϑ_n²)·sin(ϑ_n y) with σ_m = mπ/a, ϑ_n = nπ/b.
/// Throws DomainError unless 0 < y < b.
SeriesEval ozisik_lhs(unsigned m, double a_len, double b_len, double y, std::size_t n_terms);

/// sinh[σ_m(b − y)] / sinh(σ_m b), overflow-safe.
double ozisik_rhs(unsigned m, double a_len, double b_len, double y);

}  // namespace filmseries
