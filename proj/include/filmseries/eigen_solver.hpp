#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "filmseries/params.hpp"

namespace filmseries {

enum class RootsProvenance { solver, fixture, file };

std::string to_string(RootsProvenance provenance);

/// Positive roots q_1 < q_2 < ... of tan q = (γ/√ε)·tan(q√ε), with diagnostics.
struct EigenSet {
  DerivedParams params;
  RootsProvenance provenance = RootsProvenance::solver;
  std::vector<double> roots;
  /// Table-1 footnote metric, in percent. 0 where the metric is undefined.
  std::vector<double> residual_pct;
  /// false where tan(q_n) vanishes to rounding and residual_pct holds the 0 convention.
  std::vector<bool> residual_defined;
  /// Pole-free characteristic F(q_n).
  std::vector<double> pole_free_residual;

  std::size_t size() const { return roots.size(); }
};

/// F(q) = √ε·sin q·cos(q√ε) − γ·cos q·sin(q√ε).
///
/// This is the eigenvalue equation multiplied through by cos q·cos(q√ε), so it
/// has no tangent poles. Its zeros with cos q ≠ 0 are exactly the eigenvalues.
double characteristic(double q, const DerivedParams& d);

/// |[tan q − (γ/√ε)·tan(q√ε)] / tan q| × 100.
///
/// Throws UndefinedMetricError when |tan q| < 1e-300 or q lies within 1e-9 of
/// a pole of either tangent.
double residual_percent(double q, const DerivedParams& d);

inline constexpr double kDefaultRootTolerance = 1e-12;

/// Refines a sign-change bracket [lo, hi] of F: bisection (up to 60 halvings)
/// followed by one secant step that is only accepted inside the bracket and
/// when it lowers |F|.
double refine_root(double lo, double hi, const DerivedParams& d);

/// Grid step used by find_roots: min(π, π/√ε)/32.
double scan_step(const DerivedParams& d);

/// First n_roots positive zeros of F in increasing order.
///
/// Scans a uniform grid from q = h, refines every sign change and discards
/// the spurious zeros sitting on a tangent pole. Throws
/// SearchExhaustedError when the scan window closes first.
EigenSet find_roots(const DerivedParams& d, std::size_t n_roots,
                    double tol = kDefaultRootTolerance);

/// Wraps externally supplied roots (fixture, file) and computes their diagnostics.
/// Throws DomainError unless the roots are positive and strictly increasing.
EigenSet make_eigenset(const DerivedParams& d, std::vector<double> roots,
                       RootsProvenance provenance);

/// The 25 roots printed for γ = −0.03421, ε = 2.64489e−3 (4 decimals).
const std::array<double, 25>& table1_fixture_roots();

/// make_eigenset over table1_fixture_roots().
EigenSet fixture_eigenset(const DerivedParams& d);

/// CSV with header n,q_n,residual_pct,F_residual.
void write_eigenset_csv(std::ostream& out, const EigenSet& set);

/// Reads the q_n column of an EigenSet CSV; other columns are recomputed for d.
EigenSet read_eigenset_csv(std::istream& in, const DerivedParams& d,
                           RootsProvenance provenance = RootsProvenance::file);

}  // namespace filmseries
