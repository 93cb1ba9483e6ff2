#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "filmseries/eigen_solver.hpp"
#include "filmseries/params.hpp"

namespace filmseries {

/// One (p, LHS, RHS) comparison of a series identity.
struct ComparisonRow {
  double p = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  /// 100·|lhs − rhs|/|rhs|, 0 when rhs = 0.
  double rel_diff_pct = 0.0;
};

ComparisonRow make_row(double p, double lhs, double rhs);

struct VerificationReport {
  int formula = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  RootsProvenance provenance = RootsProvenance::solver;
  std::size_t n_terms = 0;
  /// Ordered by increasing p.
  std::vector<ComparisonRow> rows;

  double max_rel_diff_pct() const;
};

/// p = 10⁻⁴, 10⁻³, ..., 10⁶.
std::vector<double> default_p_grid();

/// Eigenvalues and footnote residuals (find_roots).
EigenSet table1(const DerivedParams& d, std::size_t n);

/// Formula 1 (surface-temperature identity) over p_values.
VerificationReport table2(const DerivedParams& d, std::span<const double> p_values,
                          const EigenSet& roots, std::size_t n_terms);

/// Formula 2 (surface-flux identity) over p_values.
VerificationReport table3(const DerivedParams& d, std::span<const double> p_values,
                          const EigenSet& roots, std::size_t n_terms);

/// Formula 3 (√p·coth√p series), partial sums with or without the integral tail.
VerificationReport formula3_report(std::span<const double> p_values, std::size_t n_terms,
                                   bool tail_correction);

struct TruncationPoint {
  std::size_t n_terms = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
};

/// Formula-2 discrepancy at fixed p for each truncation in n_values.
/// Throws RangeError if any N exceeds the available roots.
std::vector<TruncationPoint> truncation_experiment(const DerivedParams& d, double p,
                                                   const EigenSet& roots,
                                                   std::span<const std::size_t> n_values);

/// CSV, header p,lhs,rhs,abs_diff,rel_diff_pct, 17 significant digits.
void write_report_csv(std::ostream& out, const VerificationReport& report);

/// Markdown table with 5 decimals, laid out like the printed comparison tables.
void write_report_markdown(std::ostream& out, const VerificationReport& report);

/// Markdown table of roots (4 decimals) and residual percentages (4 decimals).
void write_table1_markdown(std::ostream& out, const EigenSet& set);

/// CSV, header N,lhs,rhs,abs_diff.
void write_truncation_csv(std::ostream& out, std::span<const TruncationPoint> points);

}  // namespace filmseries
