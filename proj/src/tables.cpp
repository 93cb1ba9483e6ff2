#include "filmseries/tables.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "filmseries/csv.hpp"
#include "filmseries/errors.hpp"
#include "filmseries/series.hpp"

namespace filmseries {

namespace {

std::vector<double> sorted(std::span<const double> p_values) {
  std::vector<double> ps(p_values.begin(), p_values.end());
  for (const double p : ps) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw DomainError("p values must be positive and finite, got " + format_full(p));
    }
  }
  std::sort(ps.begin(), ps.end());
  return ps;
}

// "10^k" for exact decades, else the plain number.
std::string format_p(double p) {
  const double k = std::round(std::log10(p));
  if (std::abs(p - std::pow(10.0, k)) <= 1e-12 * p) {
    return "10^" + std::to_string(static_cast<int>(k));
  }
  return format_full(p);
}

}  // namespace

ComparisonRow make_row(double p, double lhs, double rhs) {
  const double diff = std::abs(lhs - rhs);
  return ComparisonRow{.p = p,
                       .lhs = lhs,
                       .rhs = rhs,
                       .abs_diff = diff,
                       .rel_diff_pct = rhs != 0.0 ? 100.0 * diff / std::abs(rhs) : 0.0};
}

double VerificationReport::max_rel_diff_pct() const {
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, row.rel_diff_pct);
  return worst;
}

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (int k = -4; k <= 6; ++k) grid.push_back(std::pow(10.0, k));
  return grid;
}

EigenSet table1(const DerivedParams& d, std::size_t n) { return find_roots(d, n); }

VerificationReport table2(const DerivedParams& d, std::span<const double> p_values,
                          const EigenSet& roots, std::size_t n_terms) {
  VerificationReport report{.formula = 1,
                            .gamma = d.gamma,
                            .epsilon = d.epsilon(),
                            .provenance = roots.provenance,
                            .n_terms = n_terms,
                            .rows = {}};
  for (const double p : sorted(p_values)) {
    const FormulaOperands op{.p = p, .d = d, .eigenset = roots};
    report.rows.push_back(make_row(p, formula1_lhs(op, n_terms).value, formula1_rhs(p, d)));
  }
  return report;
}

VerificationReport table3(const DerivedParams& d, std::span<const double> p_values,
                          const EigenSet& roots, std::size_t n_terms) {
  VerificationReport report{.formula = 2,
                            .gamma = d.gamma,
                            .epsilon = d.epsilon(),
                            .provenance = roots.provenance,
                            .n_terms = n_terms,
                            .rows = {}};
  for (const double p : sorted(p_values)) {
    const FormulaOperands op{.p = p, .d = d, .eigenset = roots};
    report.rows.push_back(make_row(p, formula2_lhs(op, n_terms).value, formula2_rhs(p, d)));
  }
  return report;
}

VerificationReport formula3_report(std::span<const double> p_values, std::size_t n_terms,
                                   bool tail_correction) {
  VerificationReport report{.formula = 3,
                            .gamma = 0.0,
                            .epsilon = 1.0,
                            .provenance = RootsProvenance::solver,
                            .n_terms = n_terms,
                            .rows = {}};
  for (const double p : sorted(p_values)) {
    report.rows.push_back(
        make_row(p, formula3_lhs(p, n_terms, tail_correction).value, formula3_rhs(p)));
  }
  return report;
}

std::vector<TruncationPoint> truncation_experiment(const DerivedParams& d, double p,
                                                   const EigenSet& roots,
                                                   std::span<const std::size_t> n_values) {
  const double rhs = formula2_rhs(p, d);
  const FormulaOperands op{.p = p, .d = d, .eigenset = roots};
  std::vector<TruncationPoint> points;
  for (const std::size_t n : n_values) {
    if (n > roots.size()) {
      throw RangeError("truncation N = " + std::to_string(n) + " exceeds the " +
                       std::to_string(roots.size()) + " available roots");
    }
    const double lhs = formula2_lhs(op, n).value;
    points.push_back(
        TruncationPoint{.n_terms = n, .lhs = lhs, .rhs = rhs, .abs_diff = std::abs(lhs - rhs)});
  }
  return points;
}

void write_report_csv(std::ostream& out, const VerificationReport& report) {
  out << "p,lhs,rhs,abs_diff,rel_diff_pct\n";
  for (const auto& row : report.rows) {
    out << format_full(row.p) << ',' << format_full(row.lhs) << ',' << format_full(row.rhs) << ','
        << format_full(row.abs_diff) << ',' << format_full(row.rel_diff_pct) << '\n';
  }
}

void write_report_markdown(std::ostream& out, const VerificationReport& report) {
  out << "Formula " << report.formula << ": gamma = " << format_short(report.gamma)
      << ", epsilon = " << format_short(report.epsilon) << ", N = " << report.n_terms
      << ", roots: " << to_string(report.provenance) << "\n\n";
  out << "| p | LHS | RHS | rel. diff (%) |\n";
  out << "|---|---|---|---|\n";
  for (const auto& row : report.rows) {
    out << "| " << format_p(row.p) << " | " << format_fixed(row.lhs, 5) << " | "
        << format_fixed(row.rhs, 5) << " | " << format_fixed(row.rel_diff_pct, 3) << " |\n";
  }
}

void write_table1_markdown(std::ostream& out, const EigenSet& set) {
  out << "Roots: gamma = " << format_short(set.params.gamma)
      << ", epsilon = " << format_short(set.params.epsilon())
      << ", source: " << to_string(set.provenance) << "\n\n";
  out << "| n | q_n | residual (%) |\n";
  out << "|---|---|---|\n";
  bool footnote = false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << "| " << (i + 1) << " | " << format_fixed(set.roots[i], 4) << " | "
        << format_fixed(set.residual_pct[i], 4) << (set.residual_defined[i] ? "" : "*") << " |\n";
    footnote = footnote || !set.residual_defined[i];
  }
  if (footnote) {
    out << "\n* tan(q_n) = 0: the residual metric is undefined and reported as 0.\n";
  }
}

void write_truncation_csv(std::ostream& out, std::span<const TruncationPoint> points) {
  out << "N,lhs,rhs,abs_diff\n";
  for (const auto& pt : points) {
    out << pt.n_terms << ',' << format_full(pt.lhs) << ',' << format_full(pt.rhs) << ','
        << format_full(pt.abs_diff) << '\n';
  }
}

}  // namespace filmseries
