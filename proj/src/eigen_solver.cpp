#include "filmseries/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "filmseries/csv.hpp"
#include "filmseries/errors.hpp"

namespace filmseries {

namespace {

constexpr int kBisectionIterations = 60;

// Where |tan q_n| is at rounding level the footnote metric is 0/0.
bool tan_vanishes(double q) {
  return std::abs(std::tan(q)) <= 1e-12 * std::max(1.0, q);
}

// Zeros of F where either tangent has a pole: there the eigenvalue equation
// has no finite sides. With γ ≠ 0 this needs both cosines to vanish together;
// with γ = 0 every zero of cos(q√ε) is such a spurious zero.
bool on_tangent_pole(double q, const DerivedParams& d) {
  const double qs = q * d.sqrt_eps;
  return std::abs(std::cos(q)) < 1e-12 * std::max(1.0, q) ||
         std::abs(std::cos(qs)) < 1e-12 * std::max(1.0, qs);
}

template <class Sign>
double bisect_sign(double lo, double hi, bool neg_lo, Sign negative) {
  for (int i = 0; i < kBisectionIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (negative(mid) == neg_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Sign of F/cos(q√ε). Zeros of cos(q√ε) shared with F cancel out, so a root
// lying close to one of them still shows up as a sign change.
bool reduced_negative(double q, const DerivedParams& d) {
  return (characteristic(q, d) < 0.0) != (std::cos(q * d.sqrt_eps) < 0.0);
}

}  // namespace

std::string to_string(RootsProvenance provenance) {
  switch (provenance) {
    case RootsProvenance::solver:
      return "solver";
    case RootsProvenance::fixture:
      return "fixture";
    case RootsProvenance::file:
      return "file";
  }
  return "unknown";
}

double characteristic(double q, const DerivedParams& d) {
  const double qs = q * d.sqrt_eps;
  return d.sqrt_eps * std::sin(q) * std::cos(qs) - d.gamma * std::cos(q) * std::sin(qs);
}

double residual_percent(double q, const DerivedParams& d) {
  const double qs = q * d.sqrt_eps;
  if (std::abs(std::cos(q)) < 1e-9 || std::abs(std::cos(qs)) / d.sqrt_eps < 1e-9) {
    throw UndefinedMetricError("residual metric undefined at a tangent pole, q = " +
                               format_full(q));
  }
  const double tq = std::tan(q);
  if (std::abs(tq) < 1e-300) {
    throw UndefinedMetricError("residual metric undefined where tan q = 0, q = " + format_full(q));
  }
  return std::abs((tq - d.ratio * std::tan(qs)) / tq) * 100.0;
}

double refine_root(double lo, double hi, const DerivedParams& d) {
  double f_lo = characteristic(lo, d);
  double f_hi = characteristic(hi, d);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw DomainError("refine_root: no sign change in [" + format_full(lo) + ", " +
                      format_full(hi) + "]");
  }
  for (int i = 0; i < kBisectionIterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = characteristic(mid, d);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  double best = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  double f_best = std::min(std::abs(f_lo), std::abs(f_hi));
  // Secant polish, kept only if it stays inside the bracket and improves |F|.
  if (f_hi != f_lo) {
    const double s = hi - f_hi * (hi - lo) / (f_hi - f_lo);
    if (s >= lo && s <= hi) {
      const double f_s = std::abs(characteristic(s, d));
      if (f_s < f_best) {
        best = s;
        f_best = f_s;
      }
    }
  }
  return best;
}

double scan_step(const DerivedParams& d) {
  return std::min(std::numbers::pi, std::numbers::pi / d.sqrt_eps) / 32.0;
}

EigenSet find_roots(const DerivedParams& d, std::size_t n_roots, double tol) {
  if (n_roots == 0) {
    throw DomainError("find_roots: n_roots must be at least 1");
  }
  if (!(tol > 0.0)) {
    throw DomainError("find_roots: tol must be positive");
  }
  const double h = scan_step(d);
  // Roots are at least one per π (ε ≤ 1) or per π/√ε (ε > 1), i.e. per 32 steps.
  const std::size_t max_steps = 32 * (4 * n_roots + 64);

  // |F| ≤ √ε + |γ|, so the acceptance threshold scales with it.
  const double f_scale = std::max(1.0, d.sqrt_eps + std::abs(d.gamma));
  std::vector<double> roots;
  roots.reserve(n_roots);
  auto accept = [&](double q) {
    if (on_tangent_pole(q, d)) return;
    if (std::abs(characteristic(q, d)) > tol * f_scale) return;
    if (!roots.empty() && q <= roots.back()) return;
    roots.push_back(q);
  };

  double q0 = h;
  double f0 = characteristic(q0, d);
  if (f0 == 0.0) accept(q0);
  for (std::size_t step = 2; step <= max_steps && roots.size() < n_roots; ++step) {
    const double q1 = static_cast<double>(step) * h;
    const double f1 = characteristic(q1, d);
    if (f1 == 0.0) {
      accept(q1);
    } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
      const double q = refine_root(q0, q1, d);
      accept(q);
    } else if (f0 != 0.0 && reduced_negative(q0, d) != reduced_negative(q1, d)) {
      const double q = bisect_sign(q0, q1, reduced_negative(q0, d),
                                   [&](double x) { return reduced_negative(x, d); });
      accept(q);
    }
    q0 = q1;
    f0 = f1;
  }
  if (roots.size() < n_roots) {
    throw SearchExhaustedError(roots.size(), n_roots);
  }
  return make_eigenset(d, std::move(roots), RootsProvenance::solver);
}

EigenSet make_eigenset(const DerivedParams& d, std::vector<double> roots,
                       RootsProvenance provenance) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!(roots[i] > 0.0) || !std::isfinite(roots[i])) {
      throw DomainError("eigenvalue " + std::to_string(i + 1) + " is not a positive finite number");
    }
    if (i > 0 && !(roots[i] > roots[i - 1])) {
      throw DomainError("eigenvalues must be strictly increasing (at n = " +
                        std::to_string(i + 1) + ")");
    }
  }
  EigenSet set;
  set.params = d;
  set.provenance = provenance;
  set.roots = std::move(roots);
  set.residual_pct.reserve(set.roots.size());
  set.residual_defined.reserve(set.roots.size());
  set.pole_free_residual.reserve(set.roots.size());
  for (const double q : set.roots) {
    double pct = 0.0;
    bool defined = !tan_vanishes(q);
    if (defined) {
      try {
        pct = residual_percent(q, d);
      } catch (const UndefinedMetricError&) {
        defined = false;
      }
    }
    set.residual_pct.push_back(pct);
    set.residual_defined.push_back(defined);
    set.pole_free_residual.push_back(characteristic(q, d));
  }
  return set;
}

const std::array<double, 25>& table1_fixture_roots() {
  static const std::array<double, 25> roots = {
      3.0371,  6.0715,  9.1001,  12.1199, 15.1273, 18.1187, 21.0910, 24.0425, 26.9750,
      29.8947, 32.8119, 35.7377, 38.6803, 41.6435, 44.6269, 47.6277, 50.6424, 53.6676,
      56.6998, 59.7361, 62.7735, 65.8094, 68.8409, 71.8650, 74.8783};
  return roots;
}

EigenSet fixture_eigenset(const DerivedParams& d) {
  const auto& fixture = table1_fixture_roots();
  return make_eigenset(d, std::vector<double>(fixture.begin(), fixture.end()),
                       RootsProvenance::fixture);
}

void write_eigenset_csv(std::ostream& out, const EigenSet& set) {
  out << "n,q_n,residual_pct,F_residual\n";
  bool any_undefined = false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << (i + 1) << ',' << format_full(set.roots[i]) << ',' << format_full(set.residual_pct[i])
        << ',' << format_full(set.pole_free_residual[i]) << '\n';
    any_undefined = any_undefined || !set.residual_defined[i];
  }
  if (any_undefined) {
    out << "# residual_pct is reported as 0 where tan(q_n) = 0 and the metric is undefined\n";
  }
}

EigenSet read_eigenset_csv(std::istream& in, const DerivedParams& d, RootsProvenance provenance) {
  std::string line;
  std::vector<double> roots;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_csv_line(line);
    if (!header_seen) {
      if (fields.size() < 2 || fields[0] != "n" || fields[1] != "q_n") {
        throw DomainError("eigenset CSV must start with header n,q_n,...");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 2) {
      throw DomainError("eigenset CSV line " + std::to_string(line_no) + ": missing q_n");
    }
    try {
      roots.push_back(parse_real(fields[1]));
    } catch (const std::invalid_argument& e) {
      throw DomainError("eigenset CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) {
    throw DomainError("eigenset CSV is empty");
  }
  return make_eigenset(d, std::move(roots), provenance);
}

}  // namespace filmseries
