#include "filmseries/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "filmseries/csv.hpp"
#include "filmseries/errors.hpp"
#include "filmseries/hyperbolic.hpp"

namespace filmseries {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_p(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw DomainError("Laplace parameter p must be positive and finite, got " + format_full(p));
  }
}

void validate(const FormulaOperands& op, std::size_t n_terms) {
  require_positive_p(op.p);
  if (op.eigenset.params.gamma != op.d.gamma || op.eigenset.params.sqrt_eps != op.d.sqrt_eps) {
    throw DomainError("eigenset was computed for different (gamma, epsilon)");
  }
  if (n_terms > op.eigenset.size()) {
    throw RangeError("requested " + std::to_string(n_terms) + " terms but only " +
                     std::to_string(op.eigenset.size()) + " eigenvalues are available");
  }
}

double checked_g(double q, const DerivedParams& d, double g_floor, std::size_t index) {
  const double g = g_of_q(q, d);
  if (std::abs(g) < g_floor) {
    throw DegenerateGError(index, q, g);
  }
  return g;
}

// p/(p + q²) = 1/(1 + q²/p) without overflow for tiny p.
double decay(double q, double p) { return p / (p + q * q); }

// Rough magnitude of Σ_{n>N} |c|·p/(p + q_n²)·q_n^{-k}, treating roots past
// q_N as evenly spaced with the mean spacing seen so far.
double eigen_tail(double max_coeff, const std::vector<double>& roots, std::size_t n, double p,
                  bool extra_inverse_q) {
  if (n < 2) return max_coeff;
  const double q_last = roots[n - 1];
  const double spacing = (q_last - roots[0]) / static_cast<double>(n - 1);
  const double sp = std::sqrt(p);
  const double integral = extra_inverse_q ? 0.5 * std::log1p(p / (q_last * q_last))
                                          : sp * std::atan(sp / q_last);
  return max_coeff * integral / spacing;
}

}  // namespace

double g_of_q(double q, const DerivedParams& d) {
  const double qs = q * d.sqrt_eps;
  return (1.0 - d.gamma) * std::cos(qs) * std::cos(q) -
         (d.sqrt_eps - d.ratio) * std::sin(qs) * std::sin(q);
}

double formula1_term(double q, double p, const DerivedParams& d, double g_floor) {
  const double g = checked_g(q, d, g_floor, 0);
  return 2.0 * std::cos(q) * std::sin(q * d.sqrt_eps) * decay(q, p) / (q * g);
}

double formula2_term(double q, double p, const DerivedParams& d, double g_floor) {
  const double g = checked_g(q, d, g_floor, 0);
  return 2.0 * std::cos(q * d.sqrt_eps) * std::cos(q) * decay(q, p) / g;
}

double formula3_term(std::size_t n, double p) {
  const double npi = static_cast<double>(n) * kPi;
  return 2.0 * p / (p + npi * npi);
}

SeriesEval formula1_lhs(const FormulaOperands& op, std::size_t n_terms, Summation mode,
                        double g_floor) {
  validate(op, n_terms);
  const auto& d = op.d;
  CompensatedSum sum(mode);
  sum += d.sqrt_eps / (1.0 - d.gamma);
  double last = 0.0;
  double max_coeff = 0.0;
  for (std::size_t n = 0; n < n_terms; ++n) {
    const double q = op.eigenset.roots[n];
    const double g = checked_g(q, d, g_floor, n + 1);
    const double coeff = 2.0 * std::cos(q) * std::sin(q * d.sqrt_eps) / g;
    const double term = coeff * decay(q, op.p) / q;
    sum += term;
    last = std::abs(term);
    max_coeff = std::max(max_coeff, std::abs(coeff));
  }
  return SeriesEval{.value = sum.value(),
                    .terms_used = n_terms,
                    .last_term = last,
                    .tail_estimate = eigen_tail(max_coeff, op.eigenset.roots, n_terms, op.p, true),
                    .compensated = sum.compensated()};
}

double formula1_rhs(double p, const DerivedParams& d) {
  require_positive_p(p);
  const double denom =
      stable_coth(std::sqrt(d.epsilon() * p)) * stable_tanh(std::sqrt(p)) - d.ratio;
  if (std::abs(denom) < 1e-300) {
    throw DegeneracyError("formula 1 closed form: denominator vanishes at p = " + format_full(p));
  }
  return 1.0 / denom;
}

SeriesEval formula2_lhs(const FormulaOperands& op, std::size_t n_terms, Summation mode,
                        double g_floor) {
  validate(op, n_terms);
  const auto& d = op.d;
  CompensatedSum sum(mode);
  sum += 1.0 / (1.0 - d.gamma);
  double last = 0.0;
  double max_coeff = 0.0;
  for (std::size_t n = 0; n < n_terms; ++n) {
    const double q = op.eigenset.roots[n];
    const double g = checked_g(q, d, g_floor, n + 1);
    const double coeff = 2.0 * std::cos(q * d.sqrt_eps) * std::cos(q) / g;
    const double term = coeff * decay(q, op.p);
    sum += term;
    last = std::abs(term);
    max_coeff = std::max(max_coeff, std::abs(coeff));
  }
  return SeriesEval{.value = sum.value(),
                    .terms_used = n_terms,
                    .last_term = last,
                    .tail_estimate = eigen_tail(max_coeff, op.eigenset.roots, n_terms, op.p, false),
                    .compensated = sum.compensated()};
}

double formula2_rhs(double p, const DerivedParams& d) {
  require_positive_p(p);
  const double sp = std::sqrt(p);
  const double denom =
      1.0 - d.ratio * stable_coth(sp) * stable_tanh(std::sqrt(d.epsilon() * p));
  if (std::abs(denom) < 1e-300) {
    throw DegeneracyError("formula 2 closed form: denominator vanishes at p = " + format_full(p));
  }
  return sqrt_coth(p) / denom;
}

SeriesEval formula3_lhs(double p, std::size_t n_terms, bool tail_correction, Summation mode) {
  require_positive_p(p);
  CompensatedSum sum(mode);
  sum += 1.0;
  double last = 0.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const double term = formula3_term(n, p);
    sum += term;
    last = term;
  }
  // ∫_N^∞ 2p/(p + x²π²) dx; π/2 − arctan(z) = arctan(1/z) for z > 0.
  const double sp = std::sqrt(p);
  const double tail = n_terms == 0 ? sp  // (2√p/π)·(π/2)
                                   : (2.0 * sp / kPi) *
                                         std::atan(sp / (static_cast<double>(n_terms) * kPi));
  if (tail_correction) {
    sum += tail;
  }
  return SeriesEval{.value = sum.value(),
                    .terms_used = n_terms,
                    .last_term = last,
                    .tail_estimate = tail,
                    .compensated = sum.compensated()};
}

double formula3_rhs(double p) {
  require_positive_p(p);
  return sqrt_coth(p);
}

std::vector<double> bernoulli_numbers(std::size_t count) {
  if (count > kMaxBernoulliCount) {
    throw RangeError("bernoulli_numbers: count " + std::to_string(count) + " exceeds " +
                     std::to_string(kMaxBernoulliCount));
  }
  // Tangent numbers by the all-positive recurrence of Brent and Harvey, then
  // B_2n = (−1)^{n−1}·2n·T_n / (4^n(4^n − 1)).
  std::vector<double> tangent(count + 1, 0.0);
  if (count >= 1) tangent[1] = 1.0;
  for (std::size_t k = 2; k <= count; ++k) {
    tangent[k] = static_cast<double>(k - 1) * tangent[k - 1];
  }
  for (std::size_t k = 2; k <= count; ++k) {
    for (std::size_t j = k; j <= count; ++j) {
      tangent[j] = static_cast<double>(j - k) * tangent[j - 1] +
                   static_cast<double>(j - k + 2) * tangent[j];
    }
  }
  std::vector<double> even(count + 1);
  even[0] = 1.0;
  for (std::size_t n = 1; n <= count; ++n) {
    const double four_n = std::ldexp(1.0, static_cast<int>(2 * n));
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    even[n] = sign * 2.0 * static_cast<double>(n) * tangent[n] / (four_n * (four_n - 1.0));
  }
  return even;
}

SeriesEval bernoulli_series(double p, std::size_t n_terms) {
  if (!std::isfinite(p)) {
    throw DomainError("bernoulli_series requires finite p");
  }
  // t_n = 2^{2n}B_{2n}p^n/(2n)! is the p^n coefficient of √p·coth√p. From
  // (√p coth√p)·(sinh√p/√p) = cosh√p:
  //   t_n = p^n/(2n)! − Σ_{k<n} t_k·p^{n−k}/(2(n−k)+1)!.
  std::vector<double> sinh_coeff(n_terms + 1);  // p^j/(2j+1)!
  std::vector<double> cosh_coeff(n_terms + 1);  // p^j/(2j)!
  sinh_coeff[0] = 1.0;
  cosh_coeff[0] = 1.0;
  for (std::size_t j = 1; j <= n_terms; ++j) {
    const double jj = static_cast<double>(2 * j);
    sinh_coeff[j] = sinh_coeff[j - 1] * p / (jj * (jj + 1.0));
    cosh_coeff[j] = cosh_coeff[j - 1] * p / ((jj - 1.0) * jj);
  }
  std::vector<double> terms(n_terms + 1);
  terms[0] = 1.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    CompensatedSum s;
    s += cosh_coeff[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (sinh_coeff[j] == 0.0) break;  // underflowed; all later ones too
      s += -terms[n - j] * sinh_coeff[j];
    }
    terms[n] = s.value();
  }
  CompensatedSum sum;
  for (const double t : terms) sum += t;

  const bool outside_radius = std::abs(p) >= kPi * kPi;
  // Terms that have decayed below rounding of the sum no longer say anything.
  const bool growing = n_terms >= 2 &&
                       std::abs(terms[n_terms]) > 1e-16 * std::abs(sum.value()) &&
                       std::abs(terms[n_terms]) >= std::abs(terms[n_terms - 1]);
  return SeriesEval{.value = sum.value(),
                    .terms_used = n_terms,
                    .last_term = std::abs(terms[n_terms]),
                    .tail_estimate = std::nullopt,
                    .compensated = true,
                    .diverged = outside_radius || growing};
}

namespace {

void validate_rectangle(unsigned m, double a_len, double b_len, double y) {
  if (m == 0) throw DomainError("ozisik: m must be a positive integer");
  if (!(a_len > 0.0) || !(b_len > 0.0)) throw DomainError("ozisik: a and b must be positive");
  if (!(y > 0.0 && y < b_len)) {
    throw DomainError("ozisik: y must lie strictly inside (0, b), got " + format_full(y));
  }
}

}  // namespace

SeriesEval ozisik_lhs(unsigned m, double a_len, double b_len, double y, std::size_t n_terms) {
  validate_rectangle(m, a_len, b_len, y);
  const double sigma = static_cast<double>(m) * kPi / a_len;
  const double sigma2 = sigma * sigma;
  CompensatedSum sum;
  double last = 0.0;
  for (std::size_t n = 1; n <= n_terms; ++n) {
    const double theta = static_cast<double>(n) * kPi / b_len;
    const double term = theta / (sigma2 + theta * theta) * std::sin(theta * y);
    sum += term;
    last = std::abs(term);
  }
  return SeriesEval{.value = 2.0 / b_len * sum.value(),
                    .terms_used = n_terms,
                    .last_term = 2.0 / b_len * last,
                    .tail_estimate = std::nullopt,
                    .compensated = true};
}

double ozisik_rhs(unsigned m, double a_len, double b_len, double y) {
  validate_rectangle(m, a_len, b_len, y);
  const double sigma = static_cast<double>(m) * kPi / a_len;
  return sinh_ratio(sigma * (b_len - y), sigma * b_len);
}

}  // namespace filmseries
