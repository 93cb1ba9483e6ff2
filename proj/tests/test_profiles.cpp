#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "filmseries/eigen_solver.hpp"
#include "filmseries/errors.hpp"
#include "filmseries/profiles.hpp"
#include "filmseries/reference_tables.hpp"
#include "filmseries/series.hpp"

using namespace filmseries;

namespace {

// w1·β_s = γ exactly.
ModelParams split_params(double w2 = 1.0) {
  return ModelParams{.w1 = 2.0 * reference::kGamma, .w2 = w2, .beta_s = 0.5,
                     .epsilon = reference::kEpsilon};
}

}  // namespace

TEST_CASE("profiles vanish exactly at x = 1") {
  const ModelParams params = split_params();
  const EigenSet roots = find_roots(derive(params), 60);
  for (const std::size_t n : {1u, 2u, 25u, 60u}) {
    for (const double tau : {0.0, 1e-3, 0.5, 10.0}) {
      const ProfileRequest req{.params = params, .x = 1.0, .tau = tau, .n_terms = n,
                               .eigenset = roots};
      CHECK(concentration(req).value == 0.0);
      CHECK(temperature(req).value == 0.0);
    }
  }
}

TEST_CASE("profiles relax to the linear steady state") {
  const ModelParams params = split_params();
  const DerivedParams d = derive(params);
  const EigenSet roots = find_roots(d, 25);
  for (const double x : {0.0, 0.25, 0.5, 0.9}) {
    const ProfileRequest req{.params = params, .x = x, .tau = 50.0, .n_terms = 25,
                             .eigenset = roots};
    CHECK(std::abs(concentration(req).value - params.w2 * (1 - x) / (1 - d.gamma)) <= 1e-15);
    CHECK(std::abs(temperature(req).value -
                   params.w2 * params.beta_s * (1 - x) / (1 - d.gamma)) <= 1e-15);
  }
}

TEST_CASE("profile values pinned by a 40-digit direct summation") {
  const ModelParams params = split_params();
  const EigenSet roots = find_roots(derive(params), 25);
  const ProfileRequest a_req{.params = params, .x = 0.0, .tau = 0.01, .n_terms = 25,
                             .eigenset = roots};
  CHECK(concentration(a_req).value == doctest::Approx(0.81109691258999331189).epsilon(1e-12));
  const ProfileRequest t_req{.params = params, .x = 0.25, .tau = 0.05, .n_terms = 25,
                             .eigenset = roots};
  CHECK(temperature(t_req).value == doctest::Approx(0.94502944153836111371).epsilon(1e-12));
  CHECK_FALSE(temperature(t_req).truncation_warning);
}

TEST_CASE("tau = 0 carries a truncation warning and tends to zero with N") {
  const ModelParams params = split_params();
  const EigenSet roots = find_roots(derive(params), 400);
  double previous = INFINITY;
  for (const std::size_t n : {25u, 100u, 400u}) {
    const ProfileRequest req{.params = params, .x = 0.5, .tau = 0.0, .n_terms = n,
                             .eigenset = roots};
    const auto pt = concentration(req);
    CHECK(pt.truncation_warning);
    CHECK(std::abs(pt.value) < previous);
    previous = std::abs(pt.value);
  }
}

TEST_CASE("every profile and transform scales with w2") {
  const ModelParams one = split_params(1.0);
  const ModelParams three = split_params(3.0);
  const EigenSet roots = find_roots(derive(one), 25);
  for (const double x : {0.0, 0.3, 0.8}) {
    const ProfileRequest r1{.params = one, .x = x, .tau = 0.02, .n_terms = 25, .eigenset = roots};
    const ProfileRequest r3{.params = three, .x = x, .tau = 0.02, .n_terms = 25, .eigenset = roots};
    CHECK(concentration(r3).value == doctest::Approx(3.0 * concentration(r1).value));
    CHECK(temperature(r3).value == doctest::Approx(3.0 * temperature(r1).value));
    CHECK(transform_concentration(x, 2.0, three) ==
          doctest::Approx(3.0 * transform_concentration(x, 2.0, one)));
    CHECK(transform_temperature(x, 2.0, three) ==
          doctest::Approx(3.0 * transform_temperature(x, 2.0, one)));
  }
}

TEST_CASE("transform_concentration") {
  const ModelParams params = split_params();
  CHECK(transform_concentration(1.0, 3.0, params) == 0.0);
  CHECK(transform_concentration(1.0, 1e8, params) == 0.0);
  // γ = 0 reduces to the isothermal transform: bracket 1 at x = 0
  const ModelParams iso{.w1 = 0.7, .w2 = 2.0, .beta_s = 0.0, .epsilon = 0.4};
  CHECK(transform_concentration(0.0, 1.0, iso) == doctest::Approx(2.0));
  for (const double x : {0.2, 0.6}) {
    const double p = 5.0;
    const double isothermal = iso.w2 *
                              (std::cosh(x * std::sqrt(p)) -
                               std::sinh(x * std::sqrt(p)) / std::tanh(std::sqrt(p))) / p;
    CHECK(transform_concentration(x, p, iso) == doctest::Approx(isothermal).epsilon(1e-13));
  }
  // 40-digit direct evaluation
  CHECK(transform_concentration(0.5, 2.0, params) ==
        doctest::Approx(0.18809421863061883727).epsilon(1e-14));
  CHECK(std::isfinite(transform_concentration(0.3, 1e12, params)));
}

TEST_CASE("transform_temperature") {
  const ModelParams params = split_params();
  CHECK(transform_temperature(1.0, 2.0, params) == 0.0);
  CHECK(transform_temperature(0.0, 1.0, params) ==
        doctest::Approx(0.62776571457008820384).epsilon(1e-14));
  // small-p asymptote p·θ̄(0,p) → w2β_s/(1−γ)
  const double p = 1e-8;
  const double limit = params.w2 * params.beta_s / (1.0 - derive(params).gamma);
  CHECK(p * transform_temperature(0.0, p, params) == doctest::Approx(limit).epsilon(1e-8));
}

TEST_CASE("coupling residuals vanish term by term with solver roots") {
  const ModelParams params = split_params();
  const EigenSet roots = find_roots(derive(params), 100);
  for (const double tau : {0.01, 0.1, 1.0}) {
    for (const std::size_t n : {5u, 25u, 100u}) {
      const auto r = coupling_residuals(tau, params, roots, n);
      CHECK(std::abs(r.bc5) <= 1e-12 * params.w2);
      CHECK(std::abs(r.bc6) <= 1e-12 * params.w2);
    }
  }
  CHECK_THROWS_AS(coupling_residuals(0.0, params, roots, 5), DomainError);
}

TEST_CASE("coupling residuals: beta_s = 0 leaves no flux residual") {
  const ModelParams iso{.w1 = 0.3, .w2 = 1.0, .beta_s = 0.0, .epsilon = 0.2};
  const EigenSet roots = find_roots(derive(iso), 20);
  const auto r = coupling_residuals(0.05, iso, roots, 20);
  CHECK(r.bc6 == 0.0);
}

TEST_CASE("coupling residuals with the printed roots") {
  const ModelParams params = split_params();
  const EigenSet roots = fixture_eigenset(derive(params));
  // 40-digit direct summation gives bc5 = −3.192831057e-5 at τ = 0.1
  const auto r = coupling_residuals(0.1, params, roots, 25);
  CHECK(std::abs(r.bc5) <= 5e-3 * params.w2);
  CHECK(r.bc5 == doctest::Approx(-3.192831057e-5).epsilon(1e-8));
}

TEST_CASE("coupling residual grows linearly with a root perturbation") {
  const ModelParams params = split_params();
  const DerivedParams d = derive(params);
  const EigenSet exact = find_roots(d, 10);
  auto residual = [&](double delta) {
    std::vector<double> shifted = exact.roots;
    for (double& q : shifted) q += delta;
    const EigenSet set = make_eigenset(d, shifted, RootsProvenance::file);
    return std::abs(coupling_residuals(0.05, params, set, 10).bc5);
  };
  const double r1 = residual(1e-7);
  const double r2 = residual(2e-7);
  const double r4 = residual(4e-7);
  CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(r4 / r1 == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("term-wise transform of the concentration series") {
  const ModelParams params = ModelParams::from_gamma(reference::kGamma, reference::kEpsilon);
  const DerivedParams d = derive(params);
  const EigenSet roots = find_roots(d, 400);

  SUBCASE("x = 1: both sides vanish") {
    const auto t = termwise_transform_check(1.0, 0.7, params, roots, 25);
    CHECK(t.series_side == 0.0);
    CHECK(t.closed_side == 0.0);
  }

  SUBCASE("x = 0 is the surface-temperature identity in disguise") {
    // a(0) = w1·θ(0) + w2, so p·ā_series(0) = w2 + γ/√ε · (formula-1 series)
    for (const double p : {0.1, 1.0, 30.0}) {
      const auto t = termwise_transform_check(0.0, p, params, roots, 100);
      const double f1 = formula1_lhs({.p = p, .d = d, .eigenset = roots}, 100).value;
      CHECK(p * t.series_side == doctest::Approx(params.w2 + d.ratio * f1).epsilon(1e-12));
    }
  }

  SUBCASE("sides converge as N grows") {
    for (const double x : {0.0, 0.25, 0.5, 0.75}) {
      for (const double p : {0.1, 1.0, 10.0}) {
        const auto t25 = termwise_transform_check(x, p, params, roots, 25);
        const auto t400 = termwise_transform_check(x, p, params, roots, 400);
        const double e25 = std::abs(t25.series_side - t25.closed_side);
        const double e400 = std::abs(t400.series_side - t400.closed_side);
        CHECK(e400 < e25);
        if (p <= 1.0) {
          CHECK(e25 <= 1e-4 * std::abs(t25.closed_side));
          CHECK(e400 <= 1e-6 * std::abs(t400.closed_side));
        }
      }
    }
  }
}

TEST_CASE("profile request validation") {
  const ModelParams params = split_params();
  const EigenSet roots = find_roots(derive(params), 5);
  CHECK_THROWS_AS(concentration({.params = params, .x = 1.5, .tau = 0.1, .n_terms = 5,
                                 .eigenset = roots}),
                  DomainError);
  CHECK_THROWS_AS(temperature({.params = params, .x = 0.5, .tau = -1.0, .n_terms = 5,
                               .eigenset = roots}),
                  DomainError);
  CHECK_THROWS_AS(concentration({.params = params, .x = 0.5, .tau = 0.1, .n_terms = 6,
                                 .eigenset = roots}),
                  RangeError);
  const ModelParams other = ModelParams::from_gamma(0.2, 0.3);
  CHECK_THROWS_AS(concentration({.params = other, .x = 0.5, .tau = 0.1, .n_terms = 5,
                                 .eigenset = roots}),
                  DomainError);
}

TEST_CASE("profile CSV") {
  const std::vector<ProfilePoint> pts = {
      {.x = 0.0, .tau = 0.1, .value = 0.5, .kind = ProfileKind::concentration},
      {.x = 1.0, .tau = 0.1, .value = 0.0, .kind = ProfileKind::temperature}};
  std::ostringstream out;
  write_profile_csv(out, pts);
  CHECK(out.str() == "kind,x,tau,value\nconcentration,0,0.10000000000000001,0.5\n"
                     "temperature,1,0.10000000000000001,0\n");
}
