#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "filmseries/errors.hpp"
#include "filmseries/params.hpp"

using namespace filmseries;

TEST_CASE("derive: water vapour / lithium bromide constants") {
  const auto d = derive_from_gamma(-0.03421, 2.64489e-3);
  CHECK(d.gamma == -0.03421);
  CHECK(d.sqrt_eps == doctest::Approx(0.0514285).epsilon(1e-6));
  // γ/√ε = −0.665195445317973937 (40-digit evaluation)
  CHECK(std::abs(d.ratio - -0.66519544531797394) < 1e-15);
}

TEST_CASE("derive: beta_s = 0 gives gamma = 0") {
  const ModelParams params{.w1 = 7.5, .w2 = 1.0, .beta_s = 0.0, .epsilon = 1.0};
  const auto d = derive(params);
  CHECK(d.gamma == 0.0);
  CHECK(d.sqrt_eps == 1.0);
  CHECK(d.ratio == 0.0);
}

TEST_CASE("derive: sqrt_eps squared reproduces epsilon within 2 ulps") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_eps(-8.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double eps = std::pow(10.0, log_eps(rng));
    const auto d = derive_from_gamma(0.3, eps);
    const double ulp = std::nextafter(eps, 2.0 * eps) - eps;
    CHECK(std::abs(d.sqrt_eps * d.sqrt_eps - eps) <= 2.0 * ulp);
  }
}

TEST_CASE("derive: gamma is the single product w1*beta_s and derive is pure") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams params{.w1 = u(rng), .w2 = u(rng), .beta_s = u(rng),
                             .epsilon = std::abs(u(rng)) + 1e-3};
    if (std::abs(1.0 - params.w1 * params.beta_s) < 1e-12) continue;
    const auto a = derive(params);
    const auto b = derive(params);
    CHECK(a.gamma == params.w1 * params.beta_s);
    CHECK(a.gamma == b.gamma);
    CHECK(a.sqrt_eps == b.sqrt_eps);
    CHECK(a.ratio == b.ratio);
  }
}

TEST_CASE("derive: domain and degeneracy errors") {
  CHECK_THROWS_AS(derive_from_gamma(0.1, 0.0), DomainError);
  CHECK_THROWS_AS(derive_from_gamma(0.1, -1e-3), DomainError);
  CHECK_THROWS_AS(derive_from_gamma(0.1, std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(derive_from_gamma(1.0, 0.5), DegeneracyError);
  CHECK_THROWS_AS(derive_from_gamma(1.0 + 1e-13, 0.5), DegeneracyError);
  CHECK_NOTHROW(derive_from_gamma(1.0 + 1e-9, 0.5));
  // configurable floor
  CHECK_THROWS_AS(derive_from_gamma(1.0 + 1e-9, 0.5, 1e-6), DegeneracyError);
}

TEST_CASE("from_gamma synthesizes w1 = gamma, beta_s = 1, w2 = 1") {
  const auto p = ModelParams::from_gamma(-0.2, 0.01);
  CHECK(p.w1 == -0.2);
  CHECK(p.beta_s == 1.0);
  CHECK(p.w2 == 1.0);
  CHECK(p.epsilon == 0.01);
}
