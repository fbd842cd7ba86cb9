#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "clifford_lab/errors.hpp"
#include "clifford_lab/measure.hpp"

using namespace clifford_lab;

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

OtsukiProfile profile_at(int n, double fraction, double step = 1e-3) {
  IntegratorOptions opts;
  opts.step = step;
  if (step > 1e-3) {
    opts.drift_bound = 1e-3;
    opts.closure_tolerance = 1e-3;
  }
  return integrate_profile(n, fraction * clifford_lambda(n), opts);
}

}  // namespace

TEST_CASE("leaf density") {
  CHECK(leaf_density(3, 0.7, 0.7) == 1.0);
  const double a = 0.6, b = 0.9;
  for (int n = 3; n <= 6; ++n) {
    CHECK(leaf_density(n, a, 1.3) / leaf_density(n, b, 1.3) ==
          doctest::Approx(std::pow(a / b, -(n - 1.0) / n)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(leaf_density(3, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(leaf_density(3, 1.0, -1.0), DomainError);
}

TEST_CASE("log density rate along a profile") {
  const int n = 4;
  const auto p = profile_at(n, 0.8);
  const auto s = p.samples();
  const double h = p.step();
  for (std::size_t j = 1; j + 1 < s.size(); j += 37) {
    const double ref = p.lambda_ref();
    const double fd = (std::log(leaf_density(n, s[j + 1].lambda, ref)) -
                       std::log(leaf_density(n, s[j - 1].lambda, ref))) /
                      (2.0 * h);
    const double exact = -(n - 1.0) * s[j].lambda_dot / (n * s[j].lambda);
    CHECK(std::abs(fd - exact) <= 1e-6);
  }
}

TEST_CASE("period integral basics") {
  const auto flat = integrate_profile(3, clifford_lambda(3));
  CHECK(period_integral(flat, [](double, double) { return 1.0; }) ==
        doctest::Approx(flat.period()).epsilon(1e-14));

  // g rho = d/dt F(lambda) integrates to zero over a closed loop.
  const auto p = profile_at(5, 1.2);
  const double ref = p.lambda_ref();
  const double loop = period_integral(p, [&](double l, double ld) {
    return 3.0 * l * l * ld / leaf_density(5, l, ref);
  });
  CHECK(std::abs(loop) <= 1e-10);
}

TEST_CASE("quadrature error drops by about 16 per halving") {
  const int n = 3;
  auto moment = [&](double step) {
    const auto p = profile_at(n, 0.7, step);
    return period_integral(p, [](double l, double) { return l * l; });
  };
  const double reference = moment(0.02 / 16.0);
  const double e1 = std::abs(moment(0.04) - reference);
  const double e2 = std::abs(moment(0.02) - reference);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("sigma_k on constant and near-constant profiles") {
  for (int n = 3; n <= 6; ++n) {
    const auto flat = integrate_profile(n, clifford_lambda(n));
    for (int k = 1; k <= 4; ++k) {
      CHECK(sigma_k(flat, k) == doctest::Approx(ipow(n, k)).epsilon(1e-13));
    }
    double prev_gap = 1e300;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const double gap = std::abs(sigma_k(profile_at(n, 1.0 + eps), 3) - ipow(n, 3));
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    CHECK(prev_gap < 1e-2);
  }
  CHECK_THROWS_AS(sigma_k(integrate_profile(3, 0.9), 0), DomainError);
}

TEST_CASE("property: moments of a probability measure") {
  for (int n = 3; n <= 6; ++n) {
    for (double f : {0.6, 0.8, 0.95, 1.05, 1.3}) {
      const auto p = profile_at(n, f);
      const double s1 = sigma_k(p, 1);
      CHECK(s1 <= n + 1e-8);
      for (int k = 2; k <= 4; ++k) CHECK(sigma_k(p, k) >= ipow(s1, k) * (1.0 - 1e-9));
    }
  }
}

TEST_CASE("f_k and its derivatives") {
  const auto f2 = f_k(4, 2);
  for (double l : {0.3, 0.7, 1.4}) {
    CHECK(f2.first(l) == doctest::Approx(4.0 * (1.0 / l + 3.0 * l)).epsilon(1e-15));
  }
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= 5; ++k) {
      const auto good = f_k(n, k);
      CHECK(good.is_consistent());
      CHECK(good.derivative_mismatch() <= 1e-7);
      const auto printed = f_k(n, k, CoefficientVariant::kPrinted);
      if (k >= 3) {
        CHECK_FALSE(printed.is_consistent());
        CHECK(printed.derivative_mismatch() > 1e-2);
      } else {
        CHECK(printed.is_consistent());
      }
      for (double l = 0.05; l < 3.0; l += 0.1) CHECK(good.first(l) > 0.0);
    }
  }
  CHECK_THROWS_AS(f_k(3, 1), DomainError);
  CHECK_THROWS_AS(RadialFunction::checked(
                      "bad", [](double l) { return l * l; }, [](double l) { return 2.0 * l; },
                      [](double) { return 3.0; }),
                  DomainError);
}

TEST_CASE("radial Laplacian") {
  const auto constant = RadialFunction::checked(
      "1", [](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; });
  const auto identity = RadialFunction::checked(
      "lambda", [](double l) { return l; }, [](double) { return 1.0; },
      [](double) { return 0.0; });
  for (int n = 3; n <= 6; ++n) {
    CHECK(laplacian_radial(n, constant, 0.8, 0.3) == 0.0);
    CHECK(std::abs(laplacian_radial(n, identity, clifford_lambda(n), 0.0)) <= 1e-15);
  }
  CHECK_THROWS_AS(laplacian_radial(3, identity, 0.0, 0.0), DomainError);

  // Delta f rho = d/dt (f' lambda_dot rho): zero mean over a period.
  for (const auto& f : {identity, lambda_squared(), log_lambda(), f_k(4, 3)}) {
    const auto p = profile_at(4, 0.8);
    const double integral = period_integral(
        p, [&](double l, double ld) { return laplacian_radial(4, f, l, ld); });
    const double scale = period_integral(p, [&](double l, double ld) {
      return std::abs((f.second(l) + f.first(l) / (2.0 * l)) * ld * ld);
    });
    CHECK(std::abs(integral) <= 1e-8 * (1.0 + scale));
  }
}

TEST_CASE("key identity") {
  const auto flat = integrate_profile(3, clifford_lambda(3));
  const auto r0 = verify_keyeq(flat, f_k(3, 4));
  CHECK(std::abs(r0.lhs) <= 1e-12);
  CHECK(r0.rhs == 0.0);
  CHECK(r0.residual <= 1e-12);

  for (int n = 3; n <= 5; ++n) {
    const auto p = profile_at(n, 0.8);
    for (int k = 2; k <= 5; ++k) CHECK(verify_keyeq(p, f_k(n, k)).residual < 1e-6);
    CHECK(verify_keyeq(p, lambda_squared()).residual < 1e-6);
    CHECK(verify_keyeq(p, log_lambda()).residual < 1e-6);
    CHECK_THROWS_AS(verify_keyeq(p, f_k(n, 3, CoefficientVariant::kPrinted)), DomainError);
    CHECK(keyeq_sides(p, f_k(n, 3, CoefficientVariant::kPrinted)).residual > 1e-2);
  }
  const auto p = integrate_profile(3, 0.8);
  CHECK(verify_keyeq(p, lambda_squared()).residual < 1e-6);
}

TEST_CASE("sigma identity") {
  const auto flat = integrate_profile(4, clifford_lambda(4));
  const auto z = verify_sigma_identity(flat, 3);
  CHECK(std::abs(z.sides.lhs) <= 1e-10);
  CHECK(z.sides.rhs == 0.0);

  for (int n = 3; n <= 5; ++n) {
    const auto p = profile_at(n, 0.75);
    const auto k2 = verify_sigma_identity(p, 2);
    CHECK(k2.sides.residual < 1e-6);
    CHECK(verify_sigma_identity(p, 2, CoefficientVariant::kPrinted).sides.residual < 1e-6);
    for (int k = 3; k <= 5; ++k) {
      CHECK(verify_sigma_identity(p, k).sides.residual < 1e-6);
      CHECK(verify_sigma_identity(p, k, CoefficientVariant::kPrinted).sides.residual > 1e-3);
    }
  }

  // Orbit entirely above the root: S >= 0 on the orbit, so sigma_k >= n^k.
  for (int n = 3; n <= 5; ++n) {
    for (int k = 2; k <= 3; ++k) {
      const double root = pinching_root(n, k, CoefficientVariant::kCorrected).root_x;
      const auto p = profile_at(n, 0.7);
      REQUIRE(p.lambda_min() * p.lambda_min() >= root);
      const auto id = verify_sigma_identity(p, k);
      CHECK(id.s_min >= 0.0);
      CHECK(id.sides.rhs >= 0.0);
      CHECK(sigma_k(p, k) >= ipow(n, k) - 1e-7);
    }
  }
  CHECK_THROWS_AS(verify_sigma_identity(flat, 1), DomainError);
}

TEST_CASE("Perdomo margin") {
  CHECK(std::abs(perdomo_margin(integrate_profile(3, clifford_lambda(3)))) <= 1e-13);
  CHECK(perdomo_margin(integrate_profile(3, 0.9)) > 0.0);
  double prev = 0.0;
  for (double f : {1.02, 1.1, 1.2, 1.4}) {
    const double m = perdomo_margin(profile_at(3, f));
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("Simons identity along profiles") {
  const auto flat = integrate_profile(5, clifford_lambda(5));
  CHECK(simons_pointwise(flat) <= 1e-12);

  for (int n = 3; n <= 5; ++n) {
    const auto p = profile_at(n, 1.1);
    CHECK(simons_pointwise(p) < 1e-8);
    CHECK(simons_integrated(p).residual < 1e-8);

    const auto printed = simons_residuals(p, GradientCoefficient::kPrinted);
    const auto samples = p.samples();
    double worst_gap = 0.0, largest = 0.0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const double expected = 2.0 * (n - 1.0) * samples[j].lambda_dot * samples[j].lambda_dot;
      worst_gap = std::max(worst_gap, std::abs(printed[j] - expected));
      largest = std::max(largest, std::abs(printed[j]));
    }
    CHECK(worst_gap < 1e-8);
    CHECK(largest > 1e-3);
    CHECK(simons_pointwise(p, GradientCoefficient::kPrinted) > 1e-3);
  }
}

TEST_CASE("Euler period integral is n = 4 only") {
  const auto p = profile_at(4, 0.9);
  CHECK(std::isfinite(euler_period_integral(p)));
  CHECK_THROWS_AS(euler_period_integral(profile_at(3, 0.9)), DomainError);
}

TEST_CASE("sigma report") {
  const auto p = integrate_profile(3, 0.9);
  const auto r = make_sigma_report(p, 4);
  CHECK(r.n == 3);
  CHECK(r.sigma.size() == 4);
  CHECK(r.identity_residual.size() == 3);
  CHECK(r.measure_total > 0.0);
  CHECK(r.perdomo_margin > 0.0);
  CHECK(r.perdomo_margin == doctest::Approx(3.0 - r.sigma.at(1)));
  CHECK(r.min_A2 == doctest::Approx(6.0 * p.lambda_min() * p.lambda_min()));
  CHECK(r.max_A2 == doctest::Approx(6.0 * 0.81));
  CHECK(r.keyeq_residual < 1e-6);
  CHECK(r.simons_pointwise_max < 1e-8);
  for (const auto& [k, s] : r.sigma) CHECK(s > 0.0);
  CHECK_THROWS_AS(make_sigma_report(p, 1), DomainError);
}
