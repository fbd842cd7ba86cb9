#include "clifford_lab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

}  // namespace

double leaf_density(int n, double lambda, double lambda_ref) {
  if (!(lambda > 0.0) || !(lambda_ref > 0.0)) {
    throw DomainError("leaf_density: lambda and lambda_ref must be positive");
  }
  return std::pow(lambda / lambda_ref, -(n - 1.0) / n);
}

double period_integral(const OtsukiProfile& profile, const SampleFunction& g) {
  const auto samples = profile.samples();
  const std::size_t intervals = samples.size() - 1;
  const int n = profile.n();
  const double ref = profile.lambda_ref();
  double sum = 0.0;
  for (std::size_t j = 0; j < intervals; ++j) {
    const auto& s = samples[j];
    const double weight = (j == 0) ? 2.0 : (j % 2 == 1 ? 4.0 : 2.0);
    sum += weight * g(s.lambda, s.lambda_dot) * leaf_density(n, s.lambda, ref);
  }
  return profile.step() / 3.0 * sum;
}

double measure_total(const OtsukiProfile& profile) {
  return period_integral(profile, [](double, double) { return 1.0; });
}

double sigma_k(const OtsukiProfile& profile, int k) {
  if (k < 1) throw DomainError("sigma_k: k must be >= 1");
  const int n = profile.n();
  const double moment =
      period_integral(profile, [n, k](double l, double) { return ipow(profile_abs_A2(n, l), k); });
  return moment / measure_total(profile);
}

RadialFunction::RadialFunction(std::string label, Fn f, Fn df, Fn d2f, bool consistent)
    : label_(std::move(label)),
      f_(std::move(f)),
      df_(std::move(df)),
      d2f_(std::move(d2f)),
      consistent_(consistent) {}

RadialFunction RadialFunction::checked(std::string label, Fn f, Fn df, Fn d2f) {
  RadialFunction rf(std::move(label), std::move(f), std::move(df), std::move(d2f), true);
  const double gap = rf.derivative_mismatch();
  if (!(gap <= kConsistencyTolerance)) {
    throw DomainError("RadialFunction '" + rf.label_ +
                      "': f'' disagrees with the derivative of f' (gap " +
                      std::to_string(gap) + ")");
  }
  return rf;
}

RadialFunction RadialFunction::unchecked(std::string label, Fn f, Fn df, Fn d2f) {
  return RadialFunction(std::move(label), std::move(f), std::move(df), std::move(d2f), false);
}

double RadialFunction::derivative_mismatch(double lo, double hi, int points) const {
  double worst = 0.0;
  for (int j = 0; j < points; ++j) {
    const double l = lo + (hi - lo) * j / (points - 1);
    const double h = 1e-4 * l;
    const double fd = (df_(l + h) - df_(l - h)) / (2.0 * h);
    const double scale = std::abs(d2f_(l)) + std::abs(df_(l)) / l + 1.0;
    worst = std::max(worst, std::abs(fd - d2f_(l)) / scale);
  }
  return worst;
}

RadialFunction f_k(int n, int k, CoefficientVariant second_derivative) {
  if (k < 2) throw DomainError("f_k: k must be >= 2");
  if (n < 2) throw DomainError("f_k: n must be >= 2");
  const double scale = ipow(n, k - 1);
  const double base = n - 1.0;
  auto f = [=](double l) {
    double sum = std::log(l);
    for (int i = 1; i <= k - 1; ++i) sum += ipow(base, i) * ipow(l, 2 * i) / (2.0 * i);
    return scale * sum;
  };
  auto df = [=](double l) {
    double sum = 1.0 / l;
    for (int i = 1; i <= k - 1; ++i) sum += ipow(base, i) * ipow(l, 2 * i - 1);
    return scale * sum;
  };
  const bool printed = second_derivative == CoefficientVariant::kPrinted;
  auto d2f = [=](double l) {
    double sum = -1.0 / (l * l);
    for (int i = 1; i <= k - 1; ++i) {
      const double odd = 2.0 * i - 1.0;
      sum += ipow(base, i) * (printed ? 1.0 / odd : odd) * ipow(l, 2 * i - 2);
    }
    return scale * sum;
  };
  std::string label = "f_" + std::to_string(k) + (printed ? "[printed f'']" : "");
  if (printed && k >= 3) return RadialFunction::unchecked(std::move(label), f, df, d2f);
  return RadialFunction::checked(std::move(label), f, df, d2f);
}

RadialFunction lambda_squared() {
  return RadialFunction::checked(
      "lambda^2", [](double l) { return l * l; }, [](double l) { return 2.0 * l; },
      [](double) { return 2.0; });
}

RadialFunction log_lambda() {
  return RadialFunction::checked(
      "ln lambda", [](double l) { return std::log(l); }, [](double l) { return 1.0 / l; },
      [](double l) { return -1.0 / (l * l); });
}

double laplacian_radial(int n, const RadialFunction& f, double lambda, double lambda_dot) {
  if (!(lambda > 0.0)) throw DomainError("laplacian_radial: lambda must be positive");
  const double d1 = f.first(lambda);
  return (f.second(lambda) + 2.0 / (n * lambda) * d1) * lambda_dot * lambda_dot -
         n * lambda * ((n - 1.0) * lambda * lambda - 1.0) * d1;
}

double normalized_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

IdentitySides keyeq_sides(const OtsukiProfile& profile, const RadialFunction& f) {
  const int n = profile.n();
  IdentitySides out;
  out.lhs = period_integral(profile, [&](double l, double) {
    return n * l * ((n - 1.0) * l * l - 1.0) * f.first(l);
  });
  out.rhs = period_integral(profile, [&](double l, double ld) {
    return (f.second(l) + 2.0 / (n * l) * f.first(l)) * ld * ld;
  });
  out.residual = normalized_residual(out.lhs, out.rhs);
  return out;
}

IdentitySides verify_keyeq(const OtsukiProfile& profile, const RadialFunction& f) {
  if (!f.is_consistent()) {
    throw DomainError("verify_keyeq: '" + f.label() + "' has inconsistent derivatives");
  }
  return keyeq_sides(profile, f);
}

double sign_function(int n, int k, double lambda, CoefficientVariant variant) {
  if (!(lambda > 0.0)) throw DomainError("sign_function: lambda must be positive");
  return pinching_poly(n, k, lambda * lambda, variant) / (lambda * lambda);
}

SigmaIdentity verify_sigma_identity(const OtsukiProfile& profile, int k,
                                    CoefficientVariant variant) {
  if (k < 2) throw DomainError("verify_sigma_identity: k must be >= 2");
  const int n = profile.n();
  const double nk = ipow(n, k);
  const double scale = ipow(n, k - 1);
  SigmaIdentity out;
  out.sides.lhs = period_integral(
      profile, [&](double l, double) { return ipow(profile_abs_A2(n, l), k) - nk; });
  out.sides.rhs = period_integral(profile, [&](double l, double ld) {
    return scale * sign_function(n, k, l, variant) * ld * ld;
  });
  out.sides.residual = normalized_residual(out.sides.lhs, out.sides.rhs);
  out.s_min = std::numeric_limits<double>::infinity();
  out.s_max = -std::numeric_limits<double>::infinity();
  for (const auto& s : profile.samples()) {
    const double value = sign_function(n, k, s.lambda, variant);
    out.s_min = std::min(out.s_min, value);
    out.s_max = std::max(out.s_max, value);
  }
  return out;
}

double perdomo_margin(const OtsukiProfile& profile) {
  return profile.n() - sigma_k(profile, 1);
}

std::vector<double> simons_residuals(const OtsukiProfile& profile,
                                     GradientCoefficient coefficient) {
  const int n = profile.n();
  const double c = n * (n - 1.0);
  const RadialFunction abs_a2 = RadialFunction::checked(
      "|A|^2", [c](double l) { return c * l * l; }, [c](double l) { return 2.0 * c * l; },
      [c](double) { return 2.0 * c; });
  std::vector<double> out;
  out.reserve(profile.samples().size());
  for (const auto& s : profile.samples()) {
    const double a2 = profile_abs_A2(n, s.lambda);
    out.push_back(0.5 * laplacian_radial(n, abs_a2, s.lambda, s.lambda_dot) -
                  grad_A_norm_sq(n, s.lambda_dot, coefficient) - (n - a2) * a2);
  }
  return out;
}

double simons_pointwise(const OtsukiProfile& profile, GradientCoefficient coefficient) {
  double worst = 0.0;
  for (double r : simons_residuals(profile, coefficient)) worst = std::max(worst, std::abs(r));
  return worst;
}

IdentitySides simons_integrated(const OtsukiProfile& profile, GradientCoefficient coefficient) {
  const int n = profile.n();
  IdentitySides out;
  out.lhs = period_integral(profile, [n](double l, double) {
    const double a2 = profile_abs_A2(n, l);
    return a2 * a2;
  });
  out.rhs = period_integral(profile, [&](double l, double ld) {
    return grad_A_norm_sq(n, ld, coefficient) + n * profile_abs_A2(n, l);
  });
  out.residual = normalized_residual(out.lhs, out.rhs);
  return out;
}

double euler_period_integral(const OtsukiProfile& profile) {
  if (profile.n() != 4) throw DomainError("euler_period_integral: requires n = 4");
  return period_integral(profile, [](double l, double) {
    const double a2 = profile_abs_A2(4, l);
    return 0.25 * a2 * a2 + 2.0 * a2 - 12.0;
  });
}

SigmaReport make_sigma_report(const OtsukiProfile& profile, int k_max,
                              CoefficientVariant variant) {
  if (k_max < 2) throw DomainError("make_sigma_report: k_max must be >= 2");
  const int n = profile.n();
  SigmaReport report;
  report.n = n;
  report.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) report.sigma[k] = sigma_k(profile, k);
  report.min_A2 = profile_abs_A2(n, profile.lambda_min());
  report.max_A2 = profile_abs_A2(n, profile.lambda_max());
  report.perdomo_margin = n - report.sigma[1];
  for (int k = 2; k <= k_max; ++k) {
    report.keyeq_residual =
        std::max(report.keyeq_residual, verify_keyeq(profile, f_k(n, k)).residual);
    report.identity_residual[k] = verify_sigma_identity(profile, k, variant).sides.residual;
  }
  report.simons_pointwise_max = simons_pointwise(profile);
  report.simons_integrated_residual = simons_integrated(profile).residual;
  report.measure_total = measure_total(profile);
  return report;
}

}  // namespace clifford_lab
