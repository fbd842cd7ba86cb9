#include "clifford_lab/otsuki.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

// lambda0 within this relative distance of 1/sqrt(n-1) is the equilibrium.
constexpr double kEquilibriumTolerance = 1e-13;

void require_n(int n, const char* op) {
  if (n < 3) throw DomainError(std::string(op) + ": requires n >= 3");
}

void require_positive_lambda(double lambda, const char* op) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(std::string(op) + ": lambda must be positive and finite");
  }
}

bool is_equilibrium(int n, double lambda0) {
  const double lc = clifford_lambda(n);
  return std::abs(lambda0 - lc) <= kEquilibriumTolerance * lc;
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Level set of the first integral at lambda_dot = 0, written in
// u = lambda^(2/n): E = n^2 G(u) with G(u) = u^(n-1) + 1/u, and
// G(u0) - G(u) = (u0 - u) * level_quotient(u0, u).
double level_quotient(int n, double u0, double u) {
  double sum = 0.0;
  for (int j = 0; j <= n - 2; ++j) sum += ipow(u0, j) * ipow(u, n - 2 - j);
  return sum - 1.0 / (u0 * u);
}

// Complete homogeneous polynomial sum_{i=0}^{m} a^i b^(m-i); zero for m < 0.
double complete_homogeneous(int m, double a, double b) {
  double sum = 0.0;
  for (int i = 0; i <= m; ++i) sum += ipow(a, i) * ipow(b, m - i);
  return sum;
}

// level_quotient(u0, u) = (u - u1) * level_remainder(u0, u1, u) when u1 is the
// second turning point; every term is positive.
double level_remainder(int n, double u0, double u1, double u) {
  double sum = 0.0;
  for (int j = 0; j <= n - 3; ++j) sum += ipow(u0, j) * complete_homogeneous(n - 3 - j, u, u1);
  return sum + 1.0 / (u0 * u * u1);
}

// The turning point other than u0, bisected until the bracket cannot shrink.
double other_turning_u(int n, double u0) {
  const double uc = std::pow(static_cast<double>(n - 1), -1.0 / n);
  double lo = uc;
  double hi = uc;
  if (u0 > uc) {
    while (level_quotient(n, u0, lo) >= 0.0) lo *= 0.5;
  } else {
    while (level_quotient(n, u0, hi) <= 0.0) hi *= 2.0;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (level_quotient(n, u0, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double max_relative_drift(int n, std::span<const ProfileSample> samples, double energy) {
  double drift = 0.0;
  for (const auto& s : samples) {
    drift = std::max(drift,
                     std::abs(first_integral(n, s.lambda, s.lambda_dot) - energy) / energy);
  }
  return drift;
}

std::size_t even_step_count(double period, double step) {
  auto count = static_cast<std::size_t>(std::ceil(period / step));
  if (count < 2) count = 2;
  if (count % 2 != 0) ++count;
  return count;
}

}  // namespace

double clifford_lambda(int n) {
  require_n(n, "clifford_lambda");
  return 1.0 / std::sqrt(static_cast<double>(n - 1));
}

double ode_rhs(int n, double lambda, double lambda_dot) {
  require_n(n, "ode_rhs");
  require_positive_lambda(lambda, "ode_rhs");
  return (n + 1.0) / (n * lambda) * lambda_dot * lambda_dot -
         n * lambda * ((n - 1.0) * lambda * lambda - 1.0);
}

double first_integral(int n, double lambda, double lambda_dot) {
  require_n(n, "first_integral");
  require_positive_lambda(lambda, "first_integral");
  const double dn = n;
  return lambda_dot * lambda_dot * std::pow(lambda, -2.0 * (dn + 1.0) / dn) +
         dn * dn * (std::pow(lambda, 2.0 * (dn - 1.0) / dn) + std::pow(lambda, -2.0 / dn));
}

OtsukiState rk4_step(int n, OtsukiState y, double h) {
  auto f = [n](OtsukiState s) {
    return OtsukiState{s.lambda_dot, ode_rhs(n, s.lambda, s.lambda_dot)};
  };
  auto axpy = [](OtsukiState s, double a, OtsukiState k) {
    return OtsukiState{s.lambda + a * k.lambda, s.lambda_dot + a * k.lambda_dot};
  };
  const OtsukiState k1 = f(y);
  const OtsukiState k2 = f(axpy(y, 0.5 * h, k1));
  const OtsukiState k3 = f(axpy(y, 0.5 * h, k2));
  const OtsukiState k4 = f(axpy(y, h, k3));
  return {y.lambda + h / 6.0 * (k1.lambda + 2.0 * k2.lambda + 2.0 * k3.lambda + k4.lambda),
          y.lambda_dot +
              h / 6.0 *
                  (k1.lambda_dot + 2.0 * k2.lambda_dot + 2.0 * k3.lambda_dot + k4.lambda_dot)};
}

TurningPoints turning_points(int n, double lambda0) {
  require_n(n, "turning_points");
  require_positive_lambda(lambda0, "turning_points");
  if (is_equilibrium(n, lambda0)) return {lambda0, lambda0, true};

  const double u0 = std::pow(lambda0, 2.0 / n);
  const double other = std::pow(other_turning_u(n, u0), 0.5 * n);
  return {std::min(lambda0, other), std::max(lambda0, other), false};
}

double linearized_period(int n) {
  require_n(n, "linearized_period");
  return 2.0 * std::numbers::pi / std::sqrt(2.0 * n);
}

OtsukiProfile::OtsukiProfile(int n, std::vector<ProfileSample> samples, double period,
                             double energy, double lambda_min, double lambda_max,
                             double max_drift, bool degenerate)
    : n_(n),
      samples_(std::move(samples)),
      period_(period),
      energy_(energy),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max),
      max_drift_(max_drift),
      degenerate_(degenerate) {
  if (samples_.size() < 3 || (samples_.size() - 1) % 2 != 0) {
    throw DomainError("OtsukiProfile: needs an even number (>= 2) of grid intervals");
  }
  if (!(period_ > 0.0)) throw DomainError("OtsukiProfile: period must be positive");
}

OtsukiProfile integrate_profile(int n, double lambda0, const IntegratorOptions& options) {
  require_n(n, "integrate_profile");
  require_positive_lambda(lambda0, "integrate_profile");
  const double h = options.step;
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw DomainError("integrate_profile: step must be positive");
  }
  const double energy = first_integral(n, lambda0, 0.0);

  if (is_equilibrium(n, lambda0)) {
    const double period = linearized_period(n);
    const std::size_t count = even_step_count(period, h);
    std::vector<ProfileSample> samples(count + 1);
    for (std::size_t j = 0; j <= count; ++j) {
      samples[j] = {period * static_cast<double>(j) / static_cast<double>(count), lambda0, 0.0};
    }
    return OtsukiProfile(n, std::move(samples), period, energy, lambda0, lambda0, 0.0, true);
  }

  const TurningPoints tp = turning_points(n, lambda0);
  const double floor = std::max(options.min_lambda, options.min_lambda_fraction * clifford_lambda(n));
  if (tp.lambda_min < floor) {
    std::ostringstream msg;
    msg << "integrate_profile: amplitude guard: lambda_min " << tp.lambda_min
        << " is below " << floor << " (n = " << n << ", lambda0 = " << lambda0 << ")";
    throw DomainError(msg.str());
  }

  // Pass 1: locate the period as the second zero of lambda_dot.
  const auto max_steps =
      static_cast<std::size_t>(std::ceil(10.0 * linearized_period(n) / h)) + 100;
  OtsukiState state{lambda0, 0.0};
  double t = 0.0;
  int crossings = 0;
  double period = 0.0;
  for (std::size_t i = 0; i < max_steps && period == 0.0; ++i) {
    const OtsukiState next = rk4_step(n, state, h);
    if (!(next.lambda > 0.0) || !std::isfinite(next.lambda_dot)) {
      throw IntegrationError("integrate_profile: solution left lambda > 0; reduce the step");
    }
    const bool crossed = (state.lambda_dot < 0.0 && next.lambda_dot >= 0.0) ||
                         (state.lambda_dot > 0.0 && next.lambda_dot <= 0.0);
    if (crossed && ++crossings == 2) {
      double tau = h * state.lambda_dot / (state.lambda_dot - next.lambda_dot);
      for (int it = 0; it < 50; ++it) {
        const OtsukiState s = rk4_step(n, state, tau);
        const double delta = s.lambda_dot / ode_rhs(n, s.lambda, s.lambda_dot);
        tau -= delta;
        if (std::abs(delta) <= 1e-16 * h) break;
      }
      period = t + tau;
    }
    state = next;
    t += h;
  }
  if (period == 0.0) {
    throw IntegrationError("integrate_profile: no period found within the step budget");
  }

  // Pass 2: one period on a uniform grid with an even number of intervals.
  const std::size_t count = even_step_count(period, h);
  const double grid_step = period / static_cast<double>(count);
  std::vector<ProfileSample> samples(count + 1);
  state = {lambda0, 0.0};
  samples[0] = {0.0, lambda0, 0.0};
  for (std::size_t j = 1; j <= count; ++j) {
    state = rk4_step(n, state, grid_step);
    samples[j] = {grid_step * static_cast<double>(j), state.lambda, state.lambda_dot};
  }
  samples[count].t = period;

  const double drift = max_relative_drift(n, samples, energy);
  if (!(drift <= options.drift_bound)) {
    std::ostringstream msg;
    msg << "integrate_profile: first-integral drift " << drift << " exceeds bound "
        << options.drift_bound << "; reduce the step";
    throw IntegrationError(msg.str());
  }
  const double gap = std::max(std::abs(state.lambda - lambda0), std::abs(state.lambda_dot));
  if (!(gap <= options.closure_tolerance)) {
    std::ostringstream msg;
    msg << "integrate_profile: orbit does not close (gap " << gap << ")";
    throw IntegrationError(msg.str());
  }
  return OtsukiProfile(n, std::move(samples), period, energy, tp.lambda_min, tp.lambda_max,
                       drift, false);
}

double period_quadrature(int n, double lambda0) {
  require_n(n, "period_quadrature");
  require_positive_lambda(lambda0, "period_quadrature");
  if (is_equilibrium(n, lambda0)) {
    throw DomainError("period_quadrature: lambda0 is the equilibrium");
  }
  const double u0 = std::pow(lambda0, 2.0 / n);
  const double u1 = other_turning_u(n, u0);
  const double span = u0 - u1;

  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double u = u1 + span * s * s;
    return 1.0 / (u * std::sqrt(u) * std::sqrt(level_remainder(n, u0, u1, u)));
  };
  // Integrand is pi-periodic and even in theta: trapezoid over [0, pi).
  auto trapezoid = [&](int nodes) {
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) sum += integrand(std::numbers::pi * j / nodes);
    return std::numbers::pi / nodes * sum;
  };
  double previous = trapezoid(16);
  for (int nodes = 32; nodes <= (1 << 18); nodes *= 2) {
    const double current = trapezoid(nodes);
    if (std::abs(current - previous) <= 1e-15 * current) return current;
    previous = current;
  }
  return previous;
}

double profile_abs_A2(int n, double lambda) { return n * (n - 1.0) * lambda * lambda; }

double grad_A_norm_sq(int n, double lambda_dot, GradientCoefficient coefficient) {
  const double c = coefficient == GradientCoefficient::kComponentwise ? (n - 1.0) * (n + 2.0)
                                                                      : n * (n - 1.0);
  return c * lambda_dot * lambda_dot;
}

}  // namespace clifford_lab
