#pragma once

#include <span>
#include <vector>

namespace clifford_lab {

/// Phase-space point of the profile ODE: the multiplicity-(n-1) principal
/// curvature and its derivative along the multiplicity-one direction.
struct OtsukiState {
  double lambda = 0.0;
  double lambda_dot = 0.0;
};

struct ProfileSample {
  double t = 0.0;
  double lambda = 0.0;
  double lambda_dot = 0.0;
};

/// 1/sqrt(n-1): the equilibrium, where the hypersurface is the Clifford
/// product S^1 x S^(n-1).
double clifford_lambda(int n);

/// lambda'' = (n+1)/(n lambda) lambda'^2 - n lambda ((n-1) lambda^2 - 1).
double ode_rhs(int n, double lambda, double lambda_dot);

/// E = lambda'^2 lambda^(-2(n+1)/n) + n^2 (lambda^(2(n-1)/n) + lambda^(-2/n)),
/// constant along solutions of ode_rhs.
double first_integral(int n, double lambda, double lambda_dot);

/// One classical fourth-order Runge-Kutta step of size h (h may be negative).
OtsukiState rk4_step(int n, OtsukiState state, double h);

struct TurningPoints {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool degenerate = false;  // lambda0 is the equilibrium
};

/// Both positive roots of E(lambda, 0) = E(lambda0, 0). lambda0 is one of
/// them exactly; the other is bisected to machine precision.
TurningPoints turning_points(int n, double lambda0);

struct IntegratorOptions {
  double step = 1e-3;
  /// Largest admissible max |E(t) - E(0)| / E(0) over the period.
  double drift_bound = 1e-9;
  /// Largest admissible |(lambda, lambda_dot)(T) - (lambda, lambda_dot)(0)|.
  double closure_tolerance = 1e-10;
  /// Profiles whose lambda_min falls below
  /// max(min_lambda, min_lambda_fraction / sqrt(n-1)) are rejected.
  double min_lambda = 0.05;
  double min_lambda_fraction = 0.3;
};

/// One sampled period of a solution started at (lambda0, 0).
///
/// Samples lie on a uniform grid t_j = j * period / N, j = 0..N with N even;
/// sample N is the integrated return to the start state.
class OtsukiProfile {
 public:
  OtsukiProfile(int n, std::vector<ProfileSample> samples, double period, double energy,
                double lambda_min, double lambda_max, double max_drift, bool degenerate);

  int n() const { return n_; }
  std::span<const ProfileSample> samples() const { return samples_; }
  double period() const { return period_; }
  /// Grid spacing period / N.
  double step() const { return period_ / static_cast<double>(samples_.size() - 1); }
  double energy() const { return energy_; }
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }
  double max_drift() const { return max_drift_; }
  /// Constant (equilibrium) profile; period is the linearized period.
  bool degenerate() const { return degenerate_; }
  double lambda_ref() const { return samples_.front().lambda; }

 private:
  int n_;
  std::vector<ProfileSample> samples_;
  double period_;
  double energy_;
  double lambda_min_;
  double lambda_max_;
  double max_drift_;
  bool degenerate_;
};

/// Integrates one full oscillation from (lambda0, 0).
///
/// The period is the time of the second zero of lambda_dot, refined by Newton
/// iteration on a partial RK4 step. The stored grid is then re-integrated
/// with step period / N. Throws DomainError for n < 3, lambda0 <= 0, a
/// nonpositive step or an orbit past the amplitude guard, and
/// IntegrationError when drift or closure exceed their bounds.
OtsukiProfile integrate_profile(int n, double lambda0, const IntegratorOptions& options = {});

/// Period 2 pi / sqrt(2n) of the linearization at the equilibrium.
double linearized_period(int n);

/// Period from the first integral, T = 2 * integral of d lambda / |lambda'|.
///
/// In u = lambda^(2/n) the level-set difference factors as
/// n^2 (u0 - u)(u - u1) R(u) with R > 0, and u = u1 + (u0 - u1) sin^2(theta)
/// turns the integral into one of an analytic periodic function of theta,
/// which the trapezoid rule resolves to machine precision.
double period_quadrature(int n, double lambda0);

/// |A|^2 = n (n-1) lambda^2 on (n-1, 1) profiles.
double profile_abs_A2(int n, double lambda);

enum class GradientCoefficient {
  kComponentwise,  // (n-1)(n+2)
  kPrinted,        // n(n-1)
};

/// |grad A|^2 = c * lambda_dot^2.
double grad_A_norm_sq(int n, double lambda_dot,
                      GradientCoefficient coefficient = GradientCoefficient::kComponentwise);

}  // namespace clifford_lab
