#pragma once

#include <utility>

#include "clifford_lab/spectra.hpp"

namespace clifford_lab {

/// The Clifford hypersurface S^m(sqrt(m/n)) x S^(n-m)(sqrt((n-m)/n)) in
/// S^(n+1).
struct CliffordModel {
  int n = 2;
  int m = 1;
  std::pair<double, double> radii;
  PrincipalSpectrum spectrum;
};

CliffordModel clifford_model(int n, int m);

/// {(sqrt((n-m)/m), m), (-sqrt(m/(n-m)), n-m)}. Throws DomainError unless
/// n >= 2 and 1 <= m <= n-1.
PrincipalSpectrum clifford_spectrum(int n, int m);

/// sigma_k of the model. |A|^2 is summed from the rational squares
/// (n-m)/m and m/(n-m) in integer arithmetic, so the result is n^k exactly
/// while n^k < 2^53.
double clifford_sigma(int n, int m, int k);

/// Gamma((d+1)/2) for integer d >= 0, via Gamma(x+1) = x Gamma(x) from
/// Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double half_integer_gamma(int twice_x);

/// Area of the round d-sphere of radius r.
double sphere_volume(int d, double r);

double clifford_volume(int n, int m);

/// chi(S^d) = 1 + (-1)^d.
int sphere_euler_characteristic(int d);

struct GbcCheck {
  double lhs = 0.0;  // integral of the GBC integrand
  double rhs = 0.0;  // 16 pi^2 chi
};

/// Integrated Gauss-Bonnet-Chern on the n = 4 Clifford model with m in
/// {1, 2, 3}.
GbcCheck clifford_gbc_check(int m);

/// Same check on the totally geodesic unit S^4.
GbcCheck geodesic_sphere_gbc_check();

}  // namespace clifford_lab
