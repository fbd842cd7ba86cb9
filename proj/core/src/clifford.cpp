#include "clifford_lab/clifford.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

void check_model(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw DomainError("clifford model needs n >= 2 and 1 <= m <= n-1 (n = " +
                      std::to_string(n) + ", m = " + std::to_string(m) + ")");
  }
}

}  // namespace

PrincipalSpectrum clifford_spectrum(int n, int m) {
  check_model(n, m);
  const double nm = n - m;
  return PrincipalSpectrum({{std::sqrt(nm / m), m}, {-std::sqrt(m / nm), n - m}});
}

CliffordModel clifford_model(int n, int m) {
  check_model(n, m);
  return CliffordModel{
      n, m,
      {std::sqrt(static_cast<double>(m) / n), std::sqrt(static_cast<double>(n - m) / n)},
      clifford_spectrum(n, m)};
}

double clifford_sigma(int n, int m, int k) {
  check_model(n, m);
  if (k < 1) throw DomainError("clifford_sigma: k must be >= 1");
  // m * ((n-m)/m) + (n-m) * (m/(n-m)): both quotients cancel their
  // multiplicities exactly.
  const std::int64_t abs_a2 = (n - m) + m;
  double result = 1.0;
  for (int i = 0; i < k; ++i) result *= static_cast<double>(abs_a2);
  return result;
}

double half_integer_gamma(int twice_x) {
  if (twice_x < 1) throw DomainError("half_integer_gamma: argument must be positive");
  double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (int t = (twice_x % 2 == 0) ? 2 : 1; t < twice_x; t += 2) g *= 0.5 * t;
  return g;
}

double sphere_volume(int d, double r) {
  if (d < 1) throw DomainError("sphere_volume: d must be >= 1");
  if (!(r > 0.0)) throw DomainError("sphere_volume: radius must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (d + 1)) / half_integer_gamma(d + 1) *
         std::pow(r, d);
}

double clifford_volume(int n, int m) {
  const CliffordModel model = clifford_model(n, m);
  return sphere_volume(m, model.radii.first) * sphere_volume(n - m, model.radii.second);
}

int sphere_euler_characteristic(int d) { return d % 2 == 0 ? 2 : 0; }

GbcCheck clifford_gbc_check(int m) {
  if (m < 1 || m > 3) throw DomainError("clifford_gbc_check: m must be 1, 2 or 3");
  const double integrand = gbc_integrand(clifford_spectrum(4, m)).principal;
  const int chi = sphere_euler_characteristic(m) * sphere_euler_characteristic(4 - m);
  return {integrand * clifford_volume(4, m), 16.0 * std::numbers::pi * std::numbers::pi * chi};
}

GbcCheck geodesic_sphere_gbc_check() {
  const double integrand = gbc_integrand(PrincipalSpectrum::zero(4)).principal;
  return {integrand * sphere_volume(4, 1.0),
          16.0 * std::numbers::pi * std::numbers::pi * sphere_euler_characteristic(4)};
}

}  // namespace clifford_lab
