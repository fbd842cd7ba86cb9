#include "clifford_lab/lowdim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

void check_surface(const SurfaceData& s) {
  if (!(s.area > 0.0) || !std::isfinite(s.area)) {
    throw DomainError("SurfaceData: area must be positive");
  }
  if (s.genus < 0) throw DomainError("SurfaceData: genus must be nonnegative");
}

}  // namespace

double sigma_from_genus(const SurfaceData& surface) {
  check_surface(surface);
  return 2.0 - 8.0 * std::numbers::pi * (1.0 - surface.genus) / surface.area;
}

double genus_poly_bound(double K, int k) {
  if (k < 2) throw DomainError("genus_poly_bound: k must be >= 2");
  return std::pow(1.0 - K, k) - 1.0 + k * K;
}

double choi_wang_lower(int genus) {
  if (genus < 2) throw DomainError("choi_wang_lower: requires genus >= 2");
  return 2.0 + (genus - 1.0) / (genus + 1.0);
}

Dim2Certificate sigma_k_dim2(const SurfaceData& surface, std::span<const double> K_samples,
                             int k) {
  check_surface(surface);
  if (k < 2) throw DomainError("sigma_k_dim2: k must be >= 2");
  if (K_samples.empty()) throw DomainError("sigma_k_dim2: no curvature samples");

  double min_poly = std::numeric_limits<double>::infinity();
  double mean_poly = 0.0;
  for (double K : K_samples) {
    if (!(K <= 1.0)) {
      throw DomainError("sigma_k_dim2: Gauss equation violated, K = " + std::to_string(K) +
                        " > 1");
    }
    const double p = genus_poly_bound(K, k);
    min_poly = std::min(min_poly, p);
    mean_poly += p;
  }
  mean_poly /= static_cast<double>(K_samples.size());

  const double two_k = std::pow(2.0, k);
  Dim2Certificate cert;
  cert.genus_bound =
      two_k * (1.0 + 4.0 * std::numbers::pi * k * (surface.genus - 1.0) / surface.area);
  cert.sample_estimate = cert.genus_bound + two_k * mean_poly;
  cert.min_poly = min_poly;
  cert.applies = surface.genus >= 1;
  cert.certified = cert.applies && min_poly >= 0.0 && cert.genus_bound >= two_k;
  return cert;
}

}  // namespace clifford_lab
