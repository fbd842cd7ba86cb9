#pragma once

#include <span>

namespace clifford_lab {

/// A closed surface in S^3: area and genus.
struct SurfaceData {
  double area = 0.0;
  int genus = 0;
};

/// sigma = 2 - 8 pi (1 - g) / |M|, from Gauss-Bonnet and K = 1 - |A|^2/2.
double sigma_from_genus(const SurfaceData& surface);

/// (1 - K)^k - 1 + kK, the i >= 2 tail of the binomial expansion of
/// (1 - K)^k. Nonnegative for K <= 1; for odd k it goes negative past K = 1.
double genus_poly_bound(double K, int k);

/// 2 + (g - 1)/(g + 1), from the area bound |M| <= 8 pi (g + 1). Requires
/// genus >= 2.
double choi_wang_lower(int genus);

struct Dim2Certificate {
  /// 2^k (1 + 4 pi k (g - 1) / |M|)
  double genus_bound = 0.0;
  /// genus_bound + 2^k * mean of genus_poly_bound over the samples
  double sample_estimate = 0.0;
  double min_poly = 0.0;
  /// g >= 1; for g = 0 no lower bound is claimed
  bool applies = false;
  /// applies, every sample poly value >= 0, and genus_bound >= 2^k
  bool certified = false;
};

/// Throws DomainError for k < 2, invalid surface data, an empty sample list,
/// or any K sample > 1 (the Gauss equation forces K <= 1).
Dim2Certificate sigma_k_dim2(const SurfaceData& surface, std::span<const double> K_samples, int k);

}  // namespace clifford_lab
