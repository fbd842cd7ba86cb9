#pragma once

#include <string_view>
#include <vector>

namespace clifford_lab {

/// Which coefficient c_i enters the sign polynomial.
enum class CoefficientVariant {
  kCorrected,  // (2i - 1) + 2/n, obtained by differentiating f'
  kPrinted,    // 1/(2i - 1) + 2/n
};

std::string_view to_string(CoefficientVariant variant);
/// Accepts "corrected" or "printed"; throws DomainError otherwise.
CoefficientVariant parse_variant(std::string_view text);

double sign_coefficient(int n, int i, CoefficientVariant variant);

/// P(x) = sum_{i=1}^{k-1} (n-1)^i c_i x^i - (n-2)/n, with x = lambda^2.
double pinching_poly(int n, int k, double x, CoefficientVariant variant);

struct PinchingRoot {
  double root_x = 0.0;
  double bracket_lo = 0.0;  // initial bracket [0, x_hi]
  double bracket_hi = 0.0;
};

/// The unique positive root of P, bisected on [0, x_hi] where x_hi is
/// doubled from 1 until P(x_hi) > 0.
PinchingRoot pinching_root(int n, int k, CoefficientVariant variant);

/// delta_k(n) = n (n-1) x*: the min |A|^2 threshold, since |A|^2 = n(n-1)
/// lambda^2 on two-curvature profiles.
double delta_k(int n, int k, CoefficientVariant variant = CoefficientVariant::kCorrected);

struct PinchingEntry {
  int k = 2;
  double root_x = 0.0;
  double delta = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct PinchingTable {
  int n = 3;
  CoefficientVariant variant = CoefficientVariant::kCorrected;
  std::vector<PinchingEntry> entries;  // k = 2..kmax
  bool strictly_decreasing = false;
  bool all_below_n = false;
  bool roots_below_clifford = false;  // every x* < 1/(n-1)
};

PinchingTable monotonicity_table(int n, int kmax,
                                 CoefficientVariant variant = CoefficientVariant::kCorrected);

}  // namespace clifford_lab
