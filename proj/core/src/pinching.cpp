#include "clifford_lab/pinching.hpp"

#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

void require_nk(int n, int k, const char* op) {
  if (n < 2) throw DomainError(std::string(op) + ": requires n >= 2");
  if (k < 2) throw DomainError(std::string(op) + ": requires k >= 2");
}

}  // namespace

std::string_view to_string(CoefficientVariant variant) {
  return variant == CoefficientVariant::kCorrected ? "corrected" : "printed";
}

CoefficientVariant parse_variant(std::string_view text) {
  if (text == "corrected") return CoefficientVariant::kCorrected;
  if (text == "printed") return CoefficientVariant::kPrinted;
  throw DomainError("unknown coefficient variant '" + std::string(text) + "'");
}

double sign_coefficient(int n, int i, CoefficientVariant variant) {
  const double odd = 2.0 * i - 1.0;
  return (variant == CoefficientVariant::kCorrected ? odd : 1.0 / odd) + 2.0 / n;
}

double pinching_poly(int n, int k, double x, CoefficientVariant variant) {
  require_nk(n, k, "pinching_poly");
  if (!(x >= 0.0)) throw DomainError("pinching_poly: x must be nonnegative");
  double sum = 0.0;
  double power = 1.0;  // ((n-1) x)^i
  for (int i = 1; i <= k - 1; ++i) {
    power *= (n - 1.0) * x;
    sum += sign_coefficient(n, i, variant) * power;
  }
  return sum - (n - 2.0) / n;
}

PinchingRoot pinching_root(int n, int k, CoefficientVariant variant) {
  require_nk(n, k, "pinching_root");
  if (n < 3) throw DomainError("pinching_root: requires n >= 3");
  double hi = 1.0;
  while (pinching_poly(n, k, hi, variant) <= 0.0) hi *= 2.0;
  PinchingRoot root{0.0, 0.0, hi};
  double lo = 0.0;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pinching_poly(n, k, mid, variant) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  root.root_x = 0.5 * (lo + hi);
  return root;
}

double delta_k(int n, int k, CoefficientVariant variant) {
  return n * (n - 1.0) * pinching_root(n, k, variant).root_x;
}

PinchingTable monotonicity_table(int n, int kmax, CoefficientVariant variant) {
  if (kmax < 2) throw DomainError("monotonicity_table: kmax must be >= 2");
  PinchingTable table;
  table.n = n;
  table.variant = variant;
  table.strictly_decreasing = true;
  table.all_below_n = true;
  table.roots_below_clifford = true;
  for (int k = 2; k <= kmax; ++k) {
    const PinchingRoot r = pinching_root(n, k, variant);
    const PinchingEntry e{k, r.root_x, n * (n - 1.0) * r.root_x, r.bracket_lo, r.bracket_hi};
    if (!table.entries.empty() && !(e.delta < table.entries.back().delta)) {
      table.strictly_decreasing = false;
    }
    if (!(e.delta < n)) table.all_below_n = false;
    if (!(e.root_x < 1.0 / (n - 1.0))) table.roots_below_clifford = false;
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace clifford_lab
