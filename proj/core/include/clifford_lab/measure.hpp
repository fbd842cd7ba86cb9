#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clifford_lab/otsuki.hpp"
#include "clifford_lab/pinching.hpp"

namespace clifford_lab {

/// Volume factor (lambda / lambda_ref)^(-(n-1)/n) of the umbilic leaves.
double leaf_density(int n, double lambda, double lambda_ref);

using SampleFunction = std::function<double(double lambda, double lambda_dot)>;

/// Composite Simpson of g * leaf_density over one period of the profile's
/// grid. The last grid point is identified with the first. For a
/// degenerate profile the density is 1 and the result is period * g.
double period_integral(const OtsukiProfile& profile, const SampleFunction& g);

/// period_integral(1); proportional to the hypersurface volume only up to
/// the leaf-volume constant fixed by lambda_ref.
double measure_total(const OtsukiProfile& profile);

/// Normalized k-th moment of |A|^2 over one period. Throws for k < 1.
double sigma_k(const OtsukiProfile& profile, int k);

/// A function of lambda with its first two derivatives.
class RadialFunction {
 public:
  using Fn = std::function<double(double)>;

  /// Finite-difference consistency tolerance between f' and f''.
  static constexpr double kConsistencyTolerance = 1e-6;

  /// Validates f'' against a centered difference of f' on lambda in
  /// [0.2, 2]; throws DomainError on mismatch.
  static RadialFunction checked(std::string label, Fn f, Fn df, Fn d2f);

  /// Skips validation; is_consistent() reports false.
  static RadialFunction unchecked(std::string label, Fn f, Fn df, Fn d2f);

  const std::string& label() const { return label_; }
  double value(double lambda) const { return f_(lambda); }
  double first(double lambda) const { return df_(lambda); }
  double second(double lambda) const { return d2f_(lambda); }
  bool is_consistent() const { return consistent_; }

  /// Largest |FD(f') - f''| / (|f''| + |f'|/lambda + 1) on a uniform grid.
  double derivative_mismatch(double lo = 0.2, double hi = 2.0, int points = 64) const;

 private:
  RadialFunction(std::string label, Fn f, Fn df, Fn d2f, bool consistent);

  std::string label_;
  Fn f_;
  Fn df_;
  Fn d2f_;
  bool consistent_;
};

/// f = n^(k-1) (ln lambda + sum_{i=1}^{k-1} (n-1)^i lambda^(2i) / (2i)).
///
/// kCorrected differentiates f' for f''; kPrinted uses the coefficient
/// (n-1)^i / (2i-1), which disagrees with f' for k >= 3 and is returned
/// unchecked. Throws DomainError for k < 2.
RadialFunction f_k(int n, int k, CoefficientVariant second_derivative = CoefficientVariant::kCorrected);

RadialFunction lambda_squared();
RadialFunction log_lambda();

/// Delta f = (f'' + 2/(n lambda) f') lambda_dot^2 - n lambda ((n-1) lambda^2 - 1) f'.
double laplacian_radial(int n, const RadialFunction& f, double lambda, double lambda_dot);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs - rhs| / (|lhs| + |rhs| + 1)
};

double normalized_residual(double lhs, double rhs);

/// Integral of n lambda ((n-1) lambda^2 - 1) f' against that of
/// (f'' + 2 f'/(n lambda)) lambda_dot^2, for any f.
IdentitySides keyeq_sides(const OtsukiProfile& profile, const RadialFunction& f);

/// keyeq_sides restricted to consistent functions; throws DomainError for an
/// unchecked RadialFunction.
IdentitySides verify_keyeq(const OtsukiProfile& profile, const RadialFunction& f);

/// S(lambda) = sum_{i=1}^{k-1} (n-1)^i c_i lambda^(2(i-1)) - (n-2)/(n lambda^2).
double sign_function(int n, int k, double lambda, CoefficientVariant variant);

struct SigmaIdentity {
  IdentitySides sides;  // integral of |A|^(2k) - n^k vs n^(k-1) S lambda_dot^2
  double s_min = 0.0;   // extremes of S over the samples
  double s_max = 0.0;
};

SigmaIdentity verify_sigma_identity(const OtsukiProfile& profile, int k,
                                    CoefficientVariant variant = CoefficientVariant::kCorrected);

/// n - sigma_1.
double perdomo_margin(const OtsukiProfile& profile);

/// Signed (1/2) Delta|A|^2 - |grad A|^2 - (n - |A|^2)|A|^2 at every sample.
std::vector<double> simons_residuals(const OtsukiProfile& profile,
                                     GradientCoefficient coefficient = GradientCoefficient::kComponentwise);

double simons_pointwise(const OtsukiProfile& profile,
                        GradientCoefficient coefficient = GradientCoefficient::kComponentwise);

/// integral |A|^4 against integral |grad A|^2 + n integral |A|^2.
IdentitySides simons_integrated(const OtsukiProfile& profile,
                                GradientCoefficient coefficient = GradientCoefficient::kComponentwise);

/// n = 4 only: period integral of (|A|^4/4 + 2|A|^2 - 12) * density.
double euler_period_integral(const OtsukiProfile& profile);

struct SigmaReport {
  int n = 3;
  int k_max = 2;
  std::map<int, double> sigma;  // k = 1..k_max
  double min_A2 = 0.0;
  double max_A2 = 0.0;
  double perdomo_margin = 0.0;
  double keyeq_residual = 0.0;              // max over f_k, k = 2..k_max
  std::map<int, double> identity_residual;  // k = 2..k_max
  double simons_pointwise_max = 0.0;
  double simons_integrated_residual = 0.0;
  double measure_total = 0.0;
};

/// k_max >= 2.
SigmaReport make_sigma_report(const OtsukiProfile& profile, int k_max,
                              CoefficientVariant variant = CoefficientVariant::kCorrected);

}  // namespace clifford_lab
