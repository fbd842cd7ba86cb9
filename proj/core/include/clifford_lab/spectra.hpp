#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace clifford_lab {

/// One distinct principal curvature and how many times it occurs.
struct CurvatureEntry {
  double value = 0.0;
  int multiplicity = 1;

  friend bool operator==(const CurvatureEntry&, const CurvatureEntry&) = default;
};

/// Principal curvatures at a point, stored as (value, multiplicity) pairs.
///
/// The dimension n is the sum of the multiplicities. Entries are kept in the
/// order given; nothing is merged or sorted, so a caller can express the
/// multiplicity structure (1, n-1), (m, n-m), ... exactly.
class PrincipalSpectrum {
 public:
  /// Absolute tolerance on the trace for a spectrum to count as minimal.
  static constexpr double kMinimalTolerance = 1e-12;

  /// Throws DomainError on an empty list or a multiplicity < 1.
  explicit PrincipalSpectrum(std::vector<CurvatureEntry> entries);

  /// Totally geodesic point: a single zero curvature of multiplicity n.
  static PrincipalSpectrum zero(int n);

  std::span<const CurvatureEntry> entries() const { return entries_; }
  int dimension() const { return dimension_; }

  /// Sum of m_i * lambda_i.
  double trace() const;
  bool is_minimal() const;

  /// Length-n list with every curvature repeated by its multiplicity.
  std::vector<double> expanded() const;

  PrincipalSpectrum scaled(double factor) const;
  PrincipalSpectrum negated() const { return scaled(-1.0); }

  friend bool operator==(const PrincipalSpectrum&, const PrincipalSpectrum&) = default;

 private:
  std::vector<CurvatureEntry> entries_;
  int dimension_ = 0;
};

/// Curvature quantities of a minimal hypersurface point in the unit sphere.
///
/// Fields are meaningful for n = 4. The tensor oracle also fills scalar,
/// ricci_sq and tracefree_ricci_sq for other n and leaves weyl_sq and
/// gbc_integrand as NaN there.
struct CurvatureInvariants {
  double scalar = 0.0;              // s
  double ricci_sq = 0.0;            // |Ric|^2
  double weyl_sq = 0.0;             // |W|^2
  double tracefree_ricci_sq = 0.0;  // |Ric - (s/n) g|^2
  double gbc_integrand = 0.0;       // Gauss-Bonnet-Chern integrand
};

/// The Gauss-Bonnet-Chern integrand of a minimal 4-dimensional point,
/// evaluated once from principal curvatures and once from s, Ric, W.
struct GbcForms {
  double principal = 0.0;  // (3/2)|A|^4 - 3 sum lambda^4 - 2|A|^2 + 12
  double chern = 0.0;      // s^2/3 - |Ric|^2 + |W|^2/2
};

struct SpectrumClass {
  bool lcf = false;       // |W| = 0
  bool einstein = false;  // tracefree Ricci = 0
  double lcf_residual = 0.0;
  double einstein_residual = 0.0;
};

/// Sum of m_i * lambda_i^p. Throws DomainError for p < 1.
double power_sum(const PrincipalSpectrum& spec, int p);

/// Closed-form invariants for n = 4 minimal spectra.
CurvatureInvariants curvature_invariants_dim4(const PrincipalSpectrum& spec);

GbcForms gbc_integrand(const PrincipalSpectrum& spec);

/// Builds R_ijkl = d_ik d_jl - d_il d_jk + h_ik h_jl - h_il h_jk with a
/// diagonal h and contracts it directly. Requires n >= 3 and a minimal
/// spectrum. The Weyl part is only formed for n = 4.
CurvatureInvariants curvature_tensor_oracle(const PrincipalSpectrum& spec);

/// Relative tolerance used by classify.
inline constexpr double kClassifyTolerance = 1e-10;

SpectrumClass classify(const PrincipalSpectrum& spec);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
double uniform_unit(std::mt19937_64& rng);

/// n-1 values uniform in [-10, 10], the last one minus their sum; all
/// multiplicities 1.
PrincipalSpectrum random_traceless_spectrum(int n, std::mt19937_64& rng);

}  // namespace clifford_lab
