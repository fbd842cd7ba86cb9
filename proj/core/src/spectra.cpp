#include "clifford_lab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "clifford_lab/errors.hpp"

namespace clifford_lab {
namespace {

void require_minimal_dim4(const PrincipalSpectrum& spec, const char* op) {
  if (spec.dimension() != 4) {
    throw DomainError(std::string(op) + ": requires n = 4, got n = " +
                      std::to_string(spec.dimension()));
  }
  if (!spec.is_minimal()) {
    throw DomainError(std::string(op) + ": spectrum is not minimal (trace " +
                      std::to_string(spec.trace()) + ")");
  }
}

// |a - b| / max(|a|, |b|), with 0/0 read as agreement.
double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

PrincipalSpectrum::PrincipalSpectrum(std::vector<CurvatureEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("PrincipalSpectrum: no entries");
  for (const auto& e : entries_) {
    if (e.multiplicity < 1) {
      throw DomainError("PrincipalSpectrum: multiplicity must be >= 1");
    }
    if (!std::isfinite(e.value)) {
      throw DomainError("PrincipalSpectrum: non-finite curvature");
    }
    dimension_ += e.multiplicity;
  }
}

PrincipalSpectrum PrincipalSpectrum::zero(int n) {
  if (n < 1) throw DomainError("PrincipalSpectrum::zero: n must be >= 1");
  return PrincipalSpectrum({{0.0, n}});
}

double PrincipalSpectrum::trace() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.multiplicity * e.value;
  return t;
}

bool PrincipalSpectrum::is_minimal() const {
  return std::abs(trace()) <= kMinimalTolerance;
}

std::vector<double> PrincipalSpectrum::expanded() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dimension_));
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

PrincipalSpectrum PrincipalSpectrum::scaled(double factor) const {
  auto copy = entries_;
  for (auto& e : copy) e.value *= factor;
  return PrincipalSpectrum(std::move(copy));
}

double power_sum(const PrincipalSpectrum& spec, int p) {
  if (p < 1) throw DomainError("power_sum: p must be >= 1");
  double sum = 0.0;
  for (const auto& e : spec.entries()) {
    double term = 1.0;
    for (int i = 0; i < p; ++i) term *= e.value;
    sum += e.multiplicity * term;
  }
  return sum;
}

CurvatureInvariants curvature_invariants_dim4(const PrincipalSpectrum& spec) {
  require_minimal_dim4(spec, "curvature_invariants_dim4");
  const double a2 = power_sum(spec, 2);
  const double p4 = power_sum(spec, 4);

  CurvatureInvariants inv;
  inv.scalar = 12.0 - a2;
  inv.ricci_sq = 36.0 - 6.0 * a2 + p4;
  // Nonnegative for every traceless 4-vector; zero exactly on the (1, 3)
  // shape, where rounding can leave a few ulps of either sign.
  inv.weyl_sq = std::max(0.0, 7.0 / 3.0 * a2 * a2 - 4.0 * p4);
  inv.tracefree_ricci_sq = std::max(0.0, p4 - 0.25 * a2 * a2);
  inv.gbc_integrand = 1.5 * a2 * a2 - 3.0 * p4 - 2.0 * a2 + 12.0;
  return inv;
}

GbcForms gbc_integrand(const PrincipalSpectrum& spec) {
  const CurvatureInvariants inv = curvature_invariants_dim4(spec);
  GbcForms forms;
  forms.principal = inv.gbc_integrand;
  forms.chern = inv.scalar * inv.scalar / 3.0 - inv.ricci_sq + 0.5 * inv.weyl_sq;
  return forms;
}

CurvatureInvariants curvature_tensor_oracle(const PrincipalSpectrum& spec) {
  const int n = spec.dimension();
  if (n < 3) throw DomainError("curvature_tensor_oracle: requires n >= 3");
  if (!spec.is_minimal()) {
    throw DomainError("curvature_tensor_oracle: spectrum is not minimal");
  }

  const auto nn = static_cast<std::size_t>(n);
  const std::vector<double> lam = spec.expanded();
  std::vector<double> h(nn * nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i) h[i * nn + i] = lam[i];
  auto H = [&](std::size_t i, std::size_t j) { return h[i * nn + j]; };
  auto delta = [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; };

  std::vector<double> riem(nn * nn * nn * nn);
  auto R = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> double& {
    return riem[((i * nn + j) * nn + k) * nn + l];
  };
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t k = 0; k < nn; ++k)
        for (std::size_t l = 0; l < nn; ++l)
          R(i, j, k, l) = delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k) +
                          H(i, k) * H(j, l) - H(i, l) * H(j, k);

  std::vector<double> ric(nn * nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t k = 0; k < nn; ++k) ric[i * nn + j] += R(i, k, j, k);

  double s = 0.0;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) s += R(i, j, i, j);

  double ric_sq = 0.0;
  for (double r : ric) ric_sq += r * r;

  CurvatureInvariants inv;
  inv.scalar = s;
  inv.ricci_sq = ric_sq;
  inv.tracefree_ricci_sq = ric_sq - s * s / n;
  inv.weyl_sq = std::numeric_limits<double>::quiet_NaN();
  inv.gbc_integrand = std::numeric_limits<double>::quiet_NaN();

  if (n == 4) {
    auto Ric = [&](std::size_t i, std::size_t j) { return ric[i * nn + j]; };
    double w_sq = 0.0;
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        for (std::size_t k = 0; k < nn; ++k)
          for (std::size_t l = 0; l < nn; ++l) {
            const double w =
                R(i, j, k, l) -
                0.5 * (Ric(i, k) * delta(j, l) - Ric(i, l) * delta(j, k) +
                       Ric(j, l) * delta(i, k) - Ric(j, k) * delta(i, l)) +
                s / 6.0 * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k));
            w_sq += w * w;
          }
    inv.weyl_sq = w_sq;
    inv.gbc_integrand = s * s / 3.0 - ric_sq + 0.5 * w_sq;
  }
  return inv;
}

SpectrumClass classify(const PrincipalSpectrum& spec) {
  require_minimal_dim4(spec, "classify");
  const double a2 = power_sum(spec, 2);
  const double p4 = power_sum(spec, 4);
  const double a4 = a2 * a2;

  SpectrumClass c;
  c.lcf_residual = relative_gap(a4, 12.0 / 7.0 * p4);
  c.einstein_residual = relative_gap(4.0 * p4, a4);
  c.lcf = c.lcf_residual <= kClassifyTolerance;
  c.einstein = c.einstein_residual <= kClassifyTolerance;
  return c;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

PrincipalSpectrum random_traceless_spectrum(int n, std::mt19937_64& rng) {
  if (n < 2) throw DomainError("random_traceless_spectrum: n must be >= 2");
  std::vector<CurvatureEntry> entries;
  entries.reserve(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double v = -10.0 + 20.0 * uniform_unit(rng);
    entries.push_back({v, 1});
    sum += v;
  }
  entries.push_back({-sum, 1});
  return PrincipalSpectrum(std::move(entries));
}

}  // namespace clifford_lab
