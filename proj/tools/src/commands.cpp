#include "clifford_lab/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>

#include "clifford_lab/cli/suite.hpp"
#include "clifford_lab/clifford.hpp"
#include "clifford_lab/measure.hpp"
#include "clifford_lab/otsuki.hpp"
#include "clifford_lab/pinching.hpp"

namespace clifford_lab::cli {
namespace {

// Tolerances for the per-command checks; they match the acceptance bounds.
constexpr double kExactTolerance = 1e-12;
constexpr double kDriftTolerance = 1e-9;
constexpr double kPeriodTolerance = 1e-7;
constexpr double kIdentityTolerance = 1e-6;
constexpr double kPerdomoSlack = 1e-8;
constexpr double kSimonsTolerance = 1e-8;
constexpr double kGbcTolerance = 1e-10;
constexpr double kOracleTolerance = 1e-9;

double rel(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

Json spectrum_json(const PrincipalSpectrum& spec) {
  Json out = Json::array();
  for (const auto& e : spec.entries()) {
    Json j;
    j["value"] = e.value;
    j["multiplicity"] = e.multiplicity;
    out.push_back(std::move(j));
  }
  return out;
}

Json invariants_json(const CurvatureInvariants& inv) {
  Json j;
  j["scalar"] = inv.scalar;
  j["ricci_sq"] = inv.ricci_sq;
  j["weyl_sq"] = inv.weyl_sq;
  j["tracefree_ricci_sq"] = inv.tracefree_ricci_sq;
  j["gbc_integrand"] = inv.gbc_integrand;
  return j;
}

Json sigma_report_json(const SigmaReport& r) {
  Json j;
  j["n"] = r.n;
  j["k_max"] = r.k_max;
  Json sigma;
  for (const auto& [k, v] : r.sigma) sigma[std::to_string(k)] = v;
  j["sigma"] = sigma;
  j["min_A2"] = r.min_A2;
  j["max_A2"] = r.max_A2;
  j["perdomo_margin"] = r.perdomo_margin;
  j["keyeq_residual"] = r.keyeq_residual;
  Json ident;
  for (const auto& [k, v] : r.identity_residual) ident[std::to_string(k)] = v;
  j["identity_residual"] = ident;
  j["simons_pointwise_max"] = r.simons_pointwise_max;
  j["simons_integrated_residual"] = r.simons_integrated_residual;
  j["measure_total"] = r.measure_total;
  return j;
}

Json profile_summary_json(const OtsukiProfile& p, double lambda0) {
  Json j;
  j["n"] = p.n();
  j["lambda0"] = lambda0;
  j["period"] = p.period();
  j["period_quadrature"] = p.degenerate() ? linearized_period(p.n()) : period_quadrature(p.n(), lambda0);
  j["energy"] = p.energy();
  j["lambda_min"] = p.lambda_min();
  j["lambda_max"] = p.lambda_max();
  j["max_drift"] = p.max_drift();
  j["degenerate"] = p.degenerate();
  j["samples"] = p.samples().size();
  return j;
}

std::vector<std::string> row(std::initializer_list<double> values) {
  std::vector<std::string> out;
  for (double v : values) out.push_back(format_double(v));
  return out;
}

std::vector<std::string> check_row(const Check& c) {
  return {c.name, std::string(to_string(c.status)), format_double(c.value), format_double(c.tolerance)};
}

CsvTable checks_table(const std::vector<Check>& checks) {
  CsvTable t{{"name", "status", "value", "tolerance"}, {}};
  for (const auto& c : checks) t.rows.push_back(check_row(c));
  return t;
}

IntegratorOptions options_for(const RunConfig& config) {
  IntegratorOptions opts;
  opts.step = config.step;
  return opts;
}

RunResult run_clifford(const RunConfig& c) {
  RunResult r;
  const auto model = clifford_model(c.n, c.m);
  const double sigma = clifford_sigma(c.n, c.m, c.k);
  const double expected = std::pow(static_cast<double>(c.n), c.k);
  const double a2 = power_sum(model.spectrum, 2);
  Json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["k"] = c.k;
  j["radii"] = Json::array({model.radii.first, model.radii.second});
  j["spectrum"] = spectrum_json(model.spectrum);
  j["abs_A2"] = a2;
  j["sigma_k"] = sigma;
  j["volume"] = clifford_volume(c.n, c.m);
  if (c.n == 4) {
    const auto g = clifford_gbc_check(c.m);
    j["gbc_lhs"] = g.lhs;
    j["gbc_rhs"] = g.rhs;
    // chi = 0 for m = 1, 3; the error is then taken relative to 16 pi^2.
    const double err = g.rhs != 0.0 ? rel(g.lhs, g.rhs)
                                    : std::abs(g.lhs) / (16.0 * std::numbers::pi * std::numbers::pi);
    r.envelope.checks.push_back(upper_bound_check("gbc_rel_error", err, kGbcTolerance));
  }
  r.envelope.results = j;
  r.envelope.checks.insert(r.envelope.checks.begin(),
                           {upper_bound_check("sigma_k_rel_error", rel(sigma, expected), kExactTolerance),
                            upper_bound_check("trace_abs", std::abs(model.spectrum.trace()), kExactTolerance),
                            upper_bound_check("abs_A2_rel_error", rel(a2, c.n), kExactTolerance)});
  r.table = {{"n", "m", "k", "sigma_k", "abs_A2", "volume"},
             {row({double(c.n), double(c.m), double(c.k), sigma, a2, clifford_volume(c.n, c.m)})}};
  return r;
}

RunResult run_delta(const RunConfig& c) {
  RunResult r;
  const auto table = monotonicity_table(c.n, c.kmax, c.variant);
  Json j;
  j["n"] = table.n;
  j["variant"] = to_string(table.variant);
  Json entries = Json::array();
  r.table.header = {"n", "k", "variant", "root_x", "delta"};
  double step = -std::numeric_limits<double>::infinity();
  double below = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& e = table.entries[i];
    Json item;
    item["k"] = e.k;
    item["root_x"] = e.root_x;
    item["delta"] = e.delta;
    item["bracket"] = Json::array({e.bracket_lo, e.bracket_hi});
    entries.push_back(std::move(item));
    r.table.rows.push_back({std::to_string(c.n), std::to_string(e.k), std::string(to_string(c.variant)),
                            format_double(e.root_x), format_double(e.delta)});
    below = std::max(below, e.delta - c.n);
    if (i > 0) step = std::max(step, e.delta - table.entries[i - 1].delta);
  }
  j["entries"] = entries;
  j["strictly_decreasing"] = table.strictly_decreasing;
  j["all_below_n"] = table.all_below_n;
  j["roots_below_clifford"] = table.roots_below_clifford;
  r.envelope.results = j;
  const double delta2 = c.n * (c.n - 2.0) / (c.n + 2.0);
  r.envelope.checks.push_back(
      upper_bound_check("delta_2_abs_error", std::abs(table.entries.front().delta - delta2), kExactTolerance));
  if (table.entries.size() > 1) {
    Check dec = upper_bound_check("max_successive_difference", step, 0.0);
    if (!table.strictly_decreasing) dec.status = CheckStatus::kFail;
    r.envelope.checks.push_back(dec);
  }
  Check bn = upper_bound_check("max_delta_minus_n", below, 0.0);
  if (!table.all_below_n) bn.status = CheckStatus::kFail;
  r.envelope.checks.push_back(bn);
  return r;
}

RunResult run_profile(const RunConfig& c) {
  RunResult r;
  const double l0 = lambda_values(c).front();
  const auto p = integrate_profile(c.n, l0, options_for(c));
  Json j = profile_summary_json(p, l0);
  r.table.header = {"t", "lambda", "lambda_dot", "abs_A2", "energy"};
  for (const auto& s : p.samples()) {
    r.table.rows.push_back(row({s.t, s.lambda, s.lambda_dot, profile_abs_A2(c.n, s.lambda),
                                first_integral(c.n, s.lambda, s.lambda_dot)}));
  }
  r.envelope.results = j;
  r.envelope.checks.push_back(upper_bound_check("max_drift", p.max_drift(), kDriftTolerance));
  if (!p.degenerate()) {
    r.envelope.checks.push_back(upper_bound_check(
        "period_rel_error", rel(p.period(), period_quadrature(c.n, l0)), kPeriodTolerance));
  }
  return r;
}

RunResult run_verify(const RunConfig& c) {
  RunResult r;
  const double l0 = lambda_values(c).front();
  const auto p = integrate_profile(c.n, l0, options_for(c));
  const int kmax = std::max(2, c.kmax);
  const auto report = make_sigma_report(p, kmax, c.variant);
  Json j;
  j["profile"] = profile_summary_json(p, l0);
  j["variant"] = to_string(c.variant);
  j["report"] = sigma_report_json(report);
  r.envelope.results = j;
  auto& checks = r.envelope.checks;
  checks.push_back(upper_bound_check("keyeq_residual", report.keyeq_residual, kIdentityTolerance));
  double identity = 0.0;
  for (const auto& [k, v] : report.identity_residual) identity = std::max(identity, v);
  checks.push_back(upper_bound_check("sigma_identity_residual", identity, kIdentityTolerance));
  checks.push_back(lower_bound_check("perdomo_margin", report.perdomo_margin, -kPerdomoSlack));
  checks.push_back(upper_bound_check("simons_pointwise", report.simons_pointwise_max, kSimonsTolerance));
  checks.push_back(upper_bound_check("simons_integrated", report.simons_integrated_residual, kSimonsTolerance));
  r.table.header = {"k", "sigma_k", "identity_residual"};
  for (const auto& [k, v] : report.sigma) {
    const auto it = report.identity_residual.find(k);
    r.table.rows.push_back({std::to_string(k), format_double(v),
                            it == report.identity_residual.end() ? "" : format_double(it->second)});
  }
  return r;
}

struct SweepRow {
  double lambda0;
  OtsukiProfile profile;
  SigmaReport report;
  double sigma_k;
};

RunResult run_sweep(const RunConfig& c) {
  RunResult r;
  auto grid = lambda_values(c);
  std::sort(grid.begin(), grid.end());
  const auto opts = options_for(c);
  const int kmax = std::max(2, c.k);

  std::vector<std::future<SweepRow>> jobs;
  for (double l0 : grid) {
    jobs.push_back(std::async(std::launch::async, [=] {
      auto p = integrate_profile(c.n, l0, opts);
      auto report = make_sigma_report(p, kmax, c.variant);
      const double sk = report.sigma.at(c.k);
      return SweepRow{l0, std::move(p), std::move(report), sk};
    }));
  }
  std::vector<SweepRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());

  r.table.header = {"n", "lambda0", "lambda_min", "lambda_max", "minA2", "maxA2", "period",
                    "sigma1", "sigmaK", "perdomo_margin", "keyeq_residual"};
  Json list = Json::array();
  double excess = -std::numeric_limits<double>::infinity();
  double keyeq = 0.0;
  for (const auto& s : rows) {
    const auto& p = s.profile;
    const auto& rep = s.report;
    r.table.rows.push_back({std::to_string(c.n), format_double(s.lambda0), format_double(p.lambda_min()),
                            format_double(p.lambda_max()), format_double(rep.min_A2), format_double(rep.max_A2),
                            format_double(p.period()), format_double(rep.sigma.at(1)), format_double(s.sigma_k),
                            format_double(rep.perdomo_margin), format_double(rep.keyeq_residual)});
    Json j;
    j["n"] = c.n;
    j["lambda0"] = s.lambda0;
    j["lambda_min"] = p.lambda_min();
    j["lambda_max"] = p.lambda_max();
    j["minA2"] = rep.min_A2;
    j["maxA2"] = rep.max_A2;
    j["period"] = p.period();
    j["sigma1"] = rep.sigma.at(1);
    j["sigmaK"] = s.sigma_k;
    j["perdomo_margin"] = rep.perdomo_margin;
    j["keyeq_residual"] = rep.keyeq_residual;
    list.push_back(std::move(j));
    excess = std::max(excess, rep.sigma.at(1) - c.n);
    keyeq = std::max(keyeq, rep.keyeq_residual);
  }
  Json j;
  j["k"] = c.k;
  j["rows"] = list;
  r.envelope.results = j;
  r.envelope.checks.push_back(upper_bound_check("max_sigma1_minus_n", excess, kPerdomoSlack));
  r.envelope.checks.push_back(upper_bound_check("max_keyeq_residual", keyeq, kIdentityTolerance));
  return r;
}

RunResult run_curvature4(const RunConfig& c) {
  RunResult r;
  std::mt19937_64 rng(c.seed);
  const auto spec = c.spectrum.empty() ? random_traceless_spectrum(4, rng) : parse_spectrum(c.spectrum);
  if (spec.dimension() != 4) throw UsageError("curvature4: spectrum multiplicities must sum to 4");
  if (!spec.is_minimal()) throw UsageError("curvature4: spectrum must be traceless");
  const auto closed = curvature_invariants_dim4(spec);
  const auto oracle = curvature_tensor_oracle(spec);
  const auto forms = gbc_integrand(spec);
  const auto cls = classify(spec);
  Json j;
  j["spectrum"] = spectrum_json(spec);
  j["closed_form"] = invariants_json(closed);
  j["tensor_oracle"] = invariants_json(oracle);
  j["gbc_principal"] = forms.principal;
  j["gbc_chern"] = forms.chern;
  j["lcf"] = cls.lcf;
  j["einstein"] = cls.einstein;
  j["lcf_residual"] = cls.lcf_residual;
  j["einstein_residual"] = cls.einstein_residual;
  r.envelope.results = j;
  const double scale = std::max(1.0, oracle.ricci_sq);
  const double gap = std::max({rel(closed.scalar, oracle.scalar), rel(closed.ricci_sq, oracle.ricci_sq),
                               std::abs(closed.weyl_sq - oracle.weyl_sq) / scale,
                               std::abs(closed.tracefree_ricci_sq - oracle.tracefree_ricci_sq) / scale,
                               rel(closed.gbc_integrand, oracle.gbc_integrand)});
  r.envelope.checks.push_back(upper_bound_check("gbc_forms_rel_gap", rel(forms.principal, forms.chern),
                                                kGbcTolerance));
  r.envelope.checks.push_back(upper_bound_check("closed_form_vs_oracle", gap, kOracleTolerance));
  r.table = {{"scalar", "ricci_sq", "weyl_sq", "tracefree_ricci_sq", "gbc_principal", "gbc_chern"},
             {row({closed.scalar, closed.ricci_sq, closed.weyl_sq, closed.tracefree_ricci_sq, forms.principal,
                   forms.chern})}};
  return r;
}

}  // namespace

PrincipalSpectrum parse_spectrum(const std::string& text) {
  std::vector<CurvatureEntry> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    const auto colon = item.find(':');
    CurvatureEntry e;
    const auto value_text = item.substr(0, colon);
    const auto [vp, vec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), e.value);
    bool ok = vec == std::errc() && vp == value_text.data() + value_text.size() && std::isfinite(e.value);
    if (ok && colon != std::string_view::npos) {
      const auto mult_text = item.substr(colon + 1);
      const auto [mp, mec] =
          std::from_chars(mult_text.data(), mult_text.data() + mult_text.size(), e.multiplicity);
      ok = mec == std::errc() && mp == mult_text.data() + mult_text.size() && e.multiplicity >= 1;
    }
    if (!ok) throw UsageError("invalid spectrum entry '" + std::string(item) + "'");
    entries.push_back(e);
    pos = comma + 1;
  }
  return PrincipalSpectrum(std::move(entries));
}

RunResult run(const RunConfig& config) {
  RunResult r;
  switch (config.command) {
    case Command::kClifford:
      r = run_clifford(config);
      break;
    case Command::kDelta:
      r = run_delta(config);
      break;
    case Command::kProfile:
      r = run_profile(config);
      break;
    case Command::kVerify:
      r = run_verify(config);
      break;
    case Command::kSweep:
      r = run_sweep(config);
      break;
    case Command::kCurvature4:
      r = run_curvature4(config);
      break;
    case Command::kSuite:
      r.envelope = run_suite(config);
      r.table = checks_table(r.envelope.checks);
      break;
  }
  r.envelope.config_echo = config;
  return r;
}

std::string render(const RunResult& result, Format format) {
  return format == Format::kCsv ? result.table.to_string() : serialize(result.envelope);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out) out << text;
  if (!out || !out.flush()) throw UsageError("cannot write '" + path + "'");
}

}  // namespace clifford_lab::cli
