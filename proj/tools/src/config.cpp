#include "clifford_lab/cli/config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>

#include "clifford_lab/errors.hpp"

namespace clifford_lab::cli {
namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"clifford", Command::kClifford}, {"delta", Command::kDelta},
      {"profile", Command::kProfile},   {"verify", Command::kVerify},
      {"sweep", Command::kSweep},       {"curvature4", Command::kCurvature4},
      {"suite", Command::kSuite}};
  return names;
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& [name, value] : command_names()) {
    if (value == command) return name;
  }
  return "unknown";
}

std::string_view to_string(Format format) { return format == Format::kJson ? "json" : "csv"; }

std::vector<double> LambdaSpec::values() const {
  if (!is_range) return {start};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  return out;
}

LambdaSpec parse_lambda_spec(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    const double v = parse_double(text, "lambda0");
    return {v, v, 1, false};
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw UsageError("lambda0 range must be start:stop:count");
  }
  LambdaSpec spec;
  spec.is_range = true;
  spec.start = parse_double(text.substr(0, first), "lambda0 start");
  spec.stop = parse_double(text.substr(first + 1, second - first - 1), "lambda0 stop");
  const auto count_text = text.substr(second + 1);
  const auto* end = count_text.data() + count_text.size();
  const auto [ptr, ec] = std::from_chars(count_text.data(), end, spec.count);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid lambda0 count '" + std::string(count_text) + "'");
  }
  if (spec.count < 2) throw UsageError("lambda0 range count must be >= 2");
  return spec;
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw UsageError(msg); };
  if (c.lambda0) {
    for (double v : c.lambda0->values()) {
      if (!(v > 0.0)) fail("lambda0 must be positive");
    }
  }
  if (!(c.step > 0.0) || !std::isfinite(c.step)) fail("step must be positive");
  switch (c.command) {
    case Command::kClifford:
      if (c.n < 2) fail("clifford: n must be >= 2");
      if (c.m < 1 || c.m > c.n - 1) fail("clifford: m must be in [1, n-1]");
      if (c.k < 1) fail("clifford: k must be >= 1");
      break;
    case Command::kDelta:
      if (c.n < 3) fail("delta: n must be >= 3");
      if (c.kmax < 2) fail("delta: kmax must be >= 2");
      break;
    case Command::kProfile:
    case Command::kVerify:
    case Command::kSweep:
      if (c.n < 3) fail(std::string(to_string(c.command)) + ": n must be >= 3");
      if (c.k < 1) fail(std::string(to_string(c.command)) + ": k must be >= 1");
      if (c.command != Command::kSweep && c.lambda0 && c.lambda0->is_range) {
        fail(std::string(to_string(c.command)) + ": lambda0 must be a single value");
      }
      break;
    case Command::kCurvature4:
    case Command::kSuite:
      break;
  }
}

std::vector<double> lambda_values(const RunConfig& config) {
  if (config.lambda0) return config.lambda0->values();
  return {0.9 / std::sqrt(config.n - 1.0)};
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Verification laboratory for minimal hypersurfaces in spheres",
               "clifford_lab"};
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig config;
  std::string command_name = "suite";
  std::string lambda_text;
  std::string variant_text = "corrected";
  std::string format_text = "json";

  std::vector<std::string> names;
  for (const auto& [name, value] : command_names()) names.push_back(name);
  app.add_option("command", command_name, "Command to run")
      ->check(CLI::IsMember(names))
      ->capture_default_str();
  app.add_option("--n", config.n, "Hypersurface dimension")->capture_default_str();
  app.add_option("--m", config.m, "Clifford factor dimension")->capture_default_str();
  app.add_option("--k", config.k, "Moment order")->capture_default_str();
  app.add_option("--kmax", config.kmax, "Largest k in tables")->capture_default_str();
  app.add_option("--lambda0", lambda_text,
                 "Initial curvature, or start:stop:count for sweep (default 0.9/sqrt(n-1))");
  app.add_option("--step", config.step, "RK4 step")->capture_default_str();
  app.add_option("--variant", variant_text, "Sign-polynomial coefficients")
      ->check(CLI::IsMember({"corrected", "printed"}))
      ->capture_default_str();
  app.add_option("--out", config.out, "Output path (default: standard output)");
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for random spectra")->capture_default_str();
  app.add_option("--spectrum", config.spectrum, "curvature4 spectrum as v:m,v:m,...");

  const char* env_config = std::getenv(kConfigEnvVar);
  const bool env_given = env_config != nullptr && *env_config != '\0';
  app.set_config("--config", env_given ? env_config : "",
                 std::string("key=value file; flags override it (default: $") + kConfigEnvVar + ")",
                 env_given);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.command = command_names().at(command_name);
  config.variant = parse_variant(variant_text);
  config.format = format_text == "csv" ? Format::kCsv : Format::kJson;
  if (!lambda_text.empty()) config.lambda0 = parse_lambda_spec(lambda_text);
  validate(config);
  return {config, {}};
}

}  // namespace clifford_lab::cli
