#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clifford_lab/pinching.hpp"

namespace clifford_lab::cli {

enum class Command { kClifford, kDelta, kProfile, kVerify, kSweep, kCurvature4, kSuite };
enum class Format { kJson, kCsv };

std::string_view to_string(Command command);
std::string_view to_string(Format format);

/// Invalid command line or configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A single lambda0 or an inclusive grid "start:stop:count".
struct LambdaSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool is_range = false;

  std::vector<double> values() const;
  friend bool operator==(const LambdaSpec&, const LambdaSpec&) = default;
};

/// Parses "x" or "start:stop:count" (count >= 2). Throws UsageError.
LambdaSpec parse_lambda_spec(std::string_view text);

struct RunConfig {
  Command command = Command::kSuite;
  int n = 3;
  int m = 1;
  int k = 2;
  int kmax = 6;
  /// Unset means 0.9 / sqrt(n-1).
  std::optional<LambdaSpec> lambda0;
  double step = 1e-3;
  CoefficientVariant variant = CoefficientVariant::kCorrected;
  /// Empty writes to standard output.
  std::string out;
  Format format = Format::kJson;
  std::uint64_t seed = 42;
  /// Optional "v:m,v:m,..." spectrum for curvature4; empty draws from seed.
  std::string spectrum;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Environment variable naming a default key=value config file.
inline constexpr const char* kConfigEnvVar = "CLIFFORD_LAB_CONFIG";

struct ParseOutcome {
  std::optional<RunConfig> config;  // empty when help was requested
  std::string help_text;
};

/// Parses argv. Flags override values from the config file given by
/// --config or by CLIFFORD_LAB_CONFIG. Throws UsageError on unknown flags,
/// malformed values, or out-of-domain parameters.
ParseOutcome parse_command_line(int argc, const char* const* argv);

/// Domain checks that do not depend on running anything.
void validate(const RunConfig& config);

/// lambda0 values with the default applied.
std::vector<double> lambda_values(const RunConfig& config);

}  // namespace clifford_lab::cli
