#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "clifford_lab/cli/config.hpp"

namespace clifford_lab::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class CheckStatus { kPass, kFail, kReportOnly };

std::string_view to_string(CheckStatus status);
CheckStatus parse_check_status(std::string_view text);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  double value = 0.0;
  double tolerance = 0.0;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Pass when value <= tolerance.
Check upper_bound_check(std::string name, double value, double tolerance);
/// Pass when value >= tolerance (the threshold is still stored as tolerance).
Check lower_bound_check(std::string name, double value, double tolerance);
Check report_only(std::string name, double value);

struct ReportEnvelope {
  std::string tool_version{kToolVersion};
  RunConfig config_echo;
  Json results = Json::object();
  std::vector<Check> checks;

  /// 0 when no check failed, 1 otherwise. Report-only checks are ignored.
  int exit_code() const;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

Json config_to_json(const RunConfig& config);
RunConfig config_from_json(const Json& json);

Json to_json(const ReportEnvelope& envelope);
ReportEnvelope envelope_from_json(const Json& json);

/// Two-space indented JSON with a trailing newline; keys in insertion order.
std::string serialize(const ReportEnvelope& envelope);

/// printf "%.17g".
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

}  // namespace clifford_lab::cli
