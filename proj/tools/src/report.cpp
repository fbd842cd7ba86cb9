#include "clifford_lab/cli/report.hpp"

#include <cstdio>

namespace clifford_lab::cli {
namespace {

Command parse_command(std::string_view text) {
  for (auto c : {Command::kClifford, Command::kDelta, Command::kProfile, Command::kVerify,
                 Command::kSweep, Command::kCurvature4, Command::kSuite}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown command '" + std::string(text) + "'");
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kReportOnly:
      return "report-only";
  }
  return "fail";
}

CheckStatus parse_check_status(std::string_view text) {
  if (text == "pass") return CheckStatus::kPass;
  if (text == "fail") return CheckStatus::kFail;
  if (text == "report-only") return CheckStatus::kReportOnly;
  throw UsageError("unknown check status '" + std::string(text) + "'");
}

Check upper_bound_check(std::string name, double value, double tolerance) {
  return {std::move(name), value <= tolerance ? CheckStatus::kPass : CheckStatus::kFail, value,
          tolerance};
}

Check lower_bound_check(std::string name, double value, double tolerance) {
  return {std::move(name), value >= tolerance ? CheckStatus::kPass : CheckStatus::kFail, value,
          tolerance};
}

Check report_only(std::string name, double value) {
  return {std::move(name), CheckStatus::kReportOnly, value, 0.0};
}

int ReportEnvelope::exit_code() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return 1;
  }
  return 0;
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  j["n"] = c.n;
  j["m"] = c.m;
  j["k"] = c.k;
  j["kmax"] = c.kmax;
  if (c.lambda0) {
    Json l;
    l["start"] = c.lambda0->start;
    l["stop"] = c.lambda0->stop;
    l["count"] = c.lambda0->count;
    l["is_range"] = c.lambda0->is_range;
    j["lambda0"] = l;
  } else {
    j["lambda0"] = nullptr;
  }
  j["step"] = c.step;
  j["variant"] = to_string(c.variant);
  j["out"] = c.out;
  j["format"] = to_string(c.format);
  j["seed"] = c.seed;
  j["spectrum"] = c.spectrum;
  return j;
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.command = parse_command(j.at("command").get<std::string>());
  c.n = j.at("n").get<int>();
  c.m = j.at("m").get<int>();
  c.k = j.at("k").get<int>();
  c.kmax = j.at("kmax").get<int>();
  if (!j.at("lambda0").is_null()) {
    const auto& l = j.at("lambda0");
    c.lambda0 = LambdaSpec{l.at("start").get<double>(), l.at("stop").get<double>(),
                           l.at("count").get<int>(), l.at("is_range").get<bool>()};
  }
  c.step = j.at("step").get<double>();
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.out = j.at("out").get<std::string>();
  c.format = j.at("format").get<std::string>() == "csv" ? Format::kCsv : Format::kJson;
  c.seed = j.at("seed").get<std::uint64_t>();
  c.spectrum = j.at("spectrum").get<std::string>();
  return c;
}

Json to_json(const ReportEnvelope& e) {
  Json j;
  j["tool_version"] = e.tool_version;
  j["config"] = config_to_json(e.config_echo);
  j["results"] = e.results;
  Json checks = Json::array();
  for (const auto& c : e.checks) {
    Json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["value"] = c.value;
    item["tolerance"] = c.tolerance;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j;
}

ReportEnvelope envelope_from_json(const Json& j) {
  ReportEnvelope e;
  e.tool_version = j.at("tool_version").get<std::string>();
  e.config_echo = config_from_json(j.at("config"));
  e.results = j.at("results");
  for (const auto& item : j.at("checks")) {
    e.checks.push_back({item.at("name").get<std::string>(),
                        parse_check_status(item.at("status").get<std::string>()),
                        item.at("value").get<double>(), item.at("tolerance").get<double>()});
  }
  return e;
}

std::string serialize(const ReportEnvelope& envelope) {
  return to_json(envelope).dump(2) + "\n";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string CsvTable::to_string() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

}  // namespace clifford_lab::cli
