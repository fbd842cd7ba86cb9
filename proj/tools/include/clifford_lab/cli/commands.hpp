#pragma once

#include <string>

#include "clifford_lab/cli/report.hpp"
#include "clifford_lab/spectra.hpp"

namespace clifford_lab::cli {

struct RunResult {
  ReportEnvelope envelope;
  /// Command-specific table used for --format csv.
  CsvTable table;

  int exit_code() const { return envelope.exit_code(); }
};

/// Dispatches a validated config. Throws UsageError, DomainError or
/// IntegrationError on invalid input; all map to exit code 2.
RunResult run(const RunConfig& config);

/// The text written for config.format.
std::string render(const RunResult& result, Format format);

/// Writes text to path, or to standard output when path is empty. Throws
/// UsageError when the file cannot be written.
void emit(const std::string& text, const std::string& path);

/// Parses "v:m,v:m,..." into a spectrum. Throws UsageError.
PrincipalSpectrum parse_spectrum(const std::string& text);

}  // namespace clifford_lab::cli
