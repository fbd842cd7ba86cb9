#pragma once

#include "clifford_lab/cli/report.hpp"

namespace clifford_lab::cli {

/// One row per acceptance criterion, C01..C12. Each criterion is a list of
/// parts with their own bounds; the criterion check counts failed parts
/// against a tolerance of zero, and the parts are listed under results.
/// Only the seed is read from the config; everything else uses defaults.
ReportEnvelope run_suite(const RunConfig& config);

}  // namespace clifford_lab::cli
