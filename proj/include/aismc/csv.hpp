#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aismc/metrics.hpp"
#include "aismc/simulation.hpp"

namespace aismc {

/// Provenance written after the data rows of every trajectory file.
struct RunMetadata {
  std::uint64_t seed = 1;
  int task = 1;
  std::string controller = "aismc";

  bool operator==(const RunMetadata&) const = default;
};

/// t, x..psi, u..r, x_r..psi_r, e_*, s_*, k_hat_*, mu_1..mu_8, tauE_*, V1, sat_flag.
[[nodiscard]] const std::vector<std::string>& trajectory_columns();

/// 17 significant digits; parses back to the identical double.
[[nodiscard]] std::string format_number(double value);

/// Header row, one row per record, then "# seed=.. task=.. controller=.." and,
/// for a faulted run, "# fault: <kind> t=<t> <message>".
void write_trajectory_csv(std::ostream& out, const TrajectoryLog& log, const RunMetadata& meta);

struct TrajectoryFile {
  RunMetadata meta;
  TrajectoryLog log;  ///< only the CSV fields are populated
};

/// Inverse of write_trajectory_csv. Throws ParseError on a malformed file.
[[nodiscard]] TrajectoryFile read_trajectory_csv(std::istream& in);

/// RMSE rows with the seed of each run.
struct SeededReport {
  std::uint64_t seed = 1;
  RmseReport report;
};

void write_rmse_csv(std::ostream& out, const std::vector<SeededReport>& rows);

/// Per-channel error quantiles, mean and sd for one run.
void write_distribution_csv(std::ostream& out, const std::vector<SeededReport>& runs,
                            const std::vector<std::vector<ErrorDistribution>>& distributions);

/// Writes text to a file, replacing it. Throws IoError.
void write_file(const std::string& path, const std::string& text);

}  // namespace aismc
