#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aismc/config.hpp"
#include "aismc/csv.hpp"
#include "aismc/metrics.hpp"

namespace aismc {

struct RunOutcome {
  TrajectoryLog log;
  std::optional<RmseReport> report;  ///< absent when the run faulted before any sample
  std::string trajectory_path;
  std::string report_path;
};

/// Runs config.sim once and writes the trajectory CSV and the RMSE report
/// into config.output.directory.
RunOutcome run_command(const RunConfig& config);

struct CompareOutcome {
  std::vector<SeededReport> runs;  ///< seed-major, then task, then controller
  ComparisonTable table;           ///< per-controller reports pooled over seeds
  /// Seeds in which AISMC beat PID / SMC on total RMSE, per task.
  struct Wins {
    int task = 1;
    int vs_pid = 0;
    int vs_smc = 0;
    int seeds = 0;
  };
  std::vector<Wins> wins;
  std::vector<SimulationFault> faults;
  std::vector<std::string> files;
};

/// Every controller on every task for every seed (paired seeds share the
/// disturbance realization and plant mismatch). `jobs` > 1 runs in parallel;
/// results and files do not depend on it.
CompareOutcome compare_command(const RunConfig& config, int jobs = 1);

[[nodiscard]] std::string format_wins(const std::vector<CompareOutcome::Wins>& wins);

struct SweepPoint {
  std::vector<double> scales;  ///< one per sweep axis
  std::optional<RmseReport> report;
  std::optional<SimulationFault> fault;
};

struct SweepOutcome {
  std::vector<SweepPoint> points;
  std::string path;
};

/// Cartesian gain grid around config.sim; writes one CSV row per point.
SweepOutcome sweep_command(const RunConfig& config);

/// File stem "<prefix>_task<N>_<controller>_seed<S>".
[[nodiscard]] std::string run_stem(const RunConfig& config);

}  // namespace aismc
