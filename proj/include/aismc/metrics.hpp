#pragma once

#include <array>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "aismc/simulation.hpp"

namespace aismc {

enum class Channel { Roll, Pitch, Yaw };

[[nodiscard]] int axis_of(Channel channel);
[[nodiscard]] const char* to_string(Channel channel);

/// Closed time interval [start, end] in seconds.
struct TimeWindow {
  double start = 0.0;
  double end = std::numeric_limits<double>::infinity();

  bool operator==(const TimeWindow&) const = default;
};

/// Signed tracking errors of one attitude channel inside the window.
/// Throws EmptyWindow if no sample falls inside.
[[nodiscard]] std::vector<double> error_samples(const TrajectoryLog& log, Channel channel,
                                                const TimeWindow& window = {});

[[nodiscard]] double mean_square(std::span<const double> errors);
[[nodiscard]] double mean_square_error(const TrajectoryLog& log, Channel channel,
                                       const TimeWindow& window = {});
[[nodiscard]] double rmse(const TrajectoryLog& log, Channel channel, const TimeWindow& window = {});

/// Joint RMSE over the three attitude angles from their mean-square errors:
/// sqrt((ms_pitch + ms_roll + ms_yaw) / 3).
[[nodiscard]] double total_rmse(double ms_pitch, double ms_roll, double ms_yaw);

struct RmseReport {
  std::string controller;
  int task = 1;
  TimeWindow window;
  double pitch = 0.0;
  double roll = 0.0;
  double yaw = 0.0;
  double total = 0.0;
};

[[nodiscard]] RmseReport rmse_report(const TrajectoryLog& log, std::string controller, int task,
                                     const TimeWindow& window = {});

/// Empirical summary of signed error samples.
struct ErrorDistribution {
  static constexpr std::array<double, 7> kLevels{0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};
  std::array<double, 7> quantiles{};
  double mean = 0.0;
  double sd = 0.0;  ///< sample standard deviation (n - 1)
  std::size_t count = 0;
};

/// Pools runs of equal length (e.g. several seeds of one controller and
/// task): each channel RMSE is the root of the mean of the per-run mean squares.
[[nodiscard]] RmseReport pooled_report(const std::vector<RmseReport>& runs);

/// Quantiles use linear interpolation between order statistics.
[[nodiscard]] ErrorDistribution error_distribution(std::span<const double> errors);
[[nodiscard]] ErrorDistribution error_distribution(const TrajectoryLog& log, Channel channel,
                                                   const TimeWindow& window = {});

/// max |s_i| per axis inside the window; an empirical stand-in for the
/// ultimate bound on the sliding variable.
[[nodiscard]] Vector6 sliding_variable_bound(const TrajectoryLog& log, const TimeWindow& window);

/// 100 (baseline - candidate) / baseline.
[[nodiscard]] double percent_reduction(double baseline, double candidate);

struct ComparisonTable {
  struct Reduction {
    int task = 1;
    double vs_pid = 0.0;  ///< percent reduction of the AISMC total RMSE
    double vs_smc = 0.0;
  };
  std::vector<RmseReport> rows;  ///< ordered by task, then pid, smc, ismc, aismc
  std::vector<Reduction> reductions;

  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] std::string to_csv() const;
};

/// Builds the per-task table. Every task needs exactly one pid, smc and
/// aismc report (ismc optional) over a common window, else MismatchedRuns.
[[nodiscard]] ComparisonTable comparison_report(const std::vector<RmseReport>& reports);

}  // namespace aismc
