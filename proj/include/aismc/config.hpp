#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aismc/metrics.hpp"
#include "aismc/simulation.hpp"

namespace aismc {

struct OutputConfig {
  std::string directory = "out";
  std::string prefix = "run";

  bool operator==(const OutputConfig&) const = default;
};

/// Paired-seed batch: every controller runs every task once per seed.
struct CompareConfig {
  std::vector<int> tasks{1, 2, 3};
  std::vector<ControllerKind> controllers{ControllerKind::Pid, ControllerKind::Smc,
                                          ControllerKind::Aismc};
  std::vector<std::uint64_t> seeds{1};

  bool operator==(const CompareConfig&) const = default;
};

/// One axis of a gain grid: a gain vector multiplied by each scale in turn.
struct SweepAxis {
  std::string parameter;  ///< e.g. "sliding.gamma", "adaptive.k_bar", "pid.kp"
  std::vector<double> scales;

  bool operator==(const SweepAxis&) const = default;
};

struct SweepConfig {
  std::vector<SweepAxis> axes;

  bool operator==(const SweepConfig&) const = default;
};

/// Everything a command needs: the simulation plus evaluation and output
/// settings.
struct RunConfig {
  SimulationConfig sim;
  TimeWindow window;
  OutputConfig output;
  CompareConfig compare;
  SweepConfig sweep;

  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

/// Parses YAML text, fills defaults and validates. An empty document yields
/// the defaults. Throws ParseError (with line) or ValidationError (with field).
[[nodiscard]] RunConfig parse_config(std::string_view text);

/// Reads and parses a file; IoError if it cannot be read.
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Complete YAML for the config; parse_config(emit_config(c)) == c.
[[nodiscard]] std::string emit_config(const RunConfig& config);

/// Names accepted by SweepAxis::parameter.
[[nodiscard]] const std::vector<std::string>& sweep_parameters();

/// Mutable reference to the gain vector a sweep parameter names; throws
/// ValidationError for unknown names.
[[nodiscard]] Vector6& gain_vector(ControllerConfig& controller, std::string_view parameter);

}  // namespace aismc
