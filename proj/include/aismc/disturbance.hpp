#pragma once

#include <cstdint>
#include <random>

#include "aismc/dynamics.hpp"
#include "aismc/types.hpp"

namespace aismc {

/// Every stochastic draw of a run comes from one generator of this type.
using Rng = std::mt19937_64;

struct DisturbanceConfig {
  Vector6 sigma = (Vector6() << 2.0, 2.0, 2.0, 0.1, 0.1, 0.1).finished();  // N, N m
  Vector6 correlation_time = Vector6::Constant(2.0);                      // s
  std::uint64_t seed = 1;
  double mismatch_scale = 0.1;  ///< relative plant/controller parameter spread

  /// Throws ValidationError naming the offending field.
  void validate() const;

  bool operator==(const DisturbanceConfig&) const = default;
};

/// Per-axis Ornstein-Uhlenbeck flow disturbance in the body frame:
///   x <- x a + sigma sqrt(1 - a^2) n,  a = exp(-dt / t_corr),  n ~ N(0, 1)
/// which is exact for any dt and keeps the stationary marginal N(0, sigma^2).
class FlowDisturbance {
 public:
  /// Draws the initial value from the stationary law using rng.
  FlowDisturbance(const DisturbanceConfig& config, Rng& rng);

  /// Advances the process by dt and returns the new sample.
  Wrench sample(double dt);

  [[nodiscard]] const Vector6& current() const { return value_; }

 private:
  Vector6 sigma_;
  Vector6 correlation_time_;
  Rng* rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  Vector6 value_ = Vector6::Zero();
};

/// Plant copy of the model with mass, inertia, added mass and damping entries
/// each scaled by an independent factor uniform in [1 - s, 1 + s]. The draws
/// always consume the same number of variates so later draws from rng do not
/// depend on s.
[[nodiscard]] VehicleModel apply_mismatch(const VehicleModel& model, const DisturbanceConfig& config,
                                          Rng& rng);

/// Same as above with a generator seeded from config.seed.
[[nodiscard]] VehicleModel apply_mismatch(const VehicleModel& model, const DisturbanceConfig& config);

}  // namespace aismc
