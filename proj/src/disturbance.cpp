#include "aismc/disturbance.hpp"

#include <cmath>
#include <string>

#include "aismc/errors.hpp"

namespace aismc {

void DisturbanceConfig::validate() const {
  for (int i = 0; i < 6; ++i) {
    const std::string idx = "[" + std::to_string(i) + "]";
    if (!(sigma(i) >= 0.0) || !std::isfinite(sigma(i))) {
      throw ValidationError("disturbance.sigma" + idx, "must be non-negative");
    }
    if (!(correlation_time(i) > 0.0) || !std::isfinite(correlation_time(i))) {
      throw ValidationError("disturbance.correlation_time" + idx, "must be positive");
    }
  }
  if (!(mismatch_scale >= 0.0 && mismatch_scale <= 0.5)) {
    throw ValidationError("disturbance.mismatch_scale", "must lie in [0, 0.5]");
  }
}

FlowDisturbance::FlowDisturbance(const DisturbanceConfig& config, Rng& rng)
    : sigma_(config.sigma), correlation_time_(config.correlation_time), rng_(&rng) {
  config.validate();
  for (int i = 0; i < 6; ++i) value_(i) = sigma_(i) * normal_(*rng_);
}

Wrench FlowDisturbance::sample(double dt) {
  for (int i = 0; i < 6; ++i) {
    const double a = std::exp(-dt / correlation_time_(i));
    const double n = normal_(*rng_);
    value_(i) = value_(i) * a + sigma_(i) * std::sqrt(1.0 - a * a) * n;
  }
  return Wrench::body(value_);
}

VehicleModel apply_mismatch(const VehicleModel& model, const DisturbanceConfig& config, Rng& rng) {
  config.validate();
  const double s = config.mismatch_scale;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto factor = [&] { return 1.0 + s * unit(rng); };

  VehicleModel plant = model;
  plant.mass *= factor();
  for (int i = 0; i < 3; ++i) plant.inertia(i) *= factor();
  for (int i = 0; i < 6; ++i) plant.added_mass(i) *= factor();
  for (int i = 0; i < 6; ++i) plant.linear_damping(i) *= factor();
  for (int i = 0; i < 6; ++i) plant.quadratic_damping(i) *= factor();
  plant.validate();
  return plant;
}

VehicleModel apply_mismatch(const VehicleModel& model, const DisturbanceConfig& config) {
  Rng rng(config.seed);
  return apply_mismatch(model, config, rng);
}

}  // namespace aismc
