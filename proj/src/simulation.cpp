#include "aismc/simulation.hpp"

#include <cmath>
#include <string>

#include "aismc/errors.hpp"

namespace aismc {

TaskId task_from_int(int id) {
  if (id < 1 || id > 3) throw UnknownTask(id);
  return static_cast<TaskId>(id);
}

void ReferenceConfig::validate() const {
  if (!std::isfinite(step_amplitude) || std::abs(step_amplitude) >= kPi / 2.0 - kSingularTolerance) {
    throw ValidationError("reference.step_amplitude",
                          "must stay inside the Euler singularity guard (|amplitude| < pi/2 - " +
                              std::to_string(kSingularTolerance) + ")");
  }
  if (!(step_time >= 0.0)) throw ValidationError("reference.step_time", "must be non-negative");
  if (!(filter_time_constant > 0.0)) {
    throw ValidationError("reference.filter_time_constant", "must be positive");
  }
}

ReferenceSample reference_trajectory(TaskId task, double t, const ReferenceConfig& config) {
  ReferenceSample ref;
  switch (task) {
    case TaskId::ZeroHold:
      break;
    case TaskId::PitchStep: {
      // Step through a critically damped second-order filter, closed form.
      const double tau = config.filter_time_constant;
      const double since = t - config.step_time;
      if (since > 0.0) {
        const double a = config.step_amplitude;
        const double x = since / tau;
        const double decay = std::exp(-x);
        ref.pose(kPitch) = a * (1.0 - (1.0 + x) * decay);
        ref.velocity(kPitch) = a * x / tau * decay;
        ref.acceleration(kPitch) = a / (tau * tau) * (1.0 - x) * decay;
      }
      break;
    }
    case TaskId::PitchSine: {
      if (t > 5.0 && t < 125.0) {
        const double amplitude = kPi / 4.0;
        const double w = kPi / 120.0;
        const double phase = w * (t - 5.0);
        ref.pose(kPitch) = amplitude * std::sin(phase);
        ref.velocity(kPitch) = amplitude * w * std::cos(phase);
        ref.acceleration(kPitch) = -amplitude * w * w * std::sin(phase);
      }
      break;
    }
    default:
      throw UnknownTask(static_cast<int>(task));
  }
  return ref;
}

ReferenceSample reference_trajectory(int task, double t, const ReferenceConfig& config) {
  return reference_trajectory(task_from_int(task), t, config);
}

int TimingConfig::substeps() const {
  const double ratio = control_period / dt_physics;
  const double n = std::round(ratio);
  if (!(n >= 1.0) || std::abs(ratio - n) > 1e-9 * std::max(1.0, n)) {
    throw ValidationError("timing.dt_physics", "must divide timing.control_period exactly");
  }
  return static_cast<int>(n);
}

int TimingConfig::control_steps() const {
  return static_cast<int>(std::llround(duration / control_period));
}

void TimingConfig::validate() const {
  if (!(dt_physics > 0.0) || !std::isfinite(dt_physics)) {
    throw ValidationError("timing.dt_physics", "must be positive");
  }
  if (!(control_period > 0.0) || !std::isfinite(control_period)) {
    throw ValidationError("timing.control_period", "must be positive");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw ValidationError("timing.duration", "must be positive");
  }
  (void)substeps();
}

void SimulationConfig::validate() const {
  reference.validate();
  controller.validate();
  try {
    vehicle.validate();
  } catch (const InvalidModel& e) {
    throw ValidationError("vehicle", e.what());
  }
  try {
    (void)allocation_matrix(thrusters);
  } catch (const DegenerateLayout& e) {
    throw ValidationError("thrusters", e.what());
  }
  disturbance.validate();
  timing.validate();
  if (!initial_state.eta.allFinite() || !initial_state.nu.allFinite()) {
    throw ValidationError("initial_state", "must be finite");
  }
}

VehicleState rk4_step(const VehicleState& state, const Wrench& tau_total, const VehicleModel& plant,
                      double dt) {
  const Wrench none = Wrench::body(Vector6::Zero());
  auto derivative = [&](const VehicleState& x) {
    return VehicleState{body_to_earth_rates(x), body_acceleration(x, tau_total, none, plant)};
  };
  auto offset = [](const VehicleState& x, const VehicleState& k, double h) {
    return VehicleState{x.eta + h * k.eta, x.nu + h * k.nu};
  };

  const VehicleState k1 = derivative(state);
  const VehicleState k2 = derivative(offset(state, k1, 0.5 * dt));
  const VehicleState k3 = derivative(offset(state, k2, 0.5 * dt));
  const VehicleState k4 = derivative(offset(state, k3, dt));

  VehicleState next;
  next.eta = state.eta + dt / 6.0 * (k1.eta + 2.0 * k2.eta + 2.0 * k3.eta + k4.eta);
  next.nu = state.nu + dt / 6.0 * (k1.nu + 2.0 * k2.nu + 2.0 * k3.nu + k4.nu);
  wrap_attitude(next.eta);
  return next;
}

namespace {

const SimulationConfig& validated(const SimulationConfig& config) {
  config.validate();
  return config;
}

}  // namespace

Simulation::Simulation(const SimulationConfig& config)
    : config_(validated(config)),
      rng_(config.disturbance.seed),
      plant_(apply_mismatch(config.vehicle, config.disturbance, rng_)),
      disturbance_(config.disturbance, rng_),
      allocator_(config.thrusters, config.vehicle.max_thrust),
      controller_(config.controller),
      state_(config.initial_state) {
  log_.control_period = config.timing.control_period;
  wrap_attitude(state_.eta);
}

VehicleState Simulation::measure() {
  if (!config_.noise.enabled) return state_;
  VehicleState measured = state_;
  for (int i = 0; i < 6; ++i) {
    measured.eta(i) += config_.noise.pose_sigma(i) * noise_(rng_);
    measured.nu(i) += config_.noise.velocity_sigma(i) * noise_(rng_);
  }
  return measured;
}

void Simulation::step() {
  const double period = config_.timing.control_period;
  const int substeps = config_.timing.substeps();
  const double dt = period / substeps;
  t_ = static_cast<double>(step_index_) * period;

  const ReferenceSample ref = reference_trajectory(config_.task, t_, config_.reference);
  const VehicleState measured = measure();
  const Vector6 eta_dot = body_to_earth_rates(measured);

  ControlInput input;
  input.e = tracking_error(measured.eta, ref.pose);
  input.e_dot = eta_dot - ref.velocity;
  input.eta_r_ddot = ref.acceleration;
  const ControlOutput out = controller_.update(input, period);

  // The controller only knows the nominal model.
  const Wrench demanded = control_to_body_wrench(out.tau_tilde, measured, config_.vehicle);
  const AllocationResult allocation = allocator_.allocate(demanded);
  const Wrench thrust = allocator_.apply(allocation.command);

  LogRecord rec;
  rec.t = t_;
  rec.eta = state_.eta;
  rec.nu = state_.nu;
  rec.eta_r = ref.pose;
  rec.e = input.e;
  rec.s = out.s;
  rec.k_hat = out.k_hat;
  rec.mu = allocation.command.mu;
  rec.v1 = out.v1;
  rec.saturated = allocation.saturated;
  rec.tau_tilde = out.tau_tilde.values;
  rec.k_hat_rate = out.k_hat_rate;

  for (int i = 0; i < substeps; ++i) {
    const Wrench tau_e = disturbance_.sample(dt);
    if (i == 0) {
      rec.tau_e = tau_e.values;
      rec.d_estimate = earth_acceleration(state_, thrust, tau_e, plant_) - out.tau_tilde.values;
      log_.records.push_back(rec);
    }
    state_ = rk4_step(state_, thrust + tau_e, plant_, dt);
    const double t_sub = t_ + (i + 1) * dt;
    if (!state_.eta.allFinite() || !state_.nu.allFinite()) {
      throw NonFiniteState("state became non-finite at t = " + std::to_string(t_sub) + " s");
    }
    if (observer_) observer_(t_sub, thrust);
  }
  ++step_index_;
  t_ = static_cast<double>(step_index_) * period;
}

TrajectoryLog run_task(const SimulationConfig& config) {
  Simulation sim(config);
  const int steps = config.timing.control_steps();
  try {
    for (int k = 0; k < steps; ++k) sim.step();
  } catch (const SingularAttitude& e) {
    TrajectoryLog log = sim.take_log();
    log.fault = SimulationFault{"SingularAttitude", sim.time(), e.what()};
    return log;
  } catch (const NonFiniteState& e) {
    TrajectoryLog log = sim.take_log();
    log.fault = SimulationFault{"NonFiniteState", sim.time(), e.what()};
    return log;
  }
  return sim.take_log();
}

}  // namespace aismc
