#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aismc/allocation.hpp"
#include "aismc/controllers.hpp"
#include "aismc/disturbance.hpp"
#include "aismc/dynamics.hpp"
#include "aismc/kinematics.hpp"

namespace aismc {

/// Station-holding attitude tasks.
enum class TaskId : int {
  ZeroHold = 1,   ///< all references zero
  PitchStep = 2,  ///< smoothed pitch step
  PitchSine = 3,  ///< half-period pitch sine between t = 5 s and t = 125 s
};

/// Throws UnknownTask for anything but 1, 2, 3.
[[nodiscard]] TaskId task_from_int(int id);

struct ReferenceConfig {
  double step_amplitude = kPi / 4.0;  // rad
  double step_time = 5.0;             // s
  double filter_time_constant = 0.5;  // s, critically damped step smoother

  void validate() const;
  bool operator==(const ReferenceConfig&) const = default;
};

/// Pose reference with its analytic first and second derivatives.
struct ReferenceSample {
  Vector6 pose = Vector6::Zero();
  Vector6 velocity = Vector6::Zero();
  Vector6 acceleration = Vector6::Zero();
};

[[nodiscard]] ReferenceSample reference_trajectory(TaskId task, double t,
                                                   const ReferenceConfig& config = {});
/// Integer task id overload; throws UnknownTask.
[[nodiscard]] ReferenceSample reference_trajectory(int task, double t,
                                                   const ReferenceConfig& config = {});

struct TimingConfig {
  double dt_physics = 0.005;     // s
  double control_period = 0.05;  // s (20 Hz)
  double duration = 130.0;       // s

  /// Physics steps per control period; throws ValidationError unless
  /// dt_physics divides control_period.
  [[nodiscard]] int substeps() const;
  [[nodiscard]] int control_steps() const;
  void validate() const;
  bool operator==(const TimingConfig&) const = default;
};

/// Optional additive Gaussian noise on the fed-back state.
struct MeasurementNoise {
  bool enabled = false;
  Vector6 pose_sigma = (Vector6() << 0.01, 0.01, 0.005, 0.005, 0.005, 0.01).finished();
  Vector6 velocity_sigma = (Vector6() << 0.01, 0.01, 0.01, 0.005, 0.005, 0.005).finished();

  bool operator==(const MeasurementNoise&) const = default;
};

struct SimulationConfig {
  TaskId task = TaskId::ZeroHold;
  ReferenceConfig reference;
  ControllerConfig controller;
  VehicleModel vehicle;
  ThrusterLayout thrusters = ThrusterLayout::bluerov2_heavy();
  DisturbanceConfig disturbance;
  TimingConfig timing;
  VehicleState initial_state;
  MeasurementNoise noise;

  void validate() const;
  bool operator==(const SimulationConfig&) const = default;
};

/// One control-rate sample.
struct LogRecord {
  double t = 0.0;
  Vector6 eta, nu, eta_r, e, s, k_hat;
  Vector8 mu;
  Vector6 tau_e;  ///< disturbance during the first physics step of the period
  double v1 = 0.0;
  bool saturated = false;

  // Not part of the CSV schema.
  Vector6 tau_tilde;
  Vector6 k_hat_rate;
  Vector6 d_estimate;  ///< eta_ddot - tau_tilde at the sample instant
};

struct SimulationFault {
  std::string kind;  ///< "SingularAttitude" or "NonFiniteState"
  double t = 0.0;
  std::string message;
};

struct TrajectoryLog {
  double control_period = 0.05;
  std::vector<LogRecord> records;
  std::optional<SimulationFault> fault;

  [[nodiscard]] bool ok() const { return !fault.has_value(); }
};

/// Classical RK4 step of eta_dot = J(eta) nu, nu_dot = M^-1(...) with the
/// body wrench held constant over the step. Attitude is wrapped afterwards.
[[nodiscard]] VehicleState rk4_step(const VehicleState& state, const Wrench& tau_total,
                                    const VehicleModel& plant, double dt);

/// Closed loop around one plant: zero-order-hold controller at the control
/// period, RK4 physics substeps in between.
class Simulation {
 public:
  explicit Simulation(const SimulationConfig& config);

  /// Evaluates the controller at the current time, logs the sample and
  /// integrates one control period. Throws SingularAttitude or
  /// NonFiniteState.
  void step();

  [[nodiscard]] double time() const { return t_; }
  [[nodiscard]] const VehicleState& state() const { return state_; }
  [[nodiscard]] const VehicleModel& plant() const { return plant_; }
  [[nodiscard]] const TrajectoryLog& log() const { return log_; }
  [[nodiscard]] TrajectoryLog take_log() { return std::move(log_); }

  /// Called after every physics substep with (t, applied thruster wrench).
  void set_physics_observer(std::function<void(double, const Wrench&)> observer) {
    observer_ = std::move(observer);
  }

 private:
  VehicleState measure();

  SimulationConfig config_;
  Rng rng_;
  VehicleModel plant_;
  FlowDisturbance disturbance_;
  ThrustAllocator allocator_;
  Controller controller_;
  VehicleState state_;
  double t_ = 0.0;
  long step_index_ = 0;
  TrajectoryLog log_;
  std::function<void(double, const Wrench&)> observer_;
  std::normal_distribution<double> noise_{0.0, 1.0};
};

/// Runs the full task. Simulation faults end the run early and are recorded
/// in the returned log; configuration errors throw.
[[nodiscard]] TrajectoryLog run_task(const SimulationConfig& config);

}  // namespace aismc
