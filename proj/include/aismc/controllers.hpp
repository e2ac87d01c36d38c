#pragma once

#include <string_view>

#include "aismc/dynamics.hpp"
#include "aismc/types.hpp"

namespace aismc {

enum class SwitchingKind { Saturation, Tanh, Sign };

/// Continuous stand-in for sgn(s) in the switching term.
///  - Saturation: clamp(s / width, -1, 1), exactly sign(s) once |s| >= width.
///  - Tanh: tanh(s / width).
///  - Sign: the discontinuous sign function (width ignored).
struct SwitchingFunction {
  SwitchingKind kind = SwitchingKind::Saturation;
  double width = 0.01;

  [[nodiscard]] double operator()(double s) const;
  [[nodiscard]] Vector6 operator()(const Vector6& s) const;

  bool operator==(const SwitchingFunction&) const = default;
};

/// Diagonal sliding-mode gains, one entry per degree of freedom.
struct SlidingGains {
  Vector6 c1;     ///< proportional surface gain (1/s)
  Vector6 c2;     ///< integral surface gain (1/s^2)
  Vector6 gamma;  ///< reaching-rate gain (1/s)
  Vector6 k;      ///< fixed switching gain (SMC / ISMC)

  /// Surface and reaching gains of the field-tested AISMC tuning.
  static SlidingGains defaults();
  void validate() const;

  bool operator==(const SlidingGains&) const = default;
};

/// Adaptive switching gains k_hat together with their adaptation parameters.
struct AdaptiveState {
  Vector6 k_hat;   ///< current switching gains, always >= beta
  Vector6 k_bar;   ///< adaptation rates
  Vector6 beta;    ///< gain floor
  Vector6 lambda;  ///< boundary layer / gain ratio

  static AdaptiveState defaults();
  void validate() const;

  /// Boundary layer eps_hat = lambda .* k_hat, always derived from k_hat.
  [[nodiscard]] Vector6 epsilon_hat() const { return lambda.cwiseProduct(k_hat); }

  bool operator==(const AdaptiveState&) const = default;
};

struct PidGains {
  Vector6 kp;
  Vector6 ki;
  Vector6 kd;
  Vector6 integral_limit;  ///< bound on |ki * integral_e| per axis

  static PidGains defaults();
  void validate() const;

  bool operator==(const PidGains&) const = default;
};

/// e = eta - eta_r with the attitude components wrapped to (-pi, pi].
[[nodiscard]] Vector6 tracking_error(const Vector6& eta, const Vector6& eta_r);

/// s = e_dot + C1 e + C2 int(e).
[[nodiscard]] Vector6 sliding_surface(const Vector6& e, const Vector6& e_dot,
                                      const Vector6& integral_e, const SlidingGains& gains);

/// tau_tilde = eta_r_ddot - C1 e_dot - C2 e - Gamma s - K sgn(s).
[[nodiscard]] Wrench ismc_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
                              const Vector6& s, const SlidingGains& gains,
                              const SwitchingFunction& sgn = {});

/// Conventional SMC: surface s = e_dot + C1 e (no integral), fixed K.
[[nodiscard]] Wrench smc_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
                             const SlidingGains& gains, const SwitchingFunction& sgn = {});

/// Switching-gain rate:
///   k_hat_dot_i = k_bar_i |s_i| sign(|s_i| - eps_hat_i)   if k_hat_i > beta_i
///               = beta_i                                   otherwise
[[nodiscard]] Vector6 adaptive_gain_rate(const Vector6& s, const AdaptiveState& adaptive);

struct AdaptiveStep {
  Wrench tau_tilde;
  AdaptiveState next;
  Vector6 k_hat_rate;
};

/// AISMC law with K replaced by diag(k_hat), followed by one explicit Euler
/// step of the gain adaptation floored at beta.
[[nodiscard]] AdaptiveStep aismc_law(const Vector6& eta_r_ddot, const Vector6& e,
                                     const Vector6& e_dot, const Vector6& s,
                                     const SlidingGains& gains, const AdaptiveState& adaptive,
                                     double dt, const SwitchingFunction& sgn = {});

/// tau_tilde = -(kp e + clamp(ki int(e)) + kd e_dot).
[[nodiscard]] Wrench pid_law(const Vector6& e, const Vector6& e_dot, const Vector6& integral_e,
                             const PidGains& gains);

struct LyapunovDiagnostic {
  double v1 = 0.0;            ///< 0.5 s^T s
  double v1_dot_bound = 0.0;  ///< -s^T Gamma s - sum (k_i - |d_i|) |s_i|
  bool gain_dominates = true; ///< k_i >= |d_i| on every axis
};

[[nodiscard]] LyapunovDiagnostic lyapunov_diagnostic(const Vector6& s, const Vector6& gamma,
                                                     const Vector6& k, const Vector6& d_estimate);

enum class ControllerKind { Pid, Smc, Ismc, Aismc };

[[nodiscard]] std::string_view to_string(ControllerKind kind);
/// Accepts "pid", "smc", "ismc", "aismc" (case-insensitive).
[[nodiscard]] ControllerKind controller_kind_from_string(std::string_view name);

struct ControllerConfig {
  ControllerKind kind = ControllerKind::Aismc;
  SlidingGains sliding = SlidingGains::defaults();
  AdaptiveState adaptive = AdaptiveState::defaults();
  PidGains pid = PidGains::defaults();
  SwitchingFunction switching;

  void validate() const;

  bool operator==(const ControllerConfig&) const = default;
};

/// Trapezoidal error integral with a symmetric per-axis clamp.
class ErrorIntegrator {
 public:
  explicit ErrorIntegrator(const Vector6& limit) : limit_(limit) {}

  /// Adds the trapezoid between the previous and this sample. The first call
  /// after reset() only records the sample.
  const Vector6& update(const Vector6& e, double dt);
  void reset();
  [[nodiscard]] const Vector6& value() const { return value_; }

 private:
  Vector6 limit_;
  Vector6 value_ = Vector6::Zero();
  Vector6 last_ = Vector6::Zero();
  bool primed_ = false;
};

struct ControlInput {
  Vector6 e;
  Vector6 e_dot;
  Vector6 eta_r_ddot;
};

struct ControlOutput {
  Wrench tau_tilde = Wrench::normalized(Vector6::Zero());
  Vector6 s = Vector6::Zero();
  Vector6 k_hat = Vector6::Zero();  ///< gain used for this output
  Vector6 k_hat_rate = Vector6::Zero();
  double v1 = 0.0;
};

/// One tracking controller with its integrator and adaptive state.
class Controller {
 public:
  explicit Controller(const ControllerConfig& config);

  /// Computes the control for the current sample and advances internal
  /// state by dt (the control period).
  ControlOutput update(const ControlInput& input, double dt);
  void reset();

  [[nodiscard]] const ControllerConfig& config() const { return config_; }
  [[nodiscard]] const AdaptiveState& adaptive() const { return adaptive_; }
  [[nodiscard]] const Vector6& integral() const { return integrator_.value(); }

 private:
  ControllerConfig config_;
  AdaptiveState adaptive_;
  ErrorIntegrator integrator_;
};

/// Integral clamp of the sliding controllers: 10 / max(C2) on every axis.
[[nodiscard]] Vector6 sliding_integral_limit(const SlidingGains& gains);

}  // namespace aismc
