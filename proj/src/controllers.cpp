#include "aismc/controllers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "aismc/errors.hpp"
#include "aismc/kinematics.hpp"

namespace aismc {

namespace {

Vector6 vec6(double a, double b, double c, double d, double e, double f) {
  return (Vector6() << a, b, c, d, e, f).finished();
}

void require_all(const Vector6& v, const std::string& field, bool allow_zero) {
  for (int i = 0; i < 6; ++i) {
    const bool ok = std::isfinite(v(i)) && (allow_zero ? v(i) >= 0.0 : v(i) > 0.0);
    if (!ok) {
      throw ValidationError(field + "[" + std::to_string(i) + "]",
                            allow_zero ? "must be non-negative" : "must be positive");
    }
  }
}

double sign_of(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

}  // namespace

double SwitchingFunction::operator()(double s) const {
  switch (kind) {
    case SwitchingKind::Saturation: return std::clamp(s / width, -1.0, 1.0);
    case SwitchingKind::Tanh: return std::tanh(s / width);
    case SwitchingKind::Sign: return sign_of(s);
  }
  return 0.0;
}

Vector6 SwitchingFunction::operator()(const Vector6& s) const {
  return s.unaryExpr([this](double x) { return (*this)(x); });
}

SlidingGains SlidingGains::defaults() {
  SlidingGains g;
  g.c1 = vec6(1.4, 1.6, 2.0, 0.7, 0.85, 2.0);
  g.c2 = vec6(2.0, 2.0, 0.7, 1.0, 0.8, 1.5);
  g.gamma = vec6(0.2, 0.2, 0.2, 8.0, 8.0, 8.0);
  g.k = vec6(0.4, 0.4, 0.3, 6.0, 6.0, 6.0);
  return g;
}

void SlidingGains::validate() const {
  require_all(c1, "sliding.c1", false);
  require_all(c2, "sliding.c2", false);
  require_all(gamma, "sliding.gamma", false);
  require_all(k, "sliding.k", false);
}

AdaptiveState AdaptiveState::defaults() {
  AdaptiveState a;
  a.k_bar = vec6(0.15, 0.1, 0.015, 0.15, 0.15, 0.025);
  a.lambda = Vector6::Constant(20.0);
  a.beta = Vector6::Constant(1e-3);
  a.k_hat = Vector6::Constant(0.01);
  return a;
}

void AdaptiveState::validate() const {
  require_all(k_bar, "adaptive.k_bar", false);
  require_all(beta, "adaptive.beta", false);
  require_all(lambda, "adaptive.lambda", false);
  require_all(k_hat, "adaptive.k_init", false);
  for (int i = 0; i < 6; ++i) {
    if (k_hat(i) < beta(i)) {
      throw ValidationError("adaptive.k_init[" + std::to_string(i) + "]", "must be >= beta");
    }
  }
}

PidGains PidGains::defaults() {
  PidGains g;
  g.kp = vec6(1.0, 1.0, 1.0, 6.0, 6.0, 6.0);
  g.ki = vec6(0.2, 0.2, 0.2, 6.0, 6.0, 6.0);
  g.kd = vec6(2.0, 2.0, 2.0, 4.0, 4.0, 4.0);
  g.integral_limit = vec6(1.0, 1.0, 1.0, 8.0, 8.0, 8.0);
  return g;
}

void PidGains::validate() const {
  require_all(kp, "pid.kp", true);
  require_all(ki, "pid.ki", true);
  require_all(kd, "pid.kd", true);
  require_all(integral_limit, "pid.integral_limit", true);
}

Vector6 tracking_error(const Vector6& eta, const Vector6& eta_r) {
  Vector6 e = eta - eta_r;
  wrap_attitude(e);
  return e;
}

Vector6 sliding_surface(const Vector6& e, const Vector6& e_dot, const Vector6& integral_e,
                        const SlidingGains& gains) {
  return e_dot + gains.c1.cwiseProduct(e) + gains.c2.cwiseProduct(integral_e);
}

namespace {

Vector6 reaching_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
                     const Vector6& c2, const Vector6& s, const SlidingGains& gains,
                     const Vector6& k, const SwitchingFunction& sgn) {
  return eta_r_ddot - gains.c1.cwiseProduct(e_dot) - c2.cwiseProduct(e) -
         gains.gamma.cwiseProduct(s) - k.cwiseProduct(sgn(s));
}

}  // namespace

Wrench ismc_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
                const Vector6& s, const SlidingGains& gains, const SwitchingFunction& sgn) {
  return Wrench::normalized(reaching_law(eta_r_ddot, e, e_dot, gains.c2, s, gains, gains.k, sgn));
}

Wrench smc_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
               const SlidingGains& gains, const SwitchingFunction& sgn) {
  const Vector6 s = e_dot + gains.c1.cwiseProduct(e);
  return Wrench::normalized(
      reaching_law(eta_r_ddot, e, e_dot, Vector6::Zero(), s, gains, gains.k, sgn));
}

Vector6 adaptive_gain_rate(const Vector6& s, const AdaptiveState& adaptive) {
  const Vector6 eps = adaptive.epsilon_hat();
  Vector6 rate;
  for (int i = 0; i < 6; ++i) {
    const double mag = std::abs(s(i));
    rate(i) = adaptive.k_hat(i) > adaptive.beta(i)
                  ? adaptive.k_bar(i) * mag * sign_of(mag - eps(i))
                  : adaptive.beta(i);
  }
  return rate;
}

AdaptiveStep aismc_law(const Vector6& eta_r_ddot, const Vector6& e, const Vector6& e_dot,
                       const Vector6& s, const SlidingGains& gains, const AdaptiveState& adaptive,
                       double dt, const SwitchingFunction& sgn) {
  AdaptiveStep step;
  step.tau_tilde = Wrench::normalized(
      reaching_law(eta_r_ddot, e, e_dot, gains.c2, s, gains, adaptive.k_hat, sgn));
  step.k_hat_rate = adaptive_gain_rate(s, adaptive);
  step.next = adaptive;
  step.next.k_hat = (adaptive.k_hat + dt * step.k_hat_rate).cwiseMax(adaptive.beta);
  return step;
}

Wrench pid_law(const Vector6& e, const Vector6& e_dot, const Vector6& integral_e,
               const PidGains& gains) {
  const Vector6 integral_term =
      gains.ki.cwiseProduct(integral_e).cwiseMax(-gains.integral_limit).cwiseMin(gains.integral_limit);
  return Wrench::normalized(-(gains.kp.cwiseProduct(e) + integral_term + gains.kd.cwiseProduct(e_dot)));
}

LyapunovDiagnostic lyapunov_diagnostic(const Vector6& s, const Vector6& gamma, const Vector6& k,
                                       const Vector6& d_estimate) {
  LyapunovDiagnostic out;
  out.v1 = 0.5 * s.squaredNorm();
  const Vector6 margin = k - d_estimate.cwiseAbs();
  out.v1_dot_bound = -s.dot(gamma.cwiseProduct(s)) - margin.dot(s.cwiseAbs());
  out.gain_dominates = (margin.array() >= 0.0).all();
  return out;
}

std::string_view to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::Pid: return "pid";
    case ControllerKind::Smc: return "smc";
    case ControllerKind::Ismc: return "ismc";
    case ControllerKind::Aismc: return "aismc";
  }
  return "?";
}

ControllerKind controller_kind_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pid") return ControllerKind::Pid;
  if (lower == "smc") return ControllerKind::Smc;
  if (lower == "ismc") return ControllerKind::Ismc;
  if (lower == "aismc") return ControllerKind::Aismc;
  throw ValidationError("controller", "unknown controller '" + std::string(name) +
                                          "' (expected pid, smc, ismc or aismc)");
}

void ControllerConfig::validate() const {
  sliding.validate();
  adaptive.validate();
  pid.validate();
  if (switching.kind != SwitchingKind::Sign && !(switching.width > 0.0)) {
    throw ValidationError("switching.width", "must be positive");
  }
}

const Vector6& ErrorIntegrator::update(const Vector6& e, double dt) {
  if (primed_) {
    value_ += 0.5 * dt * (last_ + e);
    value_ = value_.cwiseMax(-limit_).cwiseMin(limit_);
  }
  last_ = e;
  primed_ = true;
  return value_;
}

void ErrorIntegrator::reset() {
  value_.setZero();
  last_.setZero();
  primed_ = false;
}

Vector6 sliding_integral_limit(const SlidingGains& gains) {
  return Vector6::Constant(10.0 / gains.c2.maxCoeff());
}

namespace {

Vector6 integral_limit_for(const ControllerConfig& config) {
  if (config.kind != ControllerKind::Pid) return sliding_integral_limit(config.sliding);
  // The PID clamp acts on ki * int(e); the raw integral is bounded to match so
  // it cannot wind up behind the clamp.
  Vector6 limit;
  for (int i = 0; i < 6; ++i) {
    const double ki = config.pid.ki(i);
    limit(i) = ki > 0.0 ? config.pid.integral_limit(i) / ki : 0.0;
  }
  return limit;
}

}  // namespace

Controller::Controller(const ControllerConfig& config)
    : config_(config), adaptive_(config.adaptive), integrator_(integral_limit_for(config)) {
  config_.validate();
}

void Controller::reset() {
  adaptive_ = config_.adaptive;
  integrator_.reset();
}

ControlOutput Controller::update(const ControlInput& in, double dt) {
  const Vector6& integral_e = integrator_.update(in.e, dt);
  ControlOutput out;
  switch (config_.kind) {
    case ControllerKind::Pid:
      out.tau_tilde = pid_law(in.e, in.e_dot, integral_e, config_.pid);
      out.s = sliding_surface(in.e, in.e_dot, integral_e, config_.sliding);
      break;
    case ControllerKind::Smc:
      out.s = in.e_dot + config_.sliding.c1.cwiseProduct(in.e);
      out.tau_tilde = smc_law(in.eta_r_ddot, in.e, in.e_dot, config_.sliding, config_.switching);
      out.k_hat = config_.sliding.k;
      break;
    case ControllerKind::Ismc:
      out.s = sliding_surface(in.e, in.e_dot, integral_e, config_.sliding);
      out.tau_tilde =
          ismc_law(in.eta_r_ddot, in.e, in.e_dot, out.s, config_.sliding, config_.switching);
      out.k_hat = config_.sliding.k;
      break;
    case ControllerKind::Aismc: {
      out.s = sliding_surface(in.e, in.e_dot, integral_e, config_.sliding);
      const AdaptiveStep step = aismc_law(in.eta_r_ddot, in.e, in.e_dot, out.s, config_.sliding,
                                          adaptive_, dt, config_.switching);
      out.tau_tilde = step.tau_tilde;
      out.k_hat = adaptive_.k_hat;
      out.k_hat_rate = step.k_hat_rate;
      adaptive_ = step.next;
      break;
    }
  }
  out.v1 = 0.5 * out.s.squaredNorm();
  return out;
}

}  // namespace aismc
