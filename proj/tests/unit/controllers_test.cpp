#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "aismc/controllers.hpp"
#include "aismc/errors.hpp"

using namespace aismc;

namespace {

Vector6 unit(int axis, double value) {
  Vector6 v = Vector6::Zero();
  v(axis) = value;
  return v;
}

}  // namespace

TEST(TrackingError, WrapsAttitudeOnly) {
  const Vector6 eta = (Vector6() << 1, 2, 3, 0.1, 0.2, 3.1).finished();
  Vector6 eta_r = eta;
  EXPECT_TRUE(tracking_error(eta, eta_r).isZero(0.0));

  eta_r(kYaw) = -3.1;
  const Vector6 e = tracking_error(eta, eta_r);
  EXPECT_NEAR(e(kYaw), 6.2 - 2 * kPi, 1e-12);
  EXPECT_NEAR(e(kYaw), -0.083, 5e-4);

  Vector6 offset = eta;
  offset.head<3>() += Vector3(20.0, -15.0, 9.0);
  const Vector6 pos = tracking_error(offset, eta);
  EXPECT_EQ(pos.head<3>(), Vector3(20.0, -15.0, 9.0));
  EXPECT_TRUE(pos.tail<3>().isZero(0.0));
}

TEST(SlidingSurface, Examples) {
  const SlidingGains g = SlidingGains::defaults();
  EXPECT_TRUE(sliding_surface(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), g).isZero(0.0));
  EXPECT_NEAR(sliding_surface(unit(kPitch, 0.1), Vector6::Zero(), Vector6::Zero(), g)(kPitch), 0.085,
              1e-15);
  EXPECT_NEAR(sliding_surface(Vector6::Zero(), Vector6::Zero(), unit(kYaw, 0.2), g)(kYaw), 0.3, 1e-15);
}

TEST(SwitchingFunction, BoundedAndExactOutsideLayer) {
  for (SwitchingKind kind : {SwitchingKind::Saturation, SwitchingKind::Tanh, SwitchingKind::Sign}) {
    const SwitchingFunction f{kind, 0.01};
    for (double x = -1.0; x <= 1.0; x += 0.001) EXPECT_LE(std::abs(f(x)), 1.0);
    EXPECT_EQ(f(0.0), 0.0);
  }
  const SwitchingFunction sat{SwitchingKind::Saturation, 0.01};
  EXPECT_EQ(sat(0.01), 1.0);
  EXPECT_EQ(sat(-0.5), -1.0);
  EXPECT_DOUBLE_EQ(sat(0.005), 0.5);
  const SwitchingFunction sign{SwitchingKind::Sign, 0.01};
  EXPECT_EQ(sign(1e-9), 1.0);
  EXPECT_EQ(sign(-1e-9), -1.0);
  const SwitchingFunction th{SwitchingKind::Tanh, 0.01};
  EXPECT_NEAR(th(0.2), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(th(0.005), std::tanh(0.5));
}

TEST(IsmcLaw, QuiescentOnSurface) {
  const SlidingGains g = SlidingGains::defaults();
  EXPECT_TRUE(ismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), g).values.isZero(0.0));
}

TEST(IsmcLaw, SaturatedSwitchingContributesGain) {
  SlidingGains g = SlidingGains::defaults();
  g.k(kPitch) = 0.15;
  g.gamma.setZero();
  const Wrench w = ismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), unit(kPitch, 0.05), g);
  EXPECT_EQ(w.frame, Frame::NormalizedAcceleration);
  EXPECT_DOUBLE_EQ(w.values(kPitch), -0.15);
}

TEST(IsmcLaw, ComponentsMatchDefinition) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SlidingGains g = SlidingGains::defaults();
  const SwitchingFunction sgn{SwitchingKind::Tanh, 0.05};
  for (int n = 0; n < 100; ++n) {
    Vector6 acc, e, ed, s;
    for (int i = 0; i < 6; ++i) {
      acc(i) = u(rng);
      e(i) = u(rng);
      ed(i) = u(rng);
      s(i) = u(rng);
    }
    const Vector6 out = ismc_law(acc, e, ed, s, g, sgn).values;
    for (int i = 0; i < 6; ++i) {
      const double expected = acc(i) - g.c1(i) * ed(i) - g.c2(i) * e(i) - g.gamma(i) * s(i) -
                              g.k(i) * std::tanh(s(i) / 0.05);
      EXPECT_NEAR(out(i), expected, 1e-14);
    }
  }
}

TEST(SmcLaw, EqualsIsmcWithoutIntegralGain) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SlidingGains g = SlidingGains::defaults();
  EXPECT_TRUE(smc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), g).values.isZero(0.0));
  SlidingGains no_integral = g;
  no_integral.c2.setZero();
  for (int n = 0; n < 50; ++n) {
    Vector6 acc, e, ed;
    for (int i = 0; i < 6; ++i) {
      acc(i) = u(rng);
      e(i) = u(rng);
      ed(i) = u(rng);
    }
    const Vector6 s = sliding_surface(e, ed, Vector6::Zero(), no_integral);
    EXPECT_LT((smc_law(acc, e, ed, g).values - ismc_law(acc, e, ed, s, no_integral).values).cwiseAbs().maxCoeff(),
              1e-15);
  }
}

TEST(AdaptiveGainRate, Examples) {
  AdaptiveState a = AdaptiveState::defaults();
  ASSERT_NEAR(a.epsilon_hat()(kPitch), 0.2, 1e-15);
  EXPECT_NEAR(adaptive_gain_rate(unit(kPitch, 0.3), a)(kPitch), 0.045, 1e-15);
  EXPECT_NEAR(adaptive_gain_rate(unit(kPitch, -0.1), a)(kPitch), -0.015, 1e-15);
  a.k_hat(kPitch) = a.beta(kPitch);
  EXPECT_EQ(adaptive_gain_rate(unit(kPitch, 0.3), a)(kPitch), a.beta(kPitch));
}

TEST(AismcLaw, EulerStepAndFloor) {
  const SlidingGains g = SlidingGains::defaults();
  AdaptiveState a = AdaptiveState::defaults();
  const AdaptiveStep up = aismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), unit(kPitch, 0.3), g, a, 0.05);
  EXPECT_NEAR(up.next.k_hat(kPitch), 0.01 + 0.05 * 0.045, 1e-15);
  EXPECT_EQ(up.k_hat_rate(kPitch), adaptive_gain_rate(unit(kPitch, 0.3), a)(kPitch));

  // A large decay step stops at the floor.
  const AdaptiveStep down = aismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), unit(kPitch, 0.1), g, a, 10.0);
  EXPECT_EQ(down.next.k_hat(kPitch), a.beta(kPitch));

  // Switching term uses the current k_hat, not the updated one.
  SlidingGains no_gamma = g;
  no_gamma.gamma.setZero();
  const AdaptiveStep sw = aismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), unit(kPitch, 0.3), no_gamma, a, 0.05);
  EXPECT_DOUBLE_EQ(sw.tau_tilde.values(kPitch), -0.01);
}

TEST(AismcLaw, AdaptationSignProperty) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  const SlidingGains g = SlidingGains::defaults();
  AdaptiveState a = AdaptiveState::defaults();
  for (int n = 0; n < 2000; ++n) {
    Vector6 s;
    for (int i = 0; i < 6; ++i) s(i) = u(rng);
    const AdaptiveStep step = aismc_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), s, g, a, 0.05);
    const Vector6 eps = a.epsilon_hat();
    for (int i = 0; i < 6; ++i) {
      const double delta = step.next.k_hat(i) - a.k_hat(i);
      ASSERT_GE(step.next.k_hat(i), a.beta(i));
      if (std::abs(s(i)) > eps(i)) {
        ASSERT_GE(delta, 0.0);
      }
      if (std::abs(s(i)) < eps(i) && a.k_hat(i) > a.beta(i)) {
        ASSERT_LE(delta, 0.0);
      }
    }
    a = step.next;
  }
}

TEST(PidLaw, Examples) {
  PidGains g = PidGains::defaults();
  EXPECT_TRUE(pid_law(Vector6::Zero(), Vector6::Zero(), Vector6::Zero(), g).values.isZero(0.0));
  g.ki.setZero();
  const Vector6 e = (Vector6() << 0.1, 0.2, 0.3, 0.4, 0.5, 0.6).finished();
  const Vector6 ed = (Vector6() << -0.1, 0.0, 0.1, 0.2, -0.2, 0.3).finished();
  const Vector6 expected = -(g.kp.cwiseProduct(e) + g.kd.cwiseProduct(ed));
  EXPECT_EQ(pid_law(e, ed, Vector6::Constant(100.0), g).values, expected);
}

TEST(PidLaw, IntegralClampHolds) {
  ControllerConfig c;
  c.kind = ControllerKind::Pid;
  Controller pid(c);
  ControlInput in{Vector6::Constant(0.5), Vector6::Zero(), Vector6::Zero()};
  for (int i = 0; i < 2000; ++i) {
    const ControlOutput out = pid.update(in, 0.05);
    const Vector6 integral_term = -out.tau_tilde.values - c.pid.kp.cwiseProduct(in.e);
    EXPECT_TRUE((integral_term.cwiseAbs().array() <= c.pid.integral_limit.array() + 1e-12).all());
  }
  const Vector6 final_term = c.pid.ki.cwiseProduct(pid.integral());
  EXPECT_LT((final_term - c.pid.integral_limit).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Controller, AllKindsQuiescentOnSurface) {
  for (ControllerKind kind : {ControllerKind::Pid, ControllerKind::Smc, ControllerKind::Ismc, ControllerKind::Aismc}) {
    ControllerConfig c;
    c.kind = kind;
    Controller ctl(c);
    for (int i = 0; i < 5; ++i) {
      const ControlOutput out = ctl.update({Vector6::Zero(), Vector6::Zero(), Vector6::Zero()}, 0.05);
      EXPECT_TRUE(out.tau_tilde.values.isZero(0.0)) << to_string(kind);
      EXPECT_EQ(out.v1, 0.0);
    }
  }
}

TEST(Controller, TrapezoidalIntegralAndReset) {
  ControllerConfig c;
  c.kind = ControllerKind::Ismc;
  Controller ctl(c);
  (void)ctl.update({unit(kRoll, 0.0), Vector6::Zero(), Vector6::Zero()}, 0.05);
  (void)ctl.update({unit(kRoll, 0.2), Vector6::Zero(), Vector6::Zero()}, 0.05);
  EXPECT_NEAR(ctl.integral()(kRoll), 0.005, 1e-15);
  ctl.reset();
  EXPECT_TRUE(ctl.integral().isZero(0.0));
  EXPECT_EQ(ctl.adaptive(), c.adaptive);
}

TEST(Controller, IntegralClampForSlidingControllers) {
  const Vector6 limit = sliding_integral_limit(SlidingGains::defaults());
  EXPECT_TRUE(limit.isApprox(Vector6::Constant(5.0)));
  ErrorIntegrator integ(limit);
  for (int i = 0; i < 10000; ++i) integ.update(Vector6::Constant(1.0), 0.05);
  EXPECT_EQ(integ.value(), limit);
}

TEST(Controller, AdaptiveGainNeverBelowFloor) {
  ControllerConfig c;
  Controller ctl(c);
  std::mt19937_64 rng(6);
  std::normal_distribution<double> n(0.0, 0.2);
  for (int i = 0; i < 5000; ++i) {
    Vector6 e;
    for (int j = 0; j < 6; ++j) e(j) = n(rng);
    (void)ctl.update({e, Vector6::Zero(), Vector6::Zero()}, 0.05);
    ASSERT_TRUE((ctl.adaptive().k_hat.array() >= c.adaptive.beta.array()).all());
  }
}

TEST(Controller, ConfigValidation) {
  ControllerConfig c;
  c.sliding.c1(kPitch) = 0.0;
  EXPECT_THROW(Controller{c}, ValidationError);
  c = {};
  c.adaptive.k_hat(kYaw) = 0.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.switching.width = 0.0;
  EXPECT_THROW(c.validate(), ValidationError);
  EXPECT_EQ(controller_kind_from_string("AISMC"), ControllerKind::Aismc);
  EXPECT_THROW((void)controller_kind_from_string("lqr"), ValidationError);
}

TEST(LyapunovDiagnostic, Examples) {
  const Vector6 gamma = SlidingGains::defaults().gamma;
  const LyapunovDiagnostic zero = lyapunov_diagnostic(Vector6::Zero(), gamma, Vector6::Ones(), Vector6::Zero());
  EXPECT_EQ(zero.v1, 0.0);
  EXPECT_EQ(zero.v1_dot_bound, 0.0);

  const Vector6 s = (Vector6() << 0.1, -0.2, 0.05, 0.3, -0.1, 0.02).finished();
  const LyapunovDiagnostic d = lyapunov_diagnostic(s, gamma, Vector6::Constant(2.0), Vector6::Constant(1.0));
  EXPECT_TRUE(d.gain_dominates);
  EXPECT_LT(d.v1_dot_bound, 0.0);
  EXPECT_DOUBLE_EQ(d.v1, 0.5 * s.squaredNorm());
  EXPECT_FALSE(lyapunov_diagnostic(s, gamma, Vector6::Constant(0.5), Vector6::Constant(1.0)).gain_dominates);
}

namespace {

// 1-DOF double integrator x_ddot = u + d driven by one sliding law channel.
struct OneDof {
  double x = 0.0, v = 0.0, integral = 0.0;
};

double simulate_1dof(bool with_integral, double d, double k) {
  SlidingGains g = SlidingGains::defaults();
  g.k.setConstant(k);
  const SwitchingFunction sgn{SwitchingKind::Saturation, 0.01};
  OneDof st;
  st.x = 0.2;
  const double dt = 1e-3;
  for (int i = 0; i < 60000; ++i) {
    const Vector6 e = unit(kPitch, st.x);
    const Vector6 ed = unit(kPitch, st.v);
    double u;
    if (with_integral) {
      const Vector6 s = sliding_surface(e, ed, unit(kPitch, st.integral), g);
      u = ismc_law(Vector6::Zero(), e, ed, s, g, sgn).values(kPitch);
    } else {
      u = smc_law(Vector6::Zero(), e, ed, g, sgn).values(kPitch);
    }
    st.integral += dt * st.x;
    st.v += dt * (u + d);
    st.x += dt * st.v;
  }
  return st.x;
}

}  // namespace

TEST(SmcLaw, ConstantDisturbanceAboveGainLeavesOffset) {
  const double d = 0.5, k = 0.1;
  EXPECT_GT(std::abs(simulate_1dof(false, d, k)), 0.01);
  EXPECT_LT(std::abs(simulate_1dof(true, d, k)), 1e-4);
}

TEST(IsmcLaw, ExponentialDecayOnSurface) {
  // With s(0) = 0 and no disturbance s stays zero, so z = int(e) obeys
  // z'' + c1 z' + c2 z = 0 with z(0) = 0, z'(0) = e0.
  const SlidingGains g = SlidingGains::defaults();
  const double c1 = g.c1(kPitch), c2 = g.c2(kPitch);
  const double e0 = 0.1;
  const double alpha = c1 / 2.0, omega = std::sqrt(c2 - alpha * alpha);
  auto closed_form = [&](double t) {
    return e0 * std::exp(-alpha * t) * (std::cos(omega * t) - alpha / omega * std::sin(omega * t));
  };

  using State = Eigen::Vector3d;  // e, e_dot, int(e)
  auto rhs = [&](const State& x) {
    const Vector6 e = unit(kPitch, x(0)), ed = unit(kPitch, x(1)), ie = unit(kPitch, x(2));
    const Vector6 s = sliding_surface(e, ed, ie, g);
    const double u = ismc_law(Vector6::Zero(), e, ed, s, g).values(kPitch);
    return State(x(1), u, x(0));
  };
  State x(e0, -c1 * e0, 0.0);
  const double dt = 1e-3;
  double worst = 0.0;
  for (int i = 1; i <= 10000; ++i) {
    const State k1 = rhs(x), k2 = rhs(x + 0.5 * dt * k1), k3 = rhs(x + 0.5 * dt * k2), k4 = rhs(x + dt * k3);
    x += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    worst = std::max(worst, std::abs(x(0) - closed_form(i * dt)));
  }
  EXPECT_LT(worst, 1e-6);
}
