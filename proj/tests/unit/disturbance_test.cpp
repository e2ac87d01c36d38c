#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "aismc/disturbance.hpp"
#include "aismc/errors.hpp"

using namespace aismc;

TEST(FlowDisturbance, ZeroSigmaIsSilent) {
  DisturbanceConfig c;
  c.sigma.setZero();
  Rng rng(1);
  FlowDisturbance d(c, rng);
  EXPECT_TRUE(d.current().isZero(0.0));
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(d.sample(0.005).values.isZero(0.0));
}

TEST(FlowDisturbance, SameSeedSameSequence) {
  DisturbanceConfig c;
  Rng a(77), b(77);
  FlowDisturbance da(c, a), db(c, b);
  for (int i = 0; i < 5000; ++i) {
    const Wrench wa = da.sample(0.005);
    const Wrench wb = db.sample(0.005);
    ASSERT_EQ(wa.values, wb.values);
    ASSERT_EQ(wa.frame, Frame::Body);
  }
}

TEST(FlowDisturbance, DifferentSeedsDiffer) {
  DisturbanceConfig c;
  Rng a(1), b(2);
  FlowDisturbance da(c, a), db(c, b);
  EXPECT_NE(da.sample(0.005).values, db.sample(0.005).values);
}

TEST(FlowDisturbance, StationaryStatistics) {
  DisturbanceConfig c;
  c.sigma.setOnes();
  c.correlation_time.setOnes();
  Rng rng(2024);
  FlowDisturbance d(c, rng);
  const int n = 1000000;
  const double dt = 0.01;
  const int lag = 100;  // one correlation time
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = d.sample(dt).values(0);

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= n - 1;
  double cov = 0.0;
  for (int i = 0; i + lag < n; ++i) cov += (x[i] - mean) * (x[i + lag] - mean);
  cov /= n - lag;

  EXPECT_NEAR(var, 1.0, 0.02);
  EXPECT_NEAR(cov / var, std::exp(-1.0), 0.05 * std::exp(-1.0));
  // The mean of a correlated series has variance ~ 2 t_corr / (n dt).
  EXPECT_LT(std::abs(mean), 3.0 * std::sqrt(2.0 / (n * dt)));
}

TEST(FlowDisturbance, ExactDiscretizationIsStepSizeIndependent) {
  DisturbanceConfig c;
  c.sigma.setOnes();
  c.correlation_time.setConstant(0.5);
  Rng rng(5);
  FlowDisturbance d(c, rng);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double v = d.sample(0.3).values(3);
    sum += v * v;
  }
  EXPECT_NEAR(sum / n, 1.0, 0.02);
}

TEST(DisturbanceConfig, Validation) {
  DisturbanceConfig c;
  EXPECT_NO_THROW(c.validate());
  c.sigma(2) = -1.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.correlation_time(0) = 0.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.mismatch_scale = 0.6;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(ApplyMismatch, ZeroScaleIsIdentity) {
  DisturbanceConfig c;
  c.mismatch_scale = 0.0;
  EXPECT_EQ(apply_mismatch(VehicleModel{}, c), VehicleModel{});
}

TEST(ApplyMismatch, DeterministicPerSeed) {
  DisturbanceConfig c;
  c.seed = 13;
  EXPECT_EQ(apply_mismatch(VehicleModel{}, c), apply_mismatch(VehicleModel{}, c));
  DisturbanceConfig other = c;
  other.seed = 14;
  EXPECT_NE(apply_mismatch(VehicleModel{}, c), apply_mismatch(VehicleModel{}, other));
}

TEST(ApplyMismatch, EntriesWithinScale) {
  const VehicleModel nominal;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    DisturbanceConfig c;
    c.seed = seed;
    c.mismatch_scale = 0.1;
    const VehicleModel p = apply_mismatch(nominal, c);
    auto within = [](double v, double n) { return std::abs(v / n - 1.0) <= 0.1 + 1e-12; };
    EXPECT_TRUE(within(p.mass, nominal.mass));
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(within(p.inertia(i), nominal.inertia(i)));
    for (int i = 0; i < 6; ++i) {
      EXPECT_TRUE(within(p.added_mass(i), nominal.added_mass(i)));
      EXPECT_TRUE(within(p.linear_damping(i), nominal.linear_damping(i)));
      EXPECT_TRUE(within(p.quadratic_damping(i), nominal.quadratic_damping(i)));
    }
    EXPECT_EQ(p.weight, nominal.weight);
    EXPECT_EQ(p.buoyancy, nominal.buoyancy);
  }
}

TEST(ApplyMismatch, ConsumesFixedNumberOfDraws) {
  DisturbanceConfig small, large;
  small.mismatch_scale = 0.0;
  large.mismatch_scale = 0.4;
  Rng a(3), b(3);
  (void)apply_mismatch(VehicleModel{}, small, a);
  (void)apply_mismatch(VehicleModel{}, large, b);
  EXPECT_EQ(a(), b());
}
