#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "aismc/config.hpp"
#include "aismc/errors.hpp"

using namespace aismc;

TEST(ParseConfig, EmptyDocumentGivesDefaults) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c, RunConfig{});
  EXPECT_EQ(c.sim.task, TaskId::ZeroHold);
  EXPECT_EQ(c.sim.controller.kind, ControllerKind::Aismc);
  EXPECT_EQ(c.sim.vehicle.mass, 13.5);
  EXPECT_EQ(c.sim.vehicle.max_thrust, 15.4);
  EXPECT_EQ(c.sim.controller.sliding.c1(kPitch), 0.85);
  EXPECT_EQ(c.sim.controller.sliding.c2(kYaw), 1.5);
  EXPECT_EQ(parse_config("# only a comment\n"), RunConfig{});
}

TEST(ParseConfig, FieldMapping) {
  const RunConfig c = parse_config(
      "task: 3\n"
      "controller: aismc\n"
      "timing:\n  duration: 20\n"
      "disturbance:\n  seed: 42\n  sigma: [1, 1, 1, 0.05, 0.05, 0.05]\n"
      "sliding:\n  gamma: 4\n"
      "evaluation:\n  window_start: 10\n");
  EXPECT_EQ(c.sim.task, TaskId::PitchSine);
  EXPECT_EQ(c.sim.timing.duration, 20.0);
  EXPECT_EQ(c.sim.disturbance.seed, 42u);
  EXPECT_EQ(c.sim.disturbance.sigma(kRoll), 0.05);
  EXPECT_EQ(c.sim.controller.sliding.gamma, Vector6::Constant(4.0));
  EXPECT_EQ(c.window.start, 10.0);
}

TEST(ParseConfig, NonDivisorTimestep) {
  try {
    (void)parse_config("timing:\n  dt_physics: 0.03\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "timing.dt_physics");
  }
}

TEST(ParseConfig, SyntaxErrorReportsLine) {
  try {
    (void)parse_config("task: 1\ntiming: [\n  duration: 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0u);
  }
}

TEST(ParseConfig, UnknownKeyNamesField) {
  try {
    (void)parse_config("sliding:\n  c3: 1\n");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(e.field().find("sliding.c3"), std::string::npos);
  }
}

TEST(ParseConfig, MissingOrMalformedGains) {
  EXPECT_THROW((void)parse_config("sliding:\n  c1:\n"), ValidationError);
  EXPECT_THROW((void)parse_config("sliding:\n  k: [1, 2]\n"), ValidationError);
  EXPECT_THROW((void)parse_config("adaptive:\n  k_bar: -1\n"), ValidationError);
  EXPECT_THROW((void)parse_config("pid:\n  kp: abc\n"), ValidationError);
}

TEST(ParseConfig, RejectsInvalidValues) {
  EXPECT_THROW((void)parse_config("task: 7\n"), ValidationError);
  EXPECT_THROW((void)parse_config("controller: lqr\n"), ValidationError);
  EXPECT_THROW((void)parse_config("disturbance:\n  mismatch_scale: 0.8\n"), ValidationError);
  EXPECT_THROW((void)parse_config("evaluation:\n  window_start: 5\n  window_end: 1\n"), ValidationError);
  EXPECT_THROW((void)parse_config("compare:\n  controllers: [pid, aismc]\n"), ValidationError);
  EXPECT_THROW((void)parse_config("compare:\n  seeds: [1, 1]\n"), ValidationError);
  EXPECT_THROW((void)parse_config("sweep:\n  axes:\n    - parameter: sliding.c9\n      scales: [1]\n"),
               ValidationError);
  EXPECT_THROW((void)parse_config("reference:\n  step_amplitude: 1.5707963267948966\n"), ValidationError);
}

TEST(EmitConfig, RoundTripDefaults) {
  const RunConfig c;
  EXPECT_EQ(parse_config(emit_config(c)), c);
}

TEST(EmitConfig, RoundTripEdited) {
  RunConfig c;
  c.sim.task = TaskId::PitchStep;
  c.sim.controller.kind = ControllerKind::Smc;
  c.sim.controller.switching = {SwitchingKind::Tanh, 0.02};
  c.sim.controller.sliding.k(kYaw) = 1.0 / 3.0;
  c.sim.disturbance.seed = 18446744073709551615ull;
  c.sim.disturbance.sigma(kX) = 0.1 + 0.2;
  c.sim.initial_state.eta(kPitch) = -0.2;
  c.sim.noise.enabled = true;
  c.window = {10.0, std::numeric_limits<double>::infinity()};
  c.output = {"some dir", "p"};
  c.compare.tasks = {2};
  c.compare.seeds = {3, 1, 2};
  c.sweep.axes = {{"sliding.gamma", {0.5, 1.0, 2.0}}, {"adaptive.k_bar", {1.0}}};
  const std::string text = emit_config(c);
  const RunConfig back = parse_config(text);
  EXPECT_EQ(back, c) << text;
  EXPECT_EQ(emit_config(back), text);
}

TEST(LoadConfig, MissingFileIsIoError) {
  EXPECT_THROW((void)load_config("/nonexistent/dir/config.yaml"), IoError);
}

TEST(GainVector, KnownAndUnknownNames) {
  ControllerConfig c;
  for (const std::string& name : sweep_parameters()) EXPECT_NO_THROW((void)gain_vector(c, name));
  gain_vector(c, "pid.kd") *= 2.0;
  EXPECT_EQ(c.pid.kd, 2.0 * PidGains::defaults().kd);
  EXPECT_THROW((void)gain_vector(c, "vehicle.mass"), ValidationError);
}

TEST(ExampleConfigs, AllParse) {
  const std::filesystem::path dir = std::filesystem::path(AISMC_SOURCE_DIR) / "configs";
  if (!std::filesystem::exists(dir)) GTEST_SKIP() << "no configs directory";
  int parsed = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".yaml") continue;
    EXPECT_NO_THROW((void)load_config(entry.path().string())) << entry.path();
    ++parsed;
  }
  EXPECT_GT(parsed, 0);
}
