#include <gtest/gtest.h>

#include <cmath>

#include "pursuit/dynamics.hpp"
#include "test_support.hpp"

namespace pursuit {
namespace {

DroneState at_rest(Vec3 p) {
  DroneState s;
  s.position = p;
  return s;
}

QuadrotorParams instant() {
  QuadrotorParams p;
  p.velocity_time_constant = 0.0;
  return p;
}

TEST(VelocityModel, InstantTrackingIsOneEulerStep) {
  const ArenaSpec arena;
  const DroneState next =
      step_velocity_model(at_rest({0.01, 0, 0.6}), {{1, 0, 0}}, instant(), arena);
  EXPECT_EQ(next.velocity, (Vec3{1, 0, 0}));
  EXPECT_DOUBLE_EQ(next.position.x, 0.03);
  EXPECT_EQ(next.position.y, 0.0);
  EXPECT_EQ(next.position.z, 0.6);
}

TEST(VelocityModel, CommandIsClampedToMaxSpeed) {
  const DroneState next =
      step_velocity_model(at_rest({0, 0, 0.6}), {{3, 0, 0}}, instant(), ArenaSpec{});
  EXPECT_EQ(next.velocity, (Vec3{1, 0, 0}));
}

TEST(VelocityModel, FirstOrderLagMatchesClosedForm) {
  // v_k = v_cmd (1 - exp(-k dt / tau)), x_k = dt * sum_{j<=k} v_j.
  QuadrotorParams p;
  p.velocity_time_constant = 0.05;
  const ArenaSpec arena;
  DroneState s = at_rest({-0.5, 0, 0.6});
  const double cmd = 0.8;
  double x = -0.5;
  for (int k = 1; k <= 30; ++k) {
    s = step_velocity_model(s, {{cmd, 0, 0}}, p, arena);
    const double v = cmd * (1.0 - std::exp(-k * p.dt / p.velocity_time_constant));
    x += p.dt * v;
    ASSERT_NEAR(s.velocity.x, v, 1e-12) << "step " << k;
    ASSERT_NEAR(s.position.x, x, 1e-12) << "step " << k;
  }
}

TEST(VelocityModel, OrientationFollowsHeading) {
  const DroneState next =
      step_velocity_model(at_rest({0, 0, 0.6}), {{0, 1, 0}}, instant(), ArenaSpec{});
  test::expect_vec_near(next.orientation.rotate({1, 0, 0}), {0, 1, 0}, 1e-12);
}

TEST(VelocityModel, WallRemovesOutwardVelocity) {
  DroneState s = at_rest({0.895, 0, 0.6});
  const DroneState next = step_velocity_model(s, {{1, 0, 0}}, instant(), ArenaSpec{});
  EXPECT_DOUBLE_EQ(next.position.x, 0.9);
  EXPECT_EQ(next.velocity.x, 0.0);
}

TEST(QuadrotorModel, HoverIsAnEquilibrium) {
  const QuadrotorParams p;
  const DroneState s = at_rest({0.1, 0.2, 0.6});
  DroneState next = s;
  for (int k = 0; k < 100; ++k) {
    next = step_quadrotor_model(next, {p.mass * p.gravity, {}}, p, ArenaSpec{});
  }
  EXPECT_EQ(next.velocity, (Vec3{}));
  EXPECT_EQ(next.position, s.position);
}

TEST(QuadrotorModel, FreeFallGainsGravityTimesDt) {
  const QuadrotorParams p;
  const DroneState next = step_quadrotor_model(at_rest({0, 0, 0.6}), {0.0, {}}, p, ArenaSpec{});
  EXPECT_NEAR(next.velocity.z, -0.1962, 1e-15);
}

TEST(QuadrotorModel, ThrustIsClampedAndSpeedCapped) {
  QuadrotorParams p;
  p.max_speed = 0.5;
  DroneState s = at_rest({0, 0, 0.1});
  for (int k = 0; k < 50; ++k) s = step_quadrotor_model(s, {100.0, {}}, p, ArenaSpec{});
  EXPECT_LE(norm(s.velocity), 0.5 + 1e-12);
  // Max thrust is 2 m g: net upward acceleration g for one step.
  const DroneState one = step_quadrotor_model(at_rest({0, 0, 0.6}), {100.0, {}}, QuadrotorParams{},
                                              ArenaSpec{});
  EXPECT_NEAR(one.velocity.z, 0.1962, 1e-15);
}

TEST(QuadrotorModel, QuaternionStaysNormalized) {
  QuadrotorParams p;
  DroneState s = at_rest({0, 0, 0.6});
  for (int k = 0; k < 1000; ++k) {
    s = step_quadrotor_model(s, {p.mass * p.gravity, {3.0, -2.0, 5.0}}, p, ArenaSpec{});
    ASSERT_NEAR(s.orientation.norm(), 1.0, 1e-12);
  }
}

TEST(QuadrotorModel, BodyRateLagsTheCommand) {
  const QuadrotorParams p;
  const DroneState next =
      step_quadrotor_model(at_rest({0, 0, 0.6}), {p.mass * p.gravity, {0, 0, 1.0}}, p, ArenaSpec{});
  EXPECT_NEAR(next.body_rate.z, 1.0 - std::exp(-p.dt / p.rate_time_constant), 1e-15);
}

TEST(ArenaClamp, Examples) {
  const ArenaSpec arena;
  EXPECT_EQ(clamp_to_arena({0.5, 0, 0.6}, arena), (Vec3{0.5, 0, 0.6}));
  EXPECT_EQ(clamp_to_arena({1.8, 0, 0.6}, arena), (Vec3{0.9, 0, 0.6}));
  EXPECT_EQ(clamp_to_arena({0, 0, -0.3}, arena), (Vec3{0, 0, 0}));
  EXPECT_EQ(clamp_to_arena({0, 0, 2.0}, arena), (Vec3{0, 0, 1.2}));
}

TEST(Dispatch, StepDroneRoutesByCommandKind) {
  const QuadrotorParams p = instant();
  const DroneState s = at_rest({0, 0, 0.6});
  EXPECT_EQ(step_drone(s, VelocityCommand{{1, 0, 0}}, p, ArenaSpec{}),
            step_velocity_model(s, {{1, 0, 0}}, p, ArenaSpec{}));
  EXPECT_EQ(step_drone(s, ThrustRateCommand{0.1, {}}, p, ArenaSpec{}),
            step_quadrotor_model(s, {0.1, {}}, p, ArenaSpec{}));
}

TEST(Validation, RejectsNonPositiveParameters) {
  QuadrotorParams p;
  p.dt = 0.0;
  EXPECT_THROW(validate(p), std::invalid_argument);
  p = {};
  p.velocity_time_constant = -1.0;
  EXPECT_THROW(validate(p), std::invalid_argument);
}

}  // namespace
}  // namespace pursuit
