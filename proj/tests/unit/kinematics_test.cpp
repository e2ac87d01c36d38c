#include <gtest/gtest.h>

#include <Eigen/Geometry>
#include <random>

#include "aismc/errors.hpp"
#include "aismc/kinematics.hpp"

using namespace aismc;

namespace {

Matrix3 rotation_oracle(double phi, double theta, double psi) {
  return (Eigen::AngleAxisd(psi, Vector3::UnitZ()) * Eigen::AngleAxisd(theta, Vector3::UnitY()) *
          Eigen::AngleAxisd(phi, Vector3::UnitX()))
      .toRotationMatrix();
}

Vector3 random_attitude(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> pitch(-1.5, 1.5);
  return {angle(rng), pitch(rng), angle(rng)};
}

}  // namespace

TEST(TransformMatrix, IdentityAtZeroAttitude) {
  const TransformMatrix t = transform_matrix(Vector3::Zero());
  EXPECT_TRUE(t.full().isApprox(Matrix6::Identity(), 0.0));
}

TEST(TransformMatrix, SingularPitchThrows) {
  EXPECT_THROW((void)transform_matrix(Vector3(0.0, kPi / 2.0, 0.0)), SingularAttitude);
  EXPECT_THROW((void)transform_matrix(Vector3(0.0, -(kPi / 2.0 - 5e-4), 0.0)), SingularAttitude);
  EXPECT_NO_THROW((void)transform_matrix(Vector3(0.0, kPi / 2.0 - 2e-3, 0.0)));
}

TEST(TransformMatrix, RotationIsOrthonormalAtSampleAttitude) {
  const TransformMatrix t = transform_matrix(Vector3(0.3, -0.5, 1.1));
  EXPECT_LT((t.j1.transpose() * t.j1 - Matrix3::Identity()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(t.j1.determinant(), 1.0, 1e-9);
}

TEST(TransformMatrix, MatchesAxisAngleComposition) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Vector3 a = random_attitude(rng);
    const Matrix3 oracle = rotation_oracle(a.x(), a.y(), a.z());
    EXPECT_LT((transform_matrix(a).j1 - oracle).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(TransformMatrix, BlockDiagonalAndInvertible) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const TransformMatrix t = transform_matrix(random_attitude(rng));
    const Matrix6 j = t.full();
    EXPECT_TRUE((j.topRightCorner<3, 3>().isZero(0.0)));
    EXPECT_TRUE((j.bottomLeftCorner<3, 3>().isZero(0.0)));
    EXPECT_LT((j * t.inverse() - Matrix6::Identity()).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(TransformMatrix, AngularBlockMapsRatesToEulerDerivatives) {
  // Euler rates of a constant body rate about x at zero attitude are (p, 0, 0);
  // at phi = pi/2 a body q maps to psi_dot = q (no pitch).
  const TransformMatrix t = transform_matrix(Vector3(kPi / 2.0, 0.0, 0.0));
  const Vector3 rates = t.j2 * Vector3(0.0, 1.0, 0.0);
  EXPECT_NEAR(rates.x(), 0.0, 1e-15);
  EXPECT_NEAR(rates.y(), 0.0, 1e-15);
  EXPECT_NEAR(rates.z(), 1.0, 1e-15);
}

TEST(TransformMatrix, YawOnlyKeepsVerticalRow) {
  const TransformMatrix t = transform_matrix(Vector3(0.0, 0.0, 2.3));
  EXPECT_EQ(t.j1.row(2), Eigen::RowVector3d(0.0, 0.0, 1.0));
}

TEST(BodyToEarthRates, Examples) {
  VehicleState s;
  s.nu << 1, 0, 0, 0, 0, 0;
  EXPECT_TRUE(body_to_earth_rates(s).isApprox((Vector6() << 1, 0, 0, 0, 0, 0).finished()));

  s.eta << 0, 0, 0, 0, 0, kPi / 2.0;
  const Vector6 rates = body_to_earth_rates(s);
  EXPECT_NEAR(rates(0), 0.0, 1e-15);
  EXPECT_NEAR(rates(1), 1.0, 1e-15);
  EXPECT_TRUE(rates.tail<4>().isZero(1e-15));

  s.eta << 1, 2, 3, 0.4, -0.7, 2.0;
  s.nu.setZero();
  EXPECT_TRUE(body_to_earth_rates(s).isZero(0.0));
}

TEST(TransformMatrixDerivative, ZeroRatesGiveZero) {
  EXPECT_TRUE(transform_matrix_derivative(Vector3(0.2, 0.3, -1.0), Vector3::Zero()).isZero(0.0));
}

TEST(TransformMatrixDerivative, MatchesFiniteDifferenceAtOrigin) {
  const double h = 1e-5;
  const Vector3 rate(0, 0, 1);
  const Matrix6 fd = (transform_matrix(h * rate).full() - transform_matrix(-h * rate).full()) / (2 * h);
  const Matrix6 analytic = transform_matrix_derivative(Vector3::Zero(), rate);
  EXPECT_LT((analytic - fd).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(TransformMatrixDerivative, MatchesFiniteDifferenceRandom) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> pitch(-1.3, 1.3);
  std::uniform_real_distribution<double> rate(-2.0, 2.0);
  const double h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const Vector3 a(angle(rng), pitch(rng), angle(rng));
    const Vector3 r(rate(rng), rate(rng), rate(rng));
    const Matrix6 fd = (transform_matrix(a + h * r).full() - transform_matrix(a - h * r).full()) / (2 * h);
    EXPECT_LT((transform_matrix_derivative(a, r) - fd).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(WrapAngle, HalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(6.2), 6.2 - 2 * kPi, 1e-15);
  EXPECT_DOUBLE_EQ(wrap_angle(0.5), 0.5);
}

TEST(WrapAttitude, OnlyAngles) {
  Vector6 eta;
  eta << 10, -10, 7, 4.0, 0.1, -4.0;
  wrap_attitude(eta);
  EXPECT_EQ(eta.head<3>(), Vector3(10, -10, 7));
  EXPECT_NEAR(eta(3), 4.0 - 2 * kPi, 1e-15);
  EXPECT_NEAR(eta(5), -4.0 + 2 * kPi, 1e-15);
}
