#include "aismc/kinematics.hpp"

#include <cmath>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

// Elementary rotations of the z-y-x Euler sequence and their derivatives
// with respect to their own angle.
Matrix3 rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Matrix3 rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Matrix3 rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Matrix3 rot_x_prime(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << 0, 0, 0, 0, -s, -c, 0, c, -s;
  return r;
}

Matrix3 rot_y_prime(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << -s, 0, c, 0, 0, 0, -c, 0, -s;
  return r;
}

Matrix3 rot_z_prime(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3 r;
  r << -s, -c, 0, c, -s, 0, 0, 0, 0;
  return r;
}

}  // namespace

Matrix6 TransformMatrix::full() const {
  Matrix6 j = Matrix6::Zero();
  j.topLeftCorner<3, 3>() = j1;
  j.bottomRightCorner<3, 3>() = j2;
  return j;
}

Matrix6 TransformMatrix::inverse() const {
  Matrix6 inv = Matrix6::Zero();
  inv.topLeftCorner<3, 3>() = j1.transpose();
  inv.bottomRightCorner<3, 3>() = j2_inverse;
  return inv;
}

void check_attitude(const Vector3& euler) {
  const double theta = euler(1);
  if (!std::isfinite(theta) || std::abs(theta) >= kPi / 2.0 - kSingularTolerance) {
    throw SingularAttitude(theta);
  }
}

TransformMatrix transform_matrix(const Vector3& euler) {
  check_attitude(euler);
  const double phi = euler(0), theta = euler(1), psi = euler(2);
  const double sphi = std::sin(phi), cphi = std::cos(phi);
  const double cth = std::cos(theta), tth = std::tan(theta);

  TransformMatrix t;
  t.j1 = rot_z(psi) * rot_y(theta) * rot_x(phi);
  t.j2 << 1, sphi * tth, cphi * tth,
          0, cphi, -sphi,
          0, sphi / cth, cphi / cth;
  t.j2_inverse << 1, 0, -std::sin(theta),
                  0, cphi, cth * sphi,
                  0, -sphi, cth * cphi;
  return t;
}

Vector6 body_to_earth_rates(const VehicleState& state) {
  const TransformMatrix t = transform_matrix(attitude_of(state.eta));
  Vector6 eta_dot;
  eta_dot.head<3>() = t.j1 * state.nu.head<3>();
  eta_dot.tail<3>() = t.j2 * state.nu.tail<3>();
  return eta_dot;
}

Matrix6 transform_matrix_derivative(const Vector3& euler, const Vector3& euler_rate) {
  check_attitude(euler);
  const double phi = euler(0), theta = euler(1), psi = euler(2);
  const double dphi = euler_rate(0), dtheta = euler_rate(1), dpsi = euler_rate(2);

  const Matrix3 rx = rot_x(phi), ry = rot_y(theta), rz = rot_z(psi);
  const Matrix3 j1_dot = rot_z_prime(psi) * ry * rx * dpsi +
                         rz * rot_y_prime(theta) * rx * dtheta +
                         rz * ry * rot_x_prime(phi) * dphi;

  const double sphi = std::sin(phi), cphi = std::cos(phi);
  const double sth = std::sin(theta), cth = std::cos(theta), tth = std::tan(theta);
  const double sec2 = 1.0 / (cth * cth);

  Matrix3 j2_dot;
  j2_dot << 0, cphi * tth * dphi + sphi * sec2 * dtheta, -sphi * tth * dphi + cphi * sec2 * dtheta,
            0, -sphi * dphi, -cphi * dphi,
            0, cphi / cth * dphi + sphi * sth * sec2 * dtheta, -sphi / cth * dphi + cphi * sth * sec2 * dtheta;

  Matrix6 j_dot = Matrix6::Zero();
  j_dot.topLeftCorner<3, 3>() = j1_dot;
  j_dot.bottomRightCorner<3, 3>() = j2_dot;
  return j_dot;
}

double wrap_angle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

void wrap_attitude(Vector6& eta) {
  for (int i = kRoll; i <= kYaw; ++i) eta(i) = wrap_angle(eta(i));
}

}  // namespace aismc
