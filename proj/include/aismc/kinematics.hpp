#pragma once

#include "aismc/types.hpp"

namespace aismc {

/// Pose eta = [x, y, z, phi, theta, psi] (earth frame) and body velocity
/// nu = [u, v, w, p, q, r].
struct VehicleState {
  Vector6 eta = Vector6::Zero();
  Vector6 nu = Vector6::Zero();

  bool operator==(const VehicleState&) const = default;
};

/// Width of the guard band below |theta| = pi/2 where the Euler transform is
/// rejected.
inline constexpr double kSingularTolerance = 1e-3;

/// Body-to-earth transform J = blkdiag(J1, J2).
struct TransformMatrix {
  Matrix3 j1;  ///< rotation, body linear velocity -> earth position rate
  Matrix3 j2;  ///< body angular rate -> Euler angle rate
  Matrix3 j2_inverse;

  [[nodiscard]] Matrix6 full() const;
  /// blkdiag(J1^T, J2^-1), no numerical inversion.
  [[nodiscard]] Matrix6 inverse() const;
};

/// Throws SingularAttitude when |theta| >= pi/2 - kSingularTolerance.
void check_attitude(const Vector3& euler);

[[nodiscard]] TransformMatrix transform_matrix(const Vector3& euler);

/// eta_dot = J(eta) nu.
[[nodiscard]] Vector6 body_to_earth_rates(const VehicleState& state);

/// Time derivative of J along the given Euler-angle rates.
[[nodiscard]] Matrix6 transform_matrix_derivative(const Vector3& euler, const Vector3& euler_rate);

/// Wraps to (-pi, pi].
[[nodiscard]] double wrap_angle(double angle);

/// Wraps the three attitude components of a pose in place.
void wrap_attitude(Vector6& eta);

[[nodiscard]] inline Vector3 attitude_of(const Vector6& eta) { return eta.tail<3>(); }

}  // namespace aismc
