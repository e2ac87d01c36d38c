#pragma once

#include <Eigen/Dense>

namespace aismc {

using Vector3 = Eigen::Vector3d;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Vector8 = Eigen::Matrix<double, 8, 1>;
using Matrix3 = Eigen::Matrix3d;
using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Matrix68 = Eigen::Matrix<double, 6, 8>;
using Matrix86 = Eigen::Matrix<double, 8, 6>;

/// Degree-of-freedom indices into pose / velocity 6-vectors.
enum Axis : int { kX = 0, kY = 1, kZ = 2, kRoll = 3, kPitch = 4, kYaw = 5 };

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace aismc
