#pragma once

#include "aismc/kinematics.hpp"
#include "aismc/types.hpp"

namespace aismc {

inline constexpr double kGravity = 9.81;

/// Physical parameters of the vehicle. Defaults describe a BlueROV2 Heavy.
/// Mass, inertia, added mass and maximum thrust are the identified values;
/// damping and restoring geometry are typical magnitudes for this class of
/// vehicle and are meant to be overridden from configuration.
struct VehicleModel {
  double mass = 13.5;                                         // kg
  Vector3 inertia{0.26, 0.23, 0.37};                          // kg m^2
  Vector6 added_mass = (Vector6() << 6.36, 7.12, 18.68, 0.189, 0.135, 0.222).finished();
  Vector6 linear_damping = (Vector6() << 4.03, 6.22, 5.18, 0.07, 0.07, 0.07).finished();
  Vector6 quadratic_damping = (Vector6() << 18.18, 21.66, 36.99, 1.55, 1.55, 1.55).finished();
  double weight = 13.5 * kGravity;           // N
  double buoyancy = 13.5 * kGravity * 1.01;  // N
  Vector3 center_of_gravity = Vector3::Zero();       // m, body frame
  Vector3 center_of_buoyancy{0.0, 0.0, -0.02};       // m, body frame (z down)
  double max_thrust = 15.4;                          // N per thruster

  /// Throws InvalidModel naming the first violated invariant.
  void validate() const;

  bool operator==(const VehicleModel&) const = default;
};

enum class Frame { Body, Earth, NormalizedAcceleration };

[[nodiscard]] const char* to_string(Frame frame);

/// Force/torque 6-vector tagged with the frame it is expressed in.
struct Wrench {
  Vector6 values = Vector6::Zero();
  Frame frame = Frame::Body;

  static Wrench body(const Vector6& v) { return {v, Frame::Body}; }
  static Wrench normalized(const Vector6& v) { return {v, Frame::NormalizedAcceleration}; }

  /// Adding wrenches of different frames is a programming error and throws
  /// std::logic_error.
  Wrench operator+(const Wrench& other) const;
  Wrench operator-() const { return {-values, frame}; }
  Wrench operator*(double k) const { return {values * k, frame}; }
};

/// M = M_RB + M_A, both diagonal.
[[nodiscard]] Matrix6 inertia_matrix(const VehicleModel& model);

/// Rigid-body plus added-mass Coriolis/centripetal matrix for a diagonal
/// inertia matrix:
///   C(nu) = [ 0          -S(M11 nu1) ]
///           [ -S(M11 nu1) -S(M22 nu2) ]
/// which is skew-symmetric for every nu.
[[nodiscard]] Matrix6 coriolis_matrix(const Matrix6& inertia, const Vector6& nu);

/// D(nu) = diag(d_lin) + diag(d_quad .* |nu|).
[[nodiscard]] Matrix6 damping_matrix(const Vector6& nu, const VehicleModel& model);

/// Hydrostatic restoring wrench g(eta) from weight, buoyancy and the two
/// centers (z axis pointing down).
[[nodiscard]] Vector6 restoring_vector(const Vector6& eta, const VehicleModel& model);

/// nu_dot = M^-1 (tau + tau_E - C(nu) nu - D(nu) nu - g(eta)); both wrenches
/// must be body-frame.
[[nodiscard]] Vector6 body_acceleration(const VehicleState& state, const Wrench& tau,
                                        const Wrench& tau_e, const VehicleModel& model);

/// Earth-frame quantities M_eta, C_eta, D_eta, g_eta at a given state.
struct EarthFrameTerms {
  Matrix6 inertia;
  Matrix6 coriolis;
  Matrix6 damping;
  Vector6 restoring;
};

[[nodiscard]] EarthFrameTerms earth_frame_terms(const VehicleState& state,
                                                const VehicleModel& model);

/// eta_ddot from the earth-frame equation of motion, with body-frame inputs
/// mapped through J^-T.
[[nodiscard]] Vector6 earth_acceleration(const VehicleState& state, const Wrench& tau,
                                         const Wrench& tau_e, const VehicleModel& model);

/// tau_tilde = M_eta^-1 J^-T tau: body wrench -> earth-frame acceleration
/// command.
[[nodiscard]] Wrench normalized_control(const Wrench& tau, const VehicleState& state,
                                        const VehicleModel& model);

}  // namespace aismc
