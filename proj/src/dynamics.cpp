#include "aismc/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

Matrix3 skew(const Vector3& a) {
  Matrix3 s;
  s << 0, -a(2), a(1), a(2), 0, -a(0), -a(1), a(0), 0;
  return s;
}

void require_frame(const Wrench& w, Frame expected, const char* what) {
  if (w.frame != expected) {
    throw std::logic_error(std::string(what) + " must be expressed in the " + to_string(expected) +
                           " frame, got " + to_string(w.frame));
  }
}

void require_positive(double v, const std::string& name) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidModel(name + " must be positive and finite");
}

void require_non_negative(double v, const std::string& name) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidModel(name + " must be non-negative and finite");
}

}  // namespace

const char* to_string(Frame frame) {
  switch (frame) {
    case Frame::Body: return "body";
    case Frame::Earth: return "earth";
    case Frame::NormalizedAcceleration: return "normalized-acceleration";
  }
  return "?";
}

Wrench Wrench::operator+(const Wrench& other) const {
  if (frame != other.frame) {
    throw std::logic_error(std::string("cannot add a ") + to_string(frame) + " wrench to a " +
                           to_string(other.frame) + " wrench");
  }
  return {values + other.values, frame};
}

void VehicleModel::validate() const {
  require_positive(mass, "mass");
  for (int i = 0; i < 3; ++i) require_positive(inertia(i), "inertia[" + std::to_string(i) + "]");
  for (int i = 0; i < 6; ++i) {
    const std::string idx = "[" + std::to_string(i) + "]";
    require_non_negative(added_mass(i), "added_mass" + idx);
    require_non_negative(linear_damping(i), "linear_damping" + idx);
    require_non_negative(quadratic_damping(i), "quadratic_damping" + idx);
  }
  require_non_negative(weight, "weight");
  require_non_negative(buoyancy, "buoyancy");
  require_positive(max_thrust, "max_thrust");
  if (!center_of_gravity.allFinite() || !center_of_buoyancy.allFinite()) {
    throw InvalidModel("centers of gravity and buoyancy must be finite");
  }
}

Matrix6 inertia_matrix(const VehicleModel& model) {
  Vector6 rigid;
  rigid << model.mass, model.mass, model.mass, model.inertia;
  const Vector6 diagonal = rigid + model.added_mass;
  for (int i = 0; i < 6; ++i) {
    if (!(diagonal(i) > 0.0)) {
      throw InvalidModel("inertia matrix diagonal entry " + std::to_string(i) + " is not positive");
    }
  }
  return diagonal.asDiagonal();
}

Matrix6 coriolis_matrix(const Matrix6& inertia, const Vector6& nu) {
  const Vector3 linear_momentum = inertia.topLeftCorner<3, 3>() * nu.head<3>();
  const Vector3 angular_momentum = inertia.bottomRightCorner<3, 3>() * nu.tail<3>();
  Matrix6 c = Matrix6::Zero();
  c.topRightCorner<3, 3>() = -skew(linear_momentum);
  c.bottomLeftCorner<3, 3>() = -skew(linear_momentum);
  c.bottomRightCorner<3, 3>() = -skew(angular_momentum);
  return c;
}

Matrix6 damping_matrix(const Vector6& nu, const VehicleModel& model) {
  return (model.linear_damping + model.quadratic_damping.cwiseProduct(nu.cwiseAbs())).asDiagonal();
}

Vector6 restoring_vector(const Vector6& eta, const VehicleModel& model) {
  check_attitude(attitude_of(eta));
  const double sphi = std::sin(eta(kRoll)), cphi = std::cos(eta(kRoll));
  const double sth = std::sin(eta(kPitch)), cth = std::cos(eta(kPitch));
  const double w = model.weight, b = model.buoyancy;
  const Vector3& rg = model.center_of_gravity;
  const Vector3& rb = model.center_of_buoyancy;
  const double mx = rg(0) * w - rb(0) * b;
  const double my = rg(1) * w - rb(1) * b;
  const double mz = rg(2) * w - rb(2) * b;

  Vector6 g;
  g << (w - b) * sth,
       -(w - b) * cth * sphi,
       -(w - b) * cth * cphi,
       -my * cth * cphi + mz * cth * sphi,
       mz * sth + mx * cth * cphi,
       -mx * cth * sphi - my * sth;
  return g;
}

Vector6 body_acceleration(const VehicleState& state, const Wrench& tau, const Wrench& tau_e,
                          const VehicleModel& model) {
  require_frame(tau, Frame::Body, "thruster wrench");
  require_frame(tau_e, Frame::Body, "disturbance wrench");
  const Matrix6 m = inertia_matrix(model);
  const Vector6& nu = state.nu;
  const Vector6 rhs = tau.values + tau_e.values - coriolis_matrix(m, nu) * nu -
                      damping_matrix(nu, model) * nu - restoring_vector(state.eta, model);
  // M is diagonal with positive entries (checked above).
  return rhs.cwiseQuotient(m.diagonal());
}

EarthFrameTerms earth_frame_terms(const VehicleState& state, const VehicleModel& model) {
  const Vector3 euler = attitude_of(state.eta);
  const TransformMatrix t = transform_matrix(euler);
  const Matrix6 j_inv = t.inverse();
  const Matrix6 j_inv_t = j_inv.transpose();
  const Vector3 euler_rate = t.j2 * state.nu.tail<3>();
  const Matrix6 j_dot = transform_matrix_derivative(euler, euler_rate);
  const Matrix6 m = inertia_matrix(model);

  EarthFrameTerms terms;
  terms.inertia = j_inv_t * m * j_inv;
  terms.coriolis = j_inv_t * (coriolis_matrix(m, state.nu) - m * j_inv * j_dot) * j_inv;
  terms.damping = j_inv_t * damping_matrix(state.nu, model) * j_inv;
  terms.restoring = j_inv_t * restoring_vector(state.eta, model);
  return terms;
}

Vector6 earth_acceleration(const VehicleState& state, const Wrench& tau, const Wrench& tau_e,
                           const VehicleModel& model) {
  require_frame(tau, Frame::Body, "thruster wrench");
  require_frame(tau_e, Frame::Body, "disturbance wrench");
  const EarthFrameTerms terms = earth_frame_terms(state, model);
  const Matrix6 j_inv_t = transform_matrix(attitude_of(state.eta)).inverse().transpose();
  const Vector6 eta_dot = body_to_earth_rates(state);
  const Vector6 rhs = j_inv_t * (tau.values + tau_e.values) - terms.coriolis * eta_dot -
                      terms.damping * eta_dot - terms.restoring;
  return terms.inertia.ldlt().solve(rhs);
}

Wrench normalized_control(const Wrench& tau, const VehicleState& state, const VehicleModel& model) {
  require_frame(tau, Frame::Body, "thruster wrench");
  const Matrix6 j_inv = transform_matrix(attitude_of(state.eta)).inverse();
  const Matrix6 j_inv_t = j_inv.transpose();
  const Matrix6 m_eta = j_inv_t * inertia_matrix(model) * j_inv;
  return Wrench::normalized(m_eta.ldlt().solve(j_inv_t * tau.values));
}

}  // namespace aismc
