#include "aismc/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "aismc/errors.hpp"

namespace aismc {

namespace {

Matrix86 pseudoinverse_of(const Matrix68& b) {
  return b.completeOrthogonalDecomposition().pseudoInverse();
}

AllocationResult clamp_voltages(const Vector8& raw) {
  AllocationResult result;
  for (int i = 0; i < kThrusterCount; ++i) {
    const double v = raw(i);
    if (v > 1.0 || v < -1.0) result.saturated = true;
    result.command.mu(i) = std::clamp(v, -1.0, 1.0);
  }
  return result;
}

}  // namespace

ThrusterLayout ThrusterLayout::bluerov2_heavy() {
  const double h = std::sqrt(0.5);
  ThrusterLayout layout;
  // Horizontal: front-right, front-left, rear-right, rear-left.
  layout.positions[0] = {0.156, 0.111, 0.085};
  layout.positions[1] = {0.156, -0.111, 0.085};
  layout.positions[2] = {-0.156, 0.111, 0.085};
  layout.positions[3] = {-0.156, -0.111, 0.085};
  layout.directions[0] = {h, -h, 0.0};
  layout.directions[1] = {h, h, 0.0};
  layout.directions[2] = {h, h, 0.0};
  layout.directions[3] = {h, -h, 0.0};
  // Vertical, thrust positive along body z.
  layout.positions[4] = {0.12, 0.218, 0.0};
  layout.positions[5] = {0.12, -0.218, 0.0};
  layout.positions[6] = {-0.12, 0.218, 0.0};
  layout.positions[7] = {-0.12, -0.218, 0.0};
  for (int i = 4; i < kThrusterCount; ++i) layout.directions[i] = {0.0, 0.0, 1.0};
  return layout;
}

Matrix68 allocation_matrix(const ThrusterLayout& layout) {
  Matrix68 b;
  for (int i = 0; i < kThrusterCount; ++i) {
    const Vector3& d = layout.directions[i];
    const Vector3& r = layout.positions[i];
    if (!d.allFinite() || !r.allFinite() || std::abs(d.norm() - 1.0) > 1e-12) {
      throw DegenerateLayout("thruster " + std::to_string(i + 1) +
                             " direction must be a finite unit vector");
    }
    b.col(i).head<3>() = d;
    b.col(i).tail<3>() = r.cross(d);
  }
  Eigen::JacobiSVD<Matrix68> svd(b);
  svd.setThreshold(1e-9);
  if (svd.rank() < 6) {
    throw DegenerateLayout("allocation matrix has rank " + std::to_string(svd.rank()) +
                           " < 6; the layout cannot actuate all six degrees of freedom");
  }
  return b;
}

Wrench voltages_to_wrench(const VoltageCommand& command, const Matrix68& allocation,
                          double max_thrust) {
  return Wrench::body(max_thrust * (allocation * command.mu));
}

AllocationResult wrench_to_voltages(const Wrench& tau, const Matrix68& allocation,
                                    double max_thrust) {
  if (tau.frame != Frame::Body) throw std::logic_error("allocation needs a body-frame wrench");
  return clamp_voltages(pseudoinverse_of(allocation) * tau.values / max_thrust);
}

Wrench control_to_body_wrench(const Wrench& tau_tilde, const VehicleState& state,
                              const VehicleModel& model) {
  if (tau_tilde.frame != Frame::NormalizedAcceleration) {
    throw std::logic_error("control_to_body_wrench needs a normalized-acceleration wrench");
  }
  const TransformMatrix t = transform_matrix(attitude_of(state.eta));
  const Matrix6 j_inv = t.inverse();
  const Matrix6 m_eta = j_inv.transpose() * inertia_matrix(model) * j_inv;
  return Wrench::body(t.full().transpose() * (m_eta * tau_tilde.values));
}

ThrustAllocator::ThrustAllocator(const ThrusterLayout& layout, double max_thrust)
    : allocation_(allocation_matrix(layout)),
      pseudoinverse_(pseudoinverse_of(allocation_)),
      max_thrust_(max_thrust) {
  if (!(max_thrust > 0.0)) throw InvalidModel("max_thrust must be positive");
}

AllocationResult ThrustAllocator::allocate(const Wrench& tau) const {
  if (tau.frame != Frame::Body) throw std::logic_error("allocation needs a body-frame wrench");
  return clamp_voltages(pseudoinverse_ * tau.values / max_thrust_);
}

Wrench ThrustAllocator::apply(const VoltageCommand& command) const {
  return voltages_to_wrench(command, allocation_, max_thrust_);
}

}  // namespace aismc
