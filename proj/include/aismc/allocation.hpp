#pragma once

#include <array>

#include "aismc/dynamics.hpp"
#include "aismc/types.hpp"

namespace aismc {

inline constexpr int kThrusterCount = 8;

/// Thruster mounting geometry in the body frame.
struct ThrusterLayout {
  std::array<Vector3, kThrusterCount> positions;
  std::array<Vector3, kThrusterCount> directions;

  /// Vectored BlueROV2 Heavy layout: thrusters 1-4 horizontal at the frame
  /// corners, angled 45 degrees in the xy-plane; thrusters 5-8 vertical.
  static ThrusterLayout bluerov2_heavy();

  bool operator==(const ThrusterLayout&) const = default;
};

/// Normalized thruster voltages, each in [-1, 1].
struct VoltageCommand {
  Vector8 mu = Vector8::Zero();
};

/// Column i is [d_i; r_i x d_i]. Throws DegenerateLayout when a direction is
/// not unit length or the matrix is not full rank.
[[nodiscard]] Matrix68 allocation_matrix(const ThrusterLayout& layout);

/// tau = f_max B mu (thruster dynamics neglected).
[[nodiscard]] Wrench voltages_to_wrench(const VoltageCommand& command, const Matrix68& allocation,
                                        double max_thrust);

struct AllocationResult {
  VoltageCommand command;
  bool saturated = false;  ///< at least one component was clamped
};

/// mu = clamp(B^+ tau / f_max, -1, 1) with the minimum-norm pseudoinverse.
[[nodiscard]] AllocationResult wrench_to_voltages(const Wrench& tau, const Matrix68& allocation,
                                                  double max_thrust);

/// tau = J^T M_eta tau_tilde, the inverse of normalized_control().
[[nodiscard]] Wrench control_to_body_wrench(const Wrench& tau_tilde, const VehicleState& state,
                                            const VehicleModel& model);

/// Caches B and its pseudoinverse for repeated allocation.
class ThrustAllocator {
 public:
  ThrustAllocator(const ThrusterLayout& layout, double max_thrust);

  [[nodiscard]] AllocationResult allocate(const Wrench& tau) const;
  [[nodiscard]] Wrench apply(const VoltageCommand& command) const;

  [[nodiscard]] const Matrix68& matrix() const { return allocation_; }
  [[nodiscard]] const Matrix86& pseudoinverse() const { return pseudoinverse_; }
  [[nodiscard]] double max_thrust() const { return max_thrust_; }

 private:
  Matrix68 allocation_;
  Matrix86 pseudoinverse_;
  double max_thrust_;
};

}  // namespace aismc
