#pragma once

#include <optional>
#include <vector>

#include "cnn/instance.hpp"

namespace cnn {

struct Breakpoint {
  Scalar s;
  Point position;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A server trajectory synchronised to the request's arc length, linear
/// between breakpoints. Breakpoint s values are strictly increasing and
/// start at 0.
struct AlignedTrajectory {
  std::vector<Breakpoint> breakpoints;

  friend bool operator==(const AlignedTrajectory&, const AlignedTrajectory&) = default;

  Scalar end_s() const;
  Point position_at(const Scalar& s) const;
  /// L1 length travelled on [0, s].
  Scalar cost_until(const Scalar& s) const;
  Scalar cost() const;
  /// Throws std::invalid_argument unless s values start at 0 and increase.
  void check_shape() const;
};

/// Drops breakpoints through which the motion continues at the same velocity.
AlignedTrajectory simplified(const AlignedTrajectory& traj);

struct AlignmentReport {
  bool feasible = true;
  std::optional<Scalar> first_violation;
};

/// Exact check that the trajectory is aligned with the request for every s.
/// Throws std::invalid_argument when the trajectory does not end at the
/// instance's total arc length.
AlignmentReport validate_alignment(const AlignedTrajectory& traj, const Instance& inst);

}  // namespace cnn
