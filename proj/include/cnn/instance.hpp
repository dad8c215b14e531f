#pragma once

#include <vector>

#include "cnn/geometry.hpp"

namespace cnn {

/// One leg of the request trajectory: the request moves by length * direction.
///
/// Axis-parallel legs are kept with a +-1 direction component, so `length`
/// is their L1 arc length. Diagonal legs keep whatever nonzero direction they
/// were given; their arc length is the L1 length of the displacement.
struct RequestSegment {
  Vector direction;
  Scalar length;

  friend bool operator==(const RequestSegment&, const RequestSegment&) = default;

  Vector displacement() const { return length * direction; }
  Scalar arc_length() const { return l1_norm(displacement()); }
  bool is_axis_parallel() const { return direction.is_axis_parallel(); }
};

struct Instance {
  Point start;
  std::vector<RequestSegment> segments;

  friend bool operator==(const Instance&, const Instance&) = default;

  Scalar total_length() const;
  Point end() const;
  bool is_axis_parallel() const;
  /// Request position at arc length s (clamped to the ends).
  Point request_at(const Scalar& s) const;
  /// Arc lengths of segment boundaries, starting with 0.
  std::vector<Scalar> boundaries() const;
};

/// Drops zero-length legs and rescales axis-parallel directions to +-1.
/// Throws std::invalid_argument for a zero direction or negative length.
Instance normalized(Instance inst);

/// Axis-parallel leg helper: direction is +-x or +-y by the sign of delta.
RequestSegment axis_move(bool horizontal, const Scalar& delta);

/// Builds a normalized instance visiting the given waypoints with
/// axis-parallel legs (consecutive waypoints must share a coordinate).
Instance polyline_instance(const std::vector<Point>& waypoints);

/// Replaces every diagonal leg by a monotone staircase with steps no larger
/// than epsilon. Axis-parallel legs pass through unchanged.
Instance rectify(const Instance& inst, const Scalar& epsilon);

/// Adds a breakpoint at arc length s (splitting one leg in two).
Instance refine(const Instance& inst, const Scalar& s);

}  // namespace cnn
