#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cnn/instance.hpp"
#include "cnn/trajectory.hpp"

namespace cnn {

enum class PhaseKind : unsigned char { bishop, rook };

std::string_view phase_name(PhaseKind kind);

/// Current phase of a cycle.
///
/// `frame` maps world coordinates to the cycle's canonical coordinates. In
/// the canonical frame a bishop phase started with the request at the origin
/// and the server on the non-negative y-axis; a rook phase keeps the offset
/// pointing along -x. `offset_mag` is |o| for the rook phase. During a bishop
/// phase the running offset is -(canonical request x) along x, see
/// `offset_vector`.
struct Phase {
  PhaseKind kind = PhaseKind::bishop;
  Frame frame;
  Scalar offset_mag;

  friend bool operator==(const Phase&, const Phase&) = default;
};

struct EngineState {
  Point server;
  Point request;
  Phase phase;
  Scalar cost_on;
  Scalar s;

  friend bool operator==(const EngineState&, const EngineState&) = default;

  /// Offset vector in world coordinates.
  Vector offset_vector() const;
  /// |o|, valid in both phases.
  Scalar offset_magnitude() const;
};

enum class EventKind : unsigned char { request_horizontal, request_vertical, phase_switch, cycle_start };

std::string_view event_kind_name(EventKind kind);

/// Snapshot of the engine after a motion piece or an instantaneous
/// transition. The motion between consecutive events is linear and happens
/// under the phase/frame of the earlier event.
struct TraceEvent {
  Scalar s;
  Point server;
  Point request;
  PhaseKind phase = PhaseKind::bishop;
  Frame frame;
  Scalar offset_mag;
  Vector offset;
  Scalar cost_on;
  EventKind kind = EventKind::cycle_start;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  Instance instance;
  std::vector<TraceEvent> events;
  Scalar final_cost;

  friend bool operator==(const Trace&, const Trace&) = default;

  /// Server path as an aligned trajectory (duplicate-s events collapsed).
  AlignedTrajectory server_trajectory() const;
};

/// Bishop phase for a fresh cycle: the frame sends the request to the origin
/// and the server to (0, h), h = d(server, request). Among qualifying axis
/// maps the first in `kAllAxisMaps` order wins. Throws std::logic_error if the
/// points are not aligned.
Phase start_cycle(const Point& server, const Point& request);

/// Result of advancing the engine by at most one elementary piece.
struct StepResult {
  /// State after the motion piece, before any phase change.
  EngineState moved;
  /// Request arc length consumed by the piece.
  Scalar consumed;
  /// State right after a phase switch occurring at the end of the piece.
  std::optional<EngineState> switched;
  /// Set when the coincident-start frame had to be redrawn before moving.
  std::optional<Frame> redrawn;
};

/// Advances a bishop phase along an axis-parallel request move (world
/// direction `dir`, length `length`). Stops early at a coincidence point.
StepResult step_bishop(const EngineState& state, const Vector& dir, const Scalar& length);

/// Advances a rook phase. Stops early where the offset reaches zero or where
/// the request catches up with the server's x coordinate.
StepResult step_rook(const EngineState& state, const Vector& dir, const Scalar& length);

/// Incremental Bishop-Rook executor, fed one request leg at a time.
class BishopRook {
 public:
  explicit BishopRook(const Point& start);

  /// Throws std::invalid_argument for a non-axis-parallel leg.
  void feed(const RequestSegment& segment);

  const EngineState& state() const { return state_; }
  const std::vector<TraceEvent>& events() const { return events_; }

 private:
  void emit(const EngineState& st, EventKind kind);
  void enter_phase(const EngineState& st, EventKind kind);

  EngineState state_;
  std::vector<TraceEvent> events_;
};

/// Runs the algorithm over an axis-parallel instance.
Trace run(const Instance& inst);

}  // namespace cnn
