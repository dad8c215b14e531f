#include "cnn/engine.hpp"

#include <stdexcept>

namespace cnn {

namespace {

const Frame kReflectX{AxisMap::flip_x, {}};

Point to_canonical(const Frame& f, const Point& p) { return f.apply(p); }

Vector to_world(const Frame& f, const Vector& v) { return apply(invert(f.linear), v); }

Frame frame_sending(AxisMap m, const Point& origin) {
  return {m, -apply(m, Vector{origin.x, origin.y})};
}

void require_unit_axis(const Vector& dir) {
  if (!dir.is_axis_parallel() || l1_norm(dir) != Scalar(1))
    throw std::invalid_argument("engine moves must be axis-parallel unit directions");
}

EventKind motion_kind(const Vector& dir) {
  return dir.dx.is_zero() ? EventKind::request_vertical : EventKind::request_horizontal;
}

// Rook entry at a coincidence point; the offset is made to point along -x.
EngineState enter_rook(EngineState st) {
  const Point r = to_canonical(st.phase.frame, st.request);
  Frame frame = st.phase.frame;
  if (r.x.sign() < 0) frame = frame_compose(kReflectX, frame);
  st.phase = {PhaseKind::rook, frame, abs(r.x)};
  return st;
}

}  // namespace

std::string_view phase_name(PhaseKind kind) { return kind == PhaseKind::bishop ? "bishop" : "rook"; }

std::string_view event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::request_horizontal: return "request-horizontal";
    case EventKind::request_vertical: return "request-vertical";
    case EventKind::phase_switch: return "phase-switch";
    case EventKind::cycle_start: return "cycle-start";
  }
  return "cycle-start";
}

Vector EngineState::offset_vector() const {
  if (phase.kind == PhaseKind::rook) return to_world(phase.frame, {-phase.offset_mag, 0});
  const Point r = to_canonical(phase.frame, request);
  return to_world(phase.frame, {-r.x, 0});
}

Scalar EngineState::offset_magnitude() const { return l1_norm(offset_vector()); }

AlignedTrajectory Trace::server_trajectory() const {
  AlignedTrajectory out;
  for (const auto& ev : events) {
    if (!out.breakpoints.empty() && out.breakpoints.back().s == ev.s) {
      out.breakpoints.back().position = ev.server;
      continue;
    }
    out.breakpoints.push_back({ev.s, ev.server});
  }
  return out;
}

Phase start_cycle(const Point& server, const Point& request) {
  if (!aligned(server, request))
    throw std::logic_error("start_cycle: server and request are not aligned");
  const Vector v = server - request;
  const Vector target{0, l1_norm(v)};
  for (AxisMap m : kAllAxisMaps) {
    if (apply(m, v) == target) return {PhaseKind::bishop, frame_sending(m, request), Scalar()};
  }
  throw std::logic_error("start_cycle: no axis map sends the server onto the +y axis");
}

StepResult step_bishop(const EngineState& state, const Vector& dir, const Scalar& length) {
  if (state.phase.kind != PhaseKind::bishop) throw std::logic_error("step_bishop outside a bishop phase");
  require_unit_axis(dir);
  if (length.sign() <= 0) throw std::invalid_argument("step length must be positive");

  StepResult out;
  EngineState st = state;
  Point q = to_canonical(st.phase.frame, st.server);
  Point r = to_canonical(st.phase.frame, st.request);
  if (q.x != r.x || q.y < r.y) throw std::logic_error("bishop invariant breached");

  if (q.y == r.y) {
    // Coincident start (h = 0, zero offset): redraw so the request leaves
    // along canonical -y and the server stays put.
    for (AxisMap m : kAllAxisMaps) {
      if (apply(m, dir) == Vector{0, -1}) {
        const Frame redrawn = frame_sending(m, st.request);
        if (!(redrawn == st.phase.frame)) out.redrawn = redrawn;
        st.phase.frame = redrawn;
        break;
      }
    }
    q = to_canonical(st.phase.frame, st.server);
    r = to_canonical(st.phase.frame, st.request);
  }

  const Vector cd = st.phase.frame.apply(dir);
  const Scalar gap = q.y - r.y;
  Scalar t = length;
  bool coincide = false;
  Vector server_step;  // canonical
  if (cd.dx.is_zero()) {
    if (cd.dy.sign() > 0 && gap <= length) {
      t = gap;
      coincide = true;
    }
  } else {
    if (gap <= length) {
      t = gap;
      coincide = true;
    }
    server_step = {cd.dx * t, -t};
    st.cost_on += 2 * t;
  }

  st.request = st.request + t * dir;
  st.server = st.server + to_world(st.phase.frame, server_step);
  st.s += t;
  out.moved = st;
  out.consumed = t;
  if (coincide) out.switched = enter_rook(st);
  return out;
}

StepResult step_rook(const EngineState& state, const Vector& dir, const Scalar& length) {
  if (state.phase.kind != PhaseKind::rook) throw std::logic_error("step_rook outside a rook phase");
  require_unit_axis(dir);
  if (length.sign() <= 0) throw std::invalid_argument("step length must be positive");

  EngineState st = state;
  const Frame& frame = st.phase.frame;
  const Point q = to_canonical(frame, st.server);
  const Point r = to_canonical(frame, st.request);
  if (q.y != r.y || q.x > r.x) throw std::logic_error("rook invariant breached");
  if (st.phase.offset_mag.sign() <= 0) throw std::logic_error("rook phase with exhausted offset");

  const Vector cd = frame.apply(dir);
  Scalar& offset = st.phase.offset_mag;
  Scalar t = length;
  bool exhausted = false;
  bool server_follows = false;
  if (cd.dx.is_zero()) {
    const Scalar rate = constants::vertical_decay();
    const Scalar until_zero = offset / rate;
    if (until_zero <= length) {
      t = until_zero;
      exhausted = true;
    }
    server_follows = true;
    offset = exhausted ? Scalar() : offset - rate * t;
  } else if (cd.dx.sign() < 0) {
    const Scalar gap = r.x - q.x;
    if (gap.sign() > 0) {
      t = min(length, gap);
    } else {
      if (offset <= length) {
        t = offset;
        exhausted = true;
      }
      server_follows = true;
      offset = exhausted ? Scalar() : offset - t;
    }
  }

  st.request = st.request + t * dir;
  if (server_follows) {
    st.server = st.server + t * dir;
    st.cost_on += t;
  }
  st.s += t;

  StepResult out;
  out.moved = st;
  out.consumed = t;
  if (exhausted) {
    EngineState next = st;
    next.phase = start_cycle(st.server, st.request);
    out.switched = next;
  }
  return out;
}

BishopRook::BishopRook(const Point& start) {
  state_.server = start;
  state_.request = start;
  state_.phase = start_cycle(start, start);
  emit(state_, EventKind::cycle_start);
}

void BishopRook::emit(const EngineState& st, EventKind kind) {
  events_.push_back({st.s, st.server, st.request, st.phase.kind, st.phase.frame,
                     st.offset_magnitude(), st.offset_vector(), st.cost_on, kind});
}

void BishopRook::enter_phase(const EngineState& st, EventKind kind) {
  state_ = st;
  emit(state_, kind);
  if (state_.phase.kind == PhaseKind::rook && state_.phase.offset_mag.is_zero()) {
    // Zero offset at rook entry: straight back to a fresh bishop cycle.
    state_.phase = start_cycle(state_.server, state_.request);
    emit(state_, EventKind::cycle_start);
  }
}

void BishopRook::feed(const RequestSegment& segment) {
  if (segment.length.is_zero()) return;
  if (!segment.is_axis_parallel())
    throw std::invalid_argument("the engine only accepts axis-parallel request legs; rectify first");
  const Scalar scale = l1_norm(segment.direction);
  const Vector dir{segment.direction.dx / scale, segment.direction.dy / scale};
  Scalar remaining = segment.length * scale;
  while (remaining.sign() > 0) {
    StepResult res = state_.phase.kind == PhaseKind::bishop ? step_bishop(state_, dir, remaining)
                                                            : step_rook(state_, dir, remaining);
    if (res.redrawn) {
      state_.phase.frame = *res.redrawn;
      emit(state_, EventKind::cycle_start);
    }
    state_ = res.moved;
    emit(state_, motion_kind(dir));
    remaining -= res.consumed;
    if (res.switched) {
      enter_phase(*res.switched, res.switched->phase.kind == PhaseKind::rook ? EventKind::phase_switch
                                                                             : EventKind::cycle_start);
    }
  }
}

Trace run(const Instance& inst) {
  if (!inst.is_axis_parallel())
    throw std::invalid_argument("run: instance has diagonal legs; rectify first");
  BishopRook engine(inst.start);
  for (const auto& seg : inst.segments) engine.feed(seg);
  return {inst, engine.events(), engine.state().cost_on};
}

}  // namespace cnn
