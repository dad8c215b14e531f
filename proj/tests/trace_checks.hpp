#pragma once

#include <string>

#include "cnn/engine.hpp"
#include "cnn/trajectory.hpp"

namespace cnn::testing {

// Each returns an empty string when the property holds, otherwise a short
// description of the first offending event.

inline std::string describe(const char* what, std::size_t i, const TraceEvent& ev) {
  return std::string(what) + " at event " + std::to_string(i) + " (s = " + ev.s.to_string() + ")";
}

/// Bishop motion: request-horizontal pieces move the server by (+-t, -t)
/// canonically, request-vertical pieces leave it still.
inline std::string check_bishop_diagonal(const Trace& trace) {
  const auto& ev = trace.events;
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
    if (ev[i].phase != PhaseKind::bishop || !(ev[i].s < ev[i + 1].s)) continue;
    const Scalar ds = ev[i + 1].s - ev[i].s;
    const Vector req = ev[i].frame.apply(ev[i + 1].request - ev[i].request);
    const Vector srv = ev[i].frame.apply(ev[i + 1].server - ev[i].server);
    if (req.dy.is_zero()) {
      if (abs(srv.dx) != abs(srv.dy)) return describe("bishop move not diagonal", i, ev[i]);
      if (srv.dy != -ds || srv.dx != req.dx) return describe("bishop move has wrong direction", i, ev[i]);
    } else if (!srv.is_zero()) {
      return describe("server moved on a vertical bishop piece", i, ev[i]);
    }
  }
  return {};
}

/// Rook phase: canonical y-alignment and server.x <= request.x.
inline std::string check_rook_invariants(const Trace& trace) {
  const auto& ev = trace.events;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].phase != PhaseKind::rook) continue;
    const Point q = ev[i].frame.apply(ev[i].server);
    const Point r = ev[i].frame.apply(ev[i].request);
    if (q.y != r.y) return describe("rook lost y-alignment", i, ev[i]);
    if (q.x > r.x) return describe("rook server passed the request", i, ev[i]);
    if (ev[i].frame.apply(ev[i].offset) != Vector{-ev[i].offset_mag, 0})
      return describe("rook offset does not point along -x", i, ev[i]);
  }
  return {};
}

/// Offset decay inside rook phases at exactly 0, 1 or 1 + sqrt3 per unit of
/// request motion, matched to the kind of move; zero offset at cycle starts.
inline std::string check_offset_rates(const Trace& trace) {
  const auto& ev = trace.events;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].kind == EventKind::cycle_start && !ev[i].offset_mag.is_zero())
      return describe("nonzero offset at a cycle start", i, ev[i]);
    if (i + 1 == ev.size() || ev[i].phase != PhaseKind::rook || !(ev[i].s < ev[i + 1].s)) continue;
    const Scalar ds = ev[i + 1].s - ev[i].s;
    const Scalar rate = (ev[i].offset_mag - ev[i + 1].offset_mag) / ds;
    const Vector req = ev[i].frame.apply(ev[i + 1].request - ev[i].request);
    const bool server_moved = !(ev[i + 1].server == ev[i].server);
    Scalar want;
    if (req.dx.is_zero()) {
      want = constants::vertical_decay();
      if (ev[i + 1].server - ev[i].server != ev[i + 1].request - ev[i].request)
        return describe("server did not follow a vertical rook move", i, ev[i]);
    } else if (server_moved) {
      want = 1;
      if (req.dx.sign() > 0) return describe("server followed a +x rook move", i, ev[i]);
    } else {
      want = 0;
    }
    if (rate != want) return describe("offset decayed at the wrong rate", i, ev[i]);
  }
  return {};
}

/// Server path aligned with the request and cost equal to its L1 length.
inline std::string check_alignment_and_cost(const Trace& trace) {
  const AlignedTrajectory path = trace.server_trajectory();
  if (!validate_alignment(path, trace.instance).feasible) return "server path not aligned with the request";
  if (path.cost() != trace.final_cost) return "final cost differs from server path length";
  for (std::size_t i = 1; i < trace.events.size(); ++i) {
    if (trace.events[i].cost_on < trace.events[i - 1].cost_on) return describe("cost decreased", i, trace.events[i]);
  }
  return {};
}

inline std::string check_all(const Trace& trace) {
  for (auto* check : {&check_bishop_diagonal, &check_rook_invariants, &check_offset_rates, &check_alignment_and_cost}) {
    std::string r = check(trace);
    if (!r.empty()) return r;
  }
  return {};
}

}  // namespace cnn::testing
