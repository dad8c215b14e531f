#include "cnn/trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnn {

namespace {

// Index of the last breakpoint with s <= target.
std::size_t piece_index(const std::vector<Breakpoint>& bps, const Scalar& s) {
  auto it = std::upper_bound(bps.begin(), bps.end(), s,
                             [](const Scalar& v, const Breakpoint& bp) { return v < bp.s; });
  if (it == bps.begin()) return 0;
  return static_cast<std::size_t>(it - bps.begin()) - 1;
}

AlignedTrajectory request_polyline(const Instance& inst) {
  AlignedTrajectory out;
  Point p = inst.start;
  Scalar s;
  out.breakpoints.push_back({s, p});
  for (const auto& seg : inst.segments) {
    const Scalar len = seg.arc_length();
    if (len.is_zero()) continue;
    s += len;
    p = p + seg.displacement();
    out.breakpoints.push_back({s, p});
  }
  return out;
}

// Root of the linear function through (a, va) and (b, vb) when it changes sign strictly.
std::optional<Scalar> crossing(const Scalar& a, const Scalar& b, const Scalar& va, const Scalar& vb) {
  if (va.sign() * vb.sign() >= 0) return std::nullopt;
  return a + (b - a) * va / (va - vb);
}

}  // namespace

Scalar AlignedTrajectory::end_s() const {
  if (breakpoints.empty()) throw std::invalid_argument("trajectory has no breakpoints");
  return breakpoints.back().s;
}

Point AlignedTrajectory::position_at(const Scalar& s) const {
  if (breakpoints.empty()) throw std::invalid_argument("trajectory has no breakpoints");
  const std::size_t i = piece_index(breakpoints, s);
  if (i + 1 >= breakpoints.size() || s <= breakpoints[i].s) return breakpoints[i].position;
  const auto& a = breakpoints[i];
  const auto& b = breakpoints[i + 1];
  return lerp(a.position, b.position, s - a.s, b.s - a.s);
}

Scalar AlignedTrajectory::cost_until(const Scalar& s) const {
  Scalar total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto& a = breakpoints[i];
    const auto& b = breakpoints[i + 1];
    if (s <= a.s) break;
    if (s >= b.s) {
      total += l1_distance(a.position, b.position);
    } else {
      total += l1_distance(a.position, lerp(a.position, b.position, s - a.s, b.s - a.s));
      break;
    }
  }
  return total;
}

Scalar AlignedTrajectory::cost() const {
  Scalar total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    total += l1_distance(breakpoints[i].position, breakpoints[i + 1].position);
  return total;
}

void AlignedTrajectory::check_shape() const {
  if (breakpoints.empty()) throw std::invalid_argument("trajectory has no breakpoints");
  if (!breakpoints.front().s.is_zero()) throw std::invalid_argument("trajectory must start at s = 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1].s < breakpoints[i].s))
      throw std::invalid_argument("trajectory s values must be strictly increasing");
  }
}

AlignedTrajectory simplified(const AlignedTrajectory& traj) {
  AlignedTrajectory out;
  for (const auto& bp : traj.breakpoints) {
    if (out.breakpoints.size() >= 2) {
      const auto& a = out.breakpoints[out.breakpoints.size() - 2];
      const auto& b = out.breakpoints.back();
      // Same velocity on both sides of b.
      const Scalar k = (bp.s - a.s) / (b.s - a.s);
      if (a.position + k * (b.position - a.position) == bp.position) {
        out.breakpoints.back() = bp;
        continue;
      }
    }
    out.breakpoints.push_back(bp);
  }
  return out;
}

AlignmentReport validate_alignment(const AlignedTrajectory& traj, const Instance& inst) {
  traj.check_shape();
  const Scalar total = inst.total_length();
  if (traj.end_s() != total)
    throw std::invalid_argument("trajectory and instance have different arc lengths");

  const AlignedTrajectory request = request_polyline(inst);
  auto diff_at = [&](const Scalar& s) { return traj.position_at(s) - request.position_at(s); };
  auto aligned_at = [](const Vector& d) { return d.dx.is_zero() || d.dy.is_zero(); };

  std::vector<Scalar> cuts;
  for (const auto& bp : traj.breakpoints) cuts.push_back(bp.s);
  for (const auto& bp : request.breakpoints) cuts.push_back(bp.s);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  if (!aligned_at(diff_at(cuts.front()))) return {false, cuts.front()};

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Scalar& a = cuts[i];
    const Scalar& b = cuts[i + 1];
    const Vector da = diff_at(a);
    const Vector db = diff_at(b);
    std::vector<Scalar> sub{a};
    if (auto r = crossing(a, b, da.dx, db.dx)) sub.push_back(*r);
    if (auto r = crossing(a, b, da.dy, db.dy)) sub.push_back(*r);
    sub.push_back(b);
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (std::size_t j = 0; j + 1 < sub.size(); ++j) {
      const Vector du = diff_at(sub[j]);
      const Vector dv = diff_at(sub[j + 1]);
      const bool x_ok = du.dx.is_zero() && dv.dx.is_zero();
      const bool y_ok = du.dy.is_zero() && dv.dy.is_zero();
      if (!x_ok && !y_ok) return {false, sub[j]};
    }
  }
  return {true, std::nullopt};
}

}  // namespace cnn
