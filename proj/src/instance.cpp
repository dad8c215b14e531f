#include "cnn/instance.hpp"

#include <stdexcept>

namespace cnn {

Scalar Instance::total_length() const {
  Scalar total;
  for (const auto& seg : segments) total += seg.arc_length();
  return total;
}

Point Instance::end() const {
  Point p = start;
  for (const auto& seg : segments) p = p + seg.displacement();
  return p;
}

bool Instance::is_axis_parallel() const {
  for (const auto& seg : segments) {
    if (!seg.is_axis_parallel()) return false;
  }
  return true;
}

Point Instance::request_at(const Scalar& s) const {
  Point p = start;
  Scalar consumed;
  for (const auto& seg : segments) {
    const Scalar len = seg.arc_length();
    if (s < consumed + len) {
      if (s <= consumed) return p;
      return lerp(p, p + seg.displacement(), s - consumed, len);
    }
    consumed += len;
    p = p + seg.displacement();
  }
  return p;
}

std::vector<Scalar> Instance::boundaries() const {
  std::vector<Scalar> out;
  out.reserve(segments.size() + 1);
  Scalar s;
  out.push_back(s);
  for (const auto& seg : segments) {
    s += seg.arc_length();
    out.push_back(s);
  }
  return out;
}

Instance normalized(Instance inst) {
  std::vector<RequestSegment> kept;
  kept.reserve(inst.segments.size());
  for (auto& seg : inst.segments) {
    if (seg.direction.is_zero()) throw std::invalid_argument("segment direction is zero");
    if (seg.length.sign() < 0) throw std::invalid_argument("segment length is negative");
    if (seg.length.is_zero()) continue;
    if (seg.direction.is_axis_parallel()) {
      const Scalar scale = l1_norm(seg.direction);
      seg.length = seg.length * scale;
      seg.direction = {seg.direction.dx / scale, seg.direction.dy / scale};
    }
    kept.push_back(std::move(seg));
  }
  inst.segments = std::move(kept);
  return inst;
}

RequestSegment axis_move(bool horizontal, const Scalar& delta) {
  const Scalar unit = delta.sign() < 0 ? Scalar(-1) : Scalar(1);
  if (horizontal) return {{unit, 0}, abs(delta)};
  return {{0, unit}, abs(delta)};
}

Instance polyline_instance(const std::vector<Point>& waypoints) {
  if (waypoints.empty()) throw std::invalid_argument("polyline needs a start point");
  Instance inst{waypoints.front(), {}};
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const Point& a = waypoints[i - 1];
    const Point& b = waypoints[i];
    if (a == b) continue;
    if (a.y == b.y) {
      inst.segments.push_back(axis_move(true, b.x - a.x));
    } else if (a.x == b.x) {
      inst.segments.push_back(axis_move(false, b.y - a.y));
    } else {
      throw std::invalid_argument("polyline waypoints must share a coordinate");
    }
  }
  return inst;
}

Instance rectify(const Instance& inst, const Scalar& epsilon) {
  if (epsilon.sign() <= 0) throw std::invalid_argument("rectify epsilon must be positive");
  Instance out{inst.start, {}};
  for (const auto& seg : inst.segments) {
    if (seg.direction.is_zero()) throw std::invalid_argument("segment direction is zero");
    if (seg.length.is_zero()) continue;
    if (seg.is_axis_parallel()) {
      out.segments.push_back(seg);
      continue;
    }
    const Vector d = seg.displacement();
    // Smallest step count keeping both step sizes within epsilon.
    const Integer nx = (abs(d.dx) / epsilon).ceil();
    const Integer ny = (abs(d.dy) / epsilon).ceil();
    const Integer n = nx > ny ? nx : ny;
    const Scalar steps{Rational(n)};
    const Scalar hx = d.dx / steps;
    const Scalar hy = d.dy / steps;
    for (Integer i = 0; i < n; ++i) {
      out.segments.push_back(axis_move(true, hx));
      out.segments.push_back(axis_move(false, hy));
    }
  }
  return normalized(std::move(out));
}

Instance refine(const Instance& inst, const Scalar& s) {
  const Scalar total = inst.total_length();
  if (s.sign() < 0 || s > total) throw std::out_of_range("refine point outside [0, total length]");
  Instance out{inst.start, {}};
  Scalar consumed;
  for (const auto& seg : inst.segments) {
    const Scalar len = seg.arc_length();
    if (consumed < s && s < consumed + len) {
      const Scalar fraction = (s - consumed) / len;
      out.segments.push_back({seg.direction, seg.length * fraction});
      out.segments.push_back({seg.direction, seg.length - seg.length * fraction});
    } else {
      out.segments.push_back(seg);
    }
    consumed += len;
  }
  return normalized(std::move(out));
}

}  // namespace cnn
