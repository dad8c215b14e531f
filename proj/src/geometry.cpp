#include "cnn/geometry.hpp"

#include <stdexcept>

namespace cnn {

namespace {

struct Matrix {
  int m00, m01, m10, m11;
};

constexpr Matrix matrix_of(AxisMap m) {
  switch (m) {
    case AxisMap::identity: return {1, 0, 0, 1};
    case AxisMap::rot90: return {0, -1, 1, 0};
    case AxisMap::rot180: return {-1, 0, 0, -1};
    case AxisMap::rot270: return {0, 1, -1, 0};
    case AxisMap::flip_x: return {-1, 0, 0, 1};
    case AxisMap::flip_y: return {1, 0, 0, -1};
    case AxisMap::swap: return {0, 1, 1, 0};
    case AxisMap::anti_swap: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

constexpr bool same(const Matrix& a, const Matrix& b) {
  return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
}

AxisMap from_matrix(const Matrix& m) {
  for (AxisMap candidate : kAllAxisMaps) {
    if (same(matrix_of(candidate), m)) return candidate;
  }
  throw std::logic_error("matrix is not a signed axis permutation");
}

Scalar times(int k, const Scalar& v) {
  if (k == 0) return Scalar();
  return k > 0 ? v : -v;
}

}  // namespace

bool lex_less(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

Scalar l1_norm(const Vector& v) { return abs(v.dx) + abs(v.dy); }

Scalar l1_distance(const Point& p, const Point& q) { return l1_norm(p - q); }

Point lerp(const Point& p, const Point& q, const Scalar& t, const Scalar& total) {
  const Scalar k = t / total;
  return p + k * (q - p);
}

std::string_view axis_map_name(AxisMap m) {
  switch (m) {
    case AxisMap::identity: return "id";
    case AxisMap::rot90: return "rot90";
    case AxisMap::rot180: return "rot180";
    case AxisMap::rot270: return "rot270";
    case AxisMap::flip_x: return "flipx";
    case AxisMap::flip_y: return "flipy";
    case AxisMap::swap: return "swap";
    case AxisMap::anti_swap: return "antiswap";
  }
  return "id";
}

std::optional<AxisMap> axis_map_from_name(std::string_view name) {
  for (AxisMap m : kAllAxisMaps) {
    if (axis_map_name(m) == name) return m;
  }
  return std::nullopt;
}

Vector apply(AxisMap m, const Vector& v) {
  const Matrix a = matrix_of(m);
  return {times(a.m00, v.dx) + times(a.m01, v.dy), times(a.m10, v.dx) + times(a.m11, v.dy)};
}

AxisMap compose(AxisMap outer, AxisMap inner) {
  const Matrix a = matrix_of(outer);
  const Matrix b = matrix_of(inner);
  return from_matrix({a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                      a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11});
}

AxisMap invert(AxisMap m) {
  // Orthogonal: inverse is the transpose.
  const Matrix a = matrix_of(m);
  return from_matrix({a.m00, a.m10, a.m01, a.m11});
}

Point Frame::apply(const Point& p) const {
  const Vector v = cnn::apply(linear, Vector{p.x, p.y}) + translation;
  return {v.dx, v.dy};
}

Vector Frame::apply(const Vector& v) const { return cnn::apply(linear, v); }

Frame frame_compose(const Frame& outer, const Frame& inner) {
  return {compose(outer.linear, inner.linear),
          cnn::apply(outer.linear, inner.translation) + outer.translation};
}

Frame frame_invert(const Frame& f) {
  const AxisMap inv = invert(f.linear);
  return {inv, -cnn::apply(inv, f.translation)};
}

}  // namespace cnn
