#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "cnn/scalar.hpp"

namespace cnn {

struct Vector {
  Scalar dx;
  Scalar dy;

  friend bool operator==(const Vector&, const Vector&) = default;
  Vector operator-() const { return {-dx, -dy}; }
  friend Vector operator+(const Vector& a, const Vector& b) { return {a.dx + b.dx, a.dy + b.dy}; }
  friend Vector operator-(const Vector& a, const Vector& b) { return {a.dx - b.dx, a.dy - b.dy}; }
  friend Vector operator*(const Scalar& k, const Vector& v) { return {k * v.dx, k * v.dy}; }

  bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
  /// Exactly one component nonzero.
  bool is_axis_parallel() const { return dx.is_zero() != dy.is_zero(); }
};

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Vector& v) { return {p.x + v.dx, p.y + v.dy}; }
  friend Point operator-(const Point& p, const Vector& v) { return {p.x - v.dx, p.y - v.dy}; }
  friend Vector operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
};

/// Lexicographic (x, then y); used for deterministic tie-breaking.
bool lex_less(const Point& p, const Point& q);

Scalar l1_norm(const Vector& v);
Scalar l1_distance(const Point& p, const Point& q);

inline bool x_aligned(const Point& p, const Point& q) { return p.x == q.x; }
inline bool y_aligned(const Point& p, const Point& q) { return p.y == q.y; }
inline bool aligned(const Point& p, const Point& q) { return x_aligned(p, q) || y_aligned(p, q); }

/// Point on the segment [p, q] at parameter t / total (total > 0).
Point lerp(const Point& p, const Point& q, const Scalar& t, const Scalar& total);

/// The eight signed axis permutations, in tie-break order.
enum class AxisMap : unsigned char {
  identity,
  rot90,     // (x, y) -> (-y, x)
  rot180,    // (x, y) -> (-x, -y)
  rot270,    // (x, y) -> (y, -x)
  flip_x,    // (x, y) -> (-x, y)
  flip_y,    // (x, y) -> (x, -y)
  swap,      // (x, y) -> (y, x)
  anti_swap  // (x, y) -> (-y, -x)
};

inline constexpr std::array<AxisMap, 8> kAllAxisMaps = {
    AxisMap::identity, AxisMap::rot90,  AxisMap::rot180, AxisMap::rot270,
    AxisMap::flip_x,   AxisMap::flip_y, AxisMap::swap,   AxisMap::anti_swap};

std::string_view axis_map_name(AxisMap m);
std::optional<AxisMap> axis_map_from_name(std::string_view name);

Vector apply(AxisMap m, const Vector& v);
AxisMap compose(AxisMap outer, AxisMap inner);
AxisMap invert(AxisMap m);

/// Isometry of the L1 plane: p -> linear(p) + translation.
struct Frame {
  AxisMap linear = AxisMap::identity;
  Vector translation;

  friend bool operator==(const Frame&, const Frame&) = default;

  Point apply(const Point& p) const;
  /// Linear part only.
  Vector apply(const Vector& v) const;
};

Frame frame_compose(const Frame& outer, const Frame& inner);
Frame frame_invert(const Frame& f);
inline Point frame_apply(const Frame& f, const Point& p) { return f.apply(p); }

}  // namespace cnn
