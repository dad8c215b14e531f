#include "doctest.h"
#include "support.hpp"

using namespace cnn;
using cnn::testing::q;

TEST_CASE("l1 distance examples") {
  const Scalar c = constants::inverse_decay();
  CHECK(l1_distance({0, 0}, {1, 1}) == Scalar(2));
  CHECK(l1_distance({0, 1}, {1, 0}) == Scalar(2));
  CHECK(l1_distance({1, 0}, {1, c}) == c);
  CHECK(l1_distance({-2, 3}, {-2, 3}) == Scalar(0));
}

TEST_CASE("axis maps act as documented") {
  const Vector v{2, 5};
  CHECK(apply(AxisMap::identity, v) == Vector{2, 5});
  CHECK(apply(AxisMap::rot90, v) == Vector{-5, 2});
  CHECK(apply(AxisMap::rot180, v) == Vector{-2, -5});
  CHECK(apply(AxisMap::rot270, v) == Vector{5, -2});
  CHECK(apply(AxisMap::flip_x, v) == Vector{-2, 5});
  CHECK(apply(AxisMap::flip_y, v) == Vector{2, -5});
  CHECK(apply(AxisMap::swap, v) == Vector{5, 2});
  CHECK(apply(AxisMap::anti_swap, v) == Vector{-5, -2});
  CHECK(apply(AxisMap::rot90, Vector{1, 0}) == Vector{0, 1});
}

TEST_CASE("axis map names round trip") {
  for (AxisMap m : kAllAxisMaps) CHECK(axis_map_from_name(axis_map_name(m)) == m);
  CHECK_FALSE(axis_map_from_name("rot45").has_value());
}

TEST_CASE("identity frame") {
  const Frame id;
  CHECK(id.apply(Point{5, -2}) == Point{5, -2});
}

TEST_CASE("axis map group laws") {
  const Vector v{3, -7};
  for (AxisMap a : kAllAxisMaps) {
    CHECK(compose(a, invert(a)) == AxisMap::identity);
    CHECK(compose(invert(a), a) == AxisMap::identity);
    for (AxisMap b : kAllAxisMaps) {
      CHECK(apply(compose(a, b), v) == apply(a, apply(b, v)));
      for (AxisMap c : kAllAxisMaps) CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("frames are exact L1 isometries with group laws") {
  cnn::testing::Random rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Frame f = rng.frame();
    const Frame g = rng.frame();
    const Point p = rng.point();
    const Point r = rng.point();
    CHECK(l1_distance(f.apply(p), f.apply(r)) == l1_distance(p, r));
    CHECK(frame_apply(frame_compose(f, frame_invert(f)), p) == p);
    CHECK(frame_apply(frame_compose(frame_invert(f), f), p) == p);
    CHECK(frame_compose(f, g).apply(p) == f.apply(g.apply(p)));
    const Vector axis = rng.coin() ? Vector{rng.scalar(), 0} : Vector{0, rng.scalar()};
    if (!axis.is_zero()) CHECK(f.apply(axis).is_axis_parallel());
  }
}

TEST_CASE("l1 metric properties") {
  cnn::testing::Random rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Point a = rng.point(), b = rng.point(), c = rng.point();
    CHECK(l1_distance(a, b) == l1_distance(b, a));
    CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));
    CHECK(l1_distance(a, b) >= Scalar(0));
  }
}

TEST_CASE("lerp and alignment helpers") {
  CHECK(lerp({0, 0}, {4, 0}, 1, 4) == Point{1, 0});
  CHECK(lerp({0, 0}, {0, 2}, q(1, 2), 1) == Point{0, 1});
  CHECK(aligned({1, 2}, {1, 5}));
  CHECK(aligned({1, 2}, {3, 2}));
  CHECK_FALSE(aligned({1, 2}, {3, 4}));
  CHECK(lex_less({0, 5}, {1, 0}));
  CHECK(lex_less({1, 0}, {1, 2}));
  CHECK(Vector{1, 0}.is_axis_parallel());
  CHECK_FALSE(Vector{1, 1}.is_axis_parallel());
  CHECK_FALSE(Vector{0, 0}.is_axis_parallel());
}
