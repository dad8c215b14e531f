#include "cnn/generators.hpp"

#include <random>
#include <stdexcept>

namespace cnn {

namespace {

Scalar tight_c() { return constants::inverse_decay(); }

void append_waypoints(std::vector<Point>& out, const std::vector<Point>& pts) {
  for (const auto& p : pts) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
}

Scalar coord(const Point& p, bool horizontal) { return horizontal ? p.x : p.y; }

Point with_coord(Point p, bool horizontal, const Scalar& v) {
  (horizontal ? p.x : p.y) = v;
  return p;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  Scalar grid_value(std::int64_t bound) {
    const std::int64_t den = uniform(1, 4);
    return Scalar::fraction(uniform(-bound * den, bound * den), den);
  }

 private:
  std::mt19937_64 gen_;
};

// One piece of the randomized opt: request moves from `from` to `to` along
// one axis, opt currently at `p` (aligned with `from`).
Point random_opt_step(Rng& rng, const Point& p, const Point& from, const Point& to, bool horizontal,
                      std::int64_t bound) {
  // For a horizontal request move the request line is y = from.y; the
  // tracked coordinate is x.
  const bool on_line = coord(p, !horizontal) == coord(from, !horizontal);
  const bool tracking = coord(p, horizontal) == coord(from, horizontal);
  if (on_line) {
    const int pick = static_cast<int>(rng.uniform(0, tracking ? 9 : 6));
    if (pick < 4) return p;
    if (pick < 7) return with_coord(p, horizontal, rng.grid_value(bound));
    return with_coord(with_coord(p, horizontal, coord(to, horizontal)), !horizontal,
                      rng.grid_value(bound));
  }
  Point q = with_coord(p, horizontal, coord(to, horizontal));
  const int pick = static_cast<int>(rng.uniform(0, 9));
  if (pick < 4) return q;
  if (pick < 7) return with_coord(q, !horizontal, coord(from, !horizontal));
  return with_coord(q, !horizontal, rng.grid_value(bound));
}

Point lazy_step(const Point& server, const Point& from, const Point& to) {
  const bool horizontal = from.y == to.y;
  if (coord(server, !horizontal) == coord(from, !horizontal)) return server;
  return with_coord(server, horizontal, coord(to, horizontal));
}

}  // namespace

GeneratedPair tight1(std::uint64_t cycles) {
  if (cycles == 0) throw std::invalid_argument("tight1 needs at least one cycle");
  const Scalar c = tight_c();
  const Frame step{AxisMap::rot270, {0, c}};
  Frame g;  // M^j
  std::vector<Point> waypoints;
  AlignedTrajectory opt;
  Scalar s;
  opt.breakpoints.push_back({s, g.apply(Point{0, 0})});
  for (std::uint64_t j = 0; j < cycles; ++j) {
    append_waypoints(waypoints, {g.apply(Point{0, 1}), g.apply(Point{0, 0}), g.apply(Point{1, 0}),
                                 g.apply(Point{1, c})});
    s += 2;
    opt.breakpoints.push_back({s, g.apply(Point{0, 0})});
    s += c;
    opt.breakpoints.push_back({s, g.apply(Point{0, c})});
    g = frame_compose(step, g);
  }
  return {polyline_instance(waypoints), simplified(opt),
          {"tight1", cycles, std::nullopt, constants::competitive_ratio()}};
}

GeneratedPair tight2(std::uint64_t cycles) {
  if (cycles == 0) throw std::invalid_argument("tight2 needs at least one cycle");
  const Scalar c = tight_c();
  std::vector<Point> waypoints;
  AlignedTrajectory opt;
  Scalar s;
  opt.breakpoints.push_back({s, {0, 1}});
  const Scalar cycle_length = constants::competitive_ratio();  // 5 + 4c
  for (std::uint64_t j = 0; j < cycles; ++j) {
    const Vector t{static_cast<long>(j), 0};
    append_waypoints(waypoints, {Point{0, 1} + t, Point{0, 0} + t, Point{1, 0} + t, Point{1, -c} + t,
                                 Point{1, 1} + t, Point{-c, 1} + t, Point{1, 1} + t});
    opt.breakpoints.push_back({s + 1, Point{0, 1} + t});
    opt.breakpoints.push_back({s + 2, Point{1, 1} + t});
    s += cycle_length;
    opt.breakpoints.push_back({s, Point{1, 1} + t});
  }
  return {polyline_instance(waypoints), simplified(opt),
          {"tight2", cycles, std::nullopt, constants::competitive_ratio()}};
}

GeneratedPair fig2_scenario() {
  const std::vector<Point> waypoints{{0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {1, 0}, {0, 0}};
  Instance inst = polyline_instance(waypoints);
  AlignedTrajectory opt{{{0, {0, 1}}, {1, {0, 0}}, {inst.total_length(), {0, 0}}}};
  return {std::move(inst), std::move(opt), {"fig2", std::nullopt, std::nullopt, Scalar(3)}};
}

AlignedTrajectory fig2_committing_online() {
  return {{{0, {0, 1}}, {1, {0, 1}}, {2, {1, 1}}, {3, {0, 0}}, {7, {0, 0}}}};
}

void BishopRookOnline::reset(const Point& start) { engine_ = std::make_unique<BishopRook>(start); }

void BishopRookOnline::feed(const RequestSegment& segment) { engine_->feed(segment); }

Point BishopRookOnline::position() const { return engine_->state().server; }

Scalar BishopRookOnline::cost() const { return engine_->state().cost_on; }

void LazyOnline::reset(const Point& start) {
  server_ = start;
  request_ = start;
  cost_ = 0;
}

void LazyOnline::feed(const RequestSegment& segment) {
  if (!segment.is_axis_parallel()) throw std::invalid_argument("LazyOnline needs axis-parallel legs");
  const Point to = request_ + segment.displacement();
  const Point next = lazy_step(server_, request_, to);
  cost_ += l1_distance(server_, next);
  server_ = next;
  request_ = to;
}

GeneratedPair adversary_continuous(ContinuousOnline& online, std::uint64_t cycles) {
  const Point origin{0, 0};
  online.reset(origin);
  GeneratedPair out;
  out.instance.start = origin;
  out.meta = {"adversary", cycles, std::nullopt, std::nullopt};
  out.opt.breakpoints.push_back({0, origin});

  Point request = origin;
  Scalar s;
  auto walk = [&](const Point& to) {
    const bool horizontal = request.y == to.y;
    const RequestSegment seg = axis_move(horizontal, horizontal ? to.x - request.x : to.y - request.y);
    online.feed(seg);
    out.instance.segments.push_back(seg);
    s += seg.length;
    request = to;
  };
  auto flip = [](const Scalar& v) { return Scalar(1) - v; };

  Point a = origin;
  for (std::uint64_t cycle = 0; cycle < cycles; ++cycle) {
    const Point b1{a.x, flip(a.y)};
    const Point b2{flip(a.x), a.y};
    const Point c{flip(a.x), flip(a.y)};
    const Scalar cycle_start = s;
    walk(b1);
    walk(c);
    const Point server = online.position();
    const Point k = l1_distance(server, b1) > l1_distance(server, b2) ? b1 : b2;
    if (k == b1) {
      out.opt.breakpoints.push_back({cycle_start + 1, b1});
    } else {
      out.opt.breakpoints.push_back({cycle_start + 1, a});
      out.opt.breakpoints.push_back({cycle_start + 2, b2});
    }
    walk(k);
    for (std::size_t loop = 0; loop < kMaxLoops && !(online.position() == k); ++loop) {
      walk(a);
      walk(k);
      walk(c);
      walk(k);
    }
    out.opt.breakpoints.push_back({s, k});
    a = k;
  }
  out.opt = simplified(out.opt);
  return out;
}

GeneratedPair random_orthogonal(std::uint64_t seed, std::size_t n_segments, std::int64_t coord_bound) {
  if (coord_bound < 1 && n_segments > 0)
    throw std::invalid_argument("random_orthogonal needs coord_bound >= 1");
  Rng rng(seed);
  GeneratedPair out;
  out.meta = {"random", std::nullopt, seed, std::nullopt};

  Point request{rng.grid_value(coord_bound), rng.grid_value(coord_bound)};
  out.instance.start = request;
  Point opt = request;
  Scalar s;
  out.opt.breakpoints.push_back({s, opt});

  for (std::size_t i = 0; i < n_segments; ++i) {
    const bool horizontal = rng.chance(1, 2);
    Scalar target = rng.grid_value(coord_bound);
    while (target == coord(request, horizontal)) target = rng.grid_value(coord_bound);
    const Point to = with_coord(request, horizontal, target);
    out.instance.segments.push_back(axis_move(horizontal, target - coord(request, horizontal)));

    std::vector<Point> stops{to};
    if (rng.chance(1, 3)) {
      const Scalar k = Scalar::fraction(rng.uniform(1, 3), 4);
      stops.insert(stops.begin(), request + k * (to - request));
    }
    Point from = request;
    for (const auto& stop : stops) {
      opt = random_opt_step(rng, opt, from, stop, horizontal, coord_bound);
      s += l1_distance(from, stop);
      out.opt.breakpoints.push_back({s, opt});
      from = stop;
    }
    request = to;
  }
  out.instance = normalized(out.instance);
  const AlignmentReport check = validate_alignment(out.opt, out.instance);
  if (!check.feasible) throw std::logic_error("random_orthogonal produced an infeasible opt");
  return out;
}

AlignedTrajectory lazy_trajectory(const Instance& inst) {
  if (!inst.is_axis_parallel()) throw std::invalid_argument("lazy_trajectory needs an axis-parallel instance");
  AlignedTrajectory out;
  Point server = inst.start;
  Point request = inst.start;
  Scalar s;
  out.breakpoints.push_back({s, server});
  for (const auto& seg : inst.segments) {
    if (seg.length.is_zero()) continue;
    const Point to = request + seg.displacement();
    server = lazy_step(server, request, to);
    s += seg.arc_length();
    out.breakpoints.push_back({s, server});
    request = to;
  }
  return out;
}

}  // namespace cnn
