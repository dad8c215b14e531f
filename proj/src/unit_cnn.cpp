#include "cnn/unit_cnn.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace cnn {

namespace {

// Requests and start mapped to integer ranks on their coordinate grid.
struct Grid {
  std::vector<Scalar> xs;
  std::vector<Scalar> ys;
  std::pair<int, int> start;
  std::vector<std::pair<int, int>> requests;

  Point point(const std::pair<int, int>& p) const { return {xs[p.first], ys[p.second]}; }
};

int rank_of(const std::vector<Scalar>& sorted, const Scalar& v) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

Grid compress(const std::vector<Point>& requests, const Point& start) {
  Grid g;
  g.xs.push_back(start.x);
  g.ys.push_back(start.y);
  for (const auto& r : requests) {
    g.xs.push_back(r.x);
    g.ys.push_back(r.y);
  }
  for (auto* v : {&g.xs, &g.ys}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  g.start = {rank_of(g.xs, start.x), rank_of(g.ys, start.y)};
  for (const auto& r : requests) g.requests.emplace_back(rank_of(g.xs, r.x), rank_of(g.ys, r.y));
  return g;
}

bool grid_aligned(const std::pair<int, int>& p, const std::pair<int, int>& q) {
  return p.first == q.first || p.second == q.second;
}

}  // namespace

int move_charge(const Point& from, const Point& to) {
  return (from.x == to.x ? 0 : 1) + (from.y == to.y ? 0 : 1);
}

bool is_orthogonal(const std::vector<Point>& requests) {
  for (std::size_t i = 1; i < requests.size(); ++i) {
    if (requests[i] == requests[i - 1] || !aligned(requests[i], requests[i - 1])) return false;
  }
  return true;
}

void Sweet4::reset(const Point& start) {
  server_ = start;
  dollars_ = 0;
  cycle_costs_.clear();
  stage_ = Stage::need_r1;
}

void Sweet4::move_to(const Point& p) {
  const int charge = move_charge(server_, p);
  server_ = p;
  dollars_ += charge;
  cycle_costs_.back() += charge;
}

void Sweet4::begin_cycle(const Point& r1) {
  cycle_costs_.push_back(0);
  r1_ = r1;
  if (server_.x == r1.x) {
    x_primary_ = true;
  } else if (server_.y == r1.y) {
    x_primary_ = false;
  } else {
    x_primary_ = true;
    move_to({r1.x, server_.y});
  }
  stage_ = Stage::need_r2;
}

void Sweet4::serve(const Point& r) {
  // u is the primary coordinate of the cycle, v the other one.
  auto u = [this](const Point& p) { return x_primary_ ? p.x : p.y; };
  auto v = [this](const Point& p) { return x_primary_ ? p.y : p.x; };
  auto make = [this](const Scalar& pu, const Scalar& pv) {
    return x_primary_ ? Point{pu, pv} : Point{pv, pu};
  };

  for (;;) {
    switch (stage_) {
      case Stage::need_r1:
        begin_cycle(r);
        return;
      case Stage::need_r2:
        if (u(r) == u(r1_)) return;
        r2_ = r;
        move_to(make(u(r1_), v(r)));
        stage_ = v(r1_) == v(r2_) ? Stage::case_a : Stage::case_b;
        return;
      case Stage::case_a:
        // Sweet spot lies on v = v1.
        if (v(r) == v(r1_)) return;
        move_to(make(u(r), v(r1_)));
        stage_ = Stage::settled;
        return;
      case Stage::case_b: {
        const Point other = make(u(r2_), v(r1_));
        const bool here = aligned(server_, r);
        const bool there = aligned(other, r);
        if (here && there) return;
        if (here) {
          stage_ = Stage::settled;
          return;
        }
        if (there) {
          move_to(other);
          stage_ = Stage::settled;
          return;
        }
        stage_ = Stage::need_r1;
        break;
      }
      case Stage::settled:
        if (aligned(server_, r)) return;
        stage_ = Stage::need_r1;
        break;
    }
  }
}

void Ortho3::reset(const Point& start) {
  server_ = start;
  dollars_ = 0;
  previous_.reset();
}

void Ortho3::serve(const Point& r) {
  if (previous_ && (*previous_ == r || !aligned(*previous_, r)))
    throw std::invalid_argument("ortho3: request sequence is not orthogonal");
  if (!aligned(server_, r)) {
    const Point target = previous_ ? *previous_ : Point{r.x, server_.y};
    dollars_ += move_charge(server_, target);
    server_ = target;
  }
  previous_ = r;
}

UnitRun run_unit(UnitOnline& algo, const std::vector<Point>& requests, const Point& start) {
  UnitRun out;
  algo.reset(start);
  for (const auto& r : requests) {
    const std::int64_t before = algo.dollars();
    algo.serve(r);
    if (!aligned(algo.position(), r)) throw std::logic_error("online algorithm left a request unserved");
    out.transcript.push_back({r, algo.position(), static_cast<int>(algo.dollars() - before)});
  }
  out.dollars = algo.dollars();
  return out;
}

UnitRun sweet4_run(const std::vector<Point>& requests, const Point& start) {
  Sweet4 algo;
  UnitRun out = run_unit(algo, requests, start);
  out.cycle_costs = algo.cycle_costs();
  return out;
}

UnitRun ortho3_run(const std::vector<Point>& requests, const Point& start) {
  if (!is_orthogonal(requests)) throw std::invalid_argument("ortho3: request sequence is not orthogonal");
  Ortho3 algo;
  return run_unit(algo, requests, start);
}

OptResult bruteforce_opt(const std::vector<Point>& requests, const Point& start, std::size_t limit) {
  if (requests.size() > limit) throw std::length_error("bruteforce_opt: too many requests");
  const Grid g = compress(requests, start);
  using Pos = std::pair<int, int>;
  struct Node {
    std::int64_t cost;
    Pos parent;
  };
  std::vector<std::map<Pos, Node>> layers(requests.size() + 1);
  layers[0][g.start] = {0, g.start};
  for (std::size_t i = 0; i < requests.size(); ++i) {
    const Pos r = g.requests[i];
    auto relax = [&](const Pos& to, std::int64_t cost, const Pos& from) {
      auto [it, inserted] = layers[i + 1].try_emplace(to, Node{cost, from});
      if (!inserted && (cost < it->second.cost || (cost == it->second.cost && from < it->second.parent)))
        it->second = {cost, from};
    };
    for (const auto& [p, node] : layers[i]) {
      if (grid_aligned(p, r)) {
        relax(p, node.cost, p);
      } else {
        relax({r.first, p.second}, node.cost + 1, p);
        relax({p.first, r.second}, node.cost + 1, p);
      }
    }
  }
  const auto& last = layers.back();
  auto best = std::min_element(last.begin(), last.end(), [](const auto& a, const auto& b) {
    return a.second.cost < b.second.cost || (a.second.cost == b.second.cost && a.first < b.first);
  });
  OptResult out;
  out.dollars = best->second.cost;
  out.positions.resize(requests.size());
  Pos p = best->first;
  for (std::size_t i = requests.size(); i > 0; --i) {
    out.positions[i - 1] = g.point(p);
    p = layers[i].at(p).parent;
  }
  return out;
}

std::int64_t exhaustive_frugal_opt(const std::vector<Point>& requests, const Point& start) {
  const Grid g = compress(requests, start);
  std::function<std::int64_t(std::size_t, int, int)> go = [&](std::size_t i, int x, int y) -> std::int64_t {
    if (i == g.requests.size()) return 0;
    const auto [rx, ry] = g.requests[i];
    if (x == rx || y == ry) return go(i + 1, x, y);
    return 1 + std::min(go(i + 1, rx, y), go(i + 1, x, ry));
  };
  return go(0, g.start.first, g.start.second);
}

std::int64_t exhaustive_any_opt(const std::vector<Point>& requests, const Point& start) {
  const Grid g = compress(requests, start);
  const int nx = static_cast<int>(g.xs.size());
  const int ny = static_cast<int>(g.ys.size());
  std::function<std::int64_t(std::size_t, int, int)> go = [&](std::size_t i, int x, int y) -> std::int64_t {
    if (i == g.requests.size()) return 0;
    const auto [rx, ry] = g.requests[i];
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int tx = 0; tx < nx; ++tx) {
      for (int ty = 0; ty < ny; ++ty) {
        if (tx != rx && ty != ry) continue;
        const std::int64_t charge = (tx != x ? 1 : 0) + (ty != y ? 1 : 0);
        best = std::min(best, charge + go(i + 1, tx, ty));
      }
    }
    return best;
  };
  return go(0, g.start.first, g.start.second);
}

UnitRun adversary_unit_square(UnitOnline& online, std::size_t rounds) {
  UnitRun out;
  online.reset({0, 0});
  std::optional<Point> previous;
  auto is_vertex = [](const Point& p) {
    return (p.x == Scalar(0) || p.x == Scalar(1)) && (p.y == Scalar(0) || p.y == Scalar(1));
  };
  for (std::size_t i = 0; i < rounds; ++i) {
    const Point server = online.position();
    if (!is_vertex(server)) throw std::logic_error("adversary: online server left the square's vertices");
    Point request{Scalar(1) - server.x, Scalar(1) - server.y};
    if (previous && !aligned(*previous, request)) request = {Scalar(1) - previous->x, previous->y};
    const std::int64_t before = online.dollars();
    online.serve(request);
    if (!aligned(online.position(), request)) throw std::logic_error("adversary: online server missed a request");
    out.transcript.push_back({request, online.position(), static_cast<int>(online.dollars() - before)});
    previous = request;
  }
  out.dollars = online.dollars();
  return out;
}

}  // namespace cnn
