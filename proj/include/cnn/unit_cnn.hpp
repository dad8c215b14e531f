#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnn/geometry.hpp"

namespace cnn {

/// $0 for no move, $1 for an axis-parallel move of any length, $2 otherwise.
int move_charge(const Point& from, const Point& to);

struct UnitTranscriptEntry {
  Point request;
  Point online_position;
  int charge = 0;

  friend bool operator==(const UnitTranscriptEntry&, const UnitTranscriptEntry&) = default;
};

struct UnitRun {
  std::vector<UnitTranscriptEntry> transcript;
  std::int64_t dollars = 0;
  /// Dollars per completed or running cycle (sweet4 only).
  std::vector<std::int64_t> cycle_costs;
};

/// Online algorithm for the unit problem. `serve` must leave the server
/// aligned with the request.
class UnitOnline {
 public:
  virtual ~UnitOnline() = default;
  virtual void reset(const Point& start) = 0;
  virtual void serve(const Point& request) = 0;
  virtual Point position() const = 0;
  virtual std::int64_t dollars() const = 0;
};

/// The cycle algorithm with cases A and B, paying at most $4 per cycle.
///
/// A cycle's first request fixes the primary axis: the server aligns its x
/// with r1 (for $1) unless it already shares a coordinate with r1, in which
/// case that coordinate becomes the primary one. Requests that the server
/// already serves are skipped.
class Sweet4 : public UnitOnline {
 public:
  void reset(const Point& start) override;
  void serve(const Point& request) override;
  Point position() const override { return server_; }
  std::int64_t dollars() const override { return dollars_; }
  const std::vector<std::int64_t>& cycle_costs() const { return cycle_costs_; }

 private:
  enum class Stage { need_r1, need_r2, case_a, case_b, settled };

  void move_to(const Point& p);
  void begin_cycle(const Point& r1);

  Point server_;
  std::int64_t dollars_ = 0;
  std::vector<std::int64_t> cycle_costs_;
  Stage stage_ = Stage::need_r1;
  bool x_primary_ = true;
  Point r1_;
  Point r2_;
};

/// Orthogonal algorithm: stays while aligned, otherwise moves to the
/// previous request point. On the very first request it aligns its x.
/// Throws std::invalid_argument if a request repeats its predecessor or
/// shares no coordinate with it.
class Ortho3 : public UnitOnline {
 public:
  void reset(const Point& start) override;
  void serve(const Point& request) override;
  Point position() const override { return server_; }
  std::int64_t dollars() const override { return dollars_; }

 private:
  Point server_;
  std::int64_t dollars_ = 0;
  std::optional<Point> previous_;
};

UnitRun run_unit(UnitOnline& algo, const std::vector<Point>& requests, const Point& start = {});
UnitRun sweet4_run(const std::vector<Point>& requests, const Point& start = {});
UnitRun ortho3_run(const std::vector<Point>& requests, const Point& start = {});

inline constexpr std::size_t kDefaultOptLimit = 14;

struct OptResult {
  std::int64_t dollars = 0;
  /// Server position after each request along one optimal frugal schedule.
  std::vector<Point> positions;
};

/// Exact offline minimum via a dynamic program over frugal moves. Server
/// positions range over the coordinate grid of the requests and the start.
/// Ties go to the lexicographically smallest position. Throws
/// std::length_error when there are more than `limit` requests.
OptResult bruteforce_opt(const std::vector<Point>& requests, const Point& start = {},
                         std::size_t limit = kDefaultOptLimit);

/// Exponential enumeration of every frugal schedule, for cross-checking.
std::int64_t exhaustive_frugal_opt(const std::vector<Point>& requests, const Point& start = {});

/// Exponential enumeration over all schedules on the coordinate grid,
/// including $2 moves and moves made while already aligned.
std::int64_t exhaustive_any_opt(const std::vector<Point>& requests, const Point& start = {});

/// Unit-square adversary: every request is the vertex diagonally opposite
/// the online server. When the server sits on the previous request that
/// vertex is not orthogonal to it, so the adversary first issues the
/// neighbour of the previous request that lies on the way. Returns the
/// transcript; `rounds` counts emitted requests. Throws std::logic_error if
/// the online server fails to serve a request.
UnitRun adversary_unit_square(UnitOnline& online, std::size_t rounds);

/// True when consecutive requests are distinct and share a coordinate.
bool is_orthogonal(const std::vector<Point>& requests);

}  // namespace cnn
