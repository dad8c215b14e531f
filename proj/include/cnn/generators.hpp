#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "cnn/engine.hpp"
#include "cnn/trajectory.hpp"

namespace cnn {

struct GeneratorMeta {
  std::string name;
  std::optional<std::uint64_t> cycles;
  std::optional<std::uint64_t> seed;
  std::optional<Scalar> expected_ratio;

  friend bool operator==(const GeneratorMeta&, const GeneratorMeta&) = default;
};

/// An instance bundled with a feasible offline trajectory.
struct GeneratedPair {
  Instance instance;
  AlignedTrajectory opt;
  GeneratorMeta meta;

  friend bool operator==(const GeneratedPair&, const GeneratedPair&) = default;
};

/// First tight family. Each cycle, in its own coordinates, walks the
/// request (0,1) -> (0,0) -> (1,0) -> (1,c) with c = (sqrt3 - 1)/2 while opt
/// waits at (0,0) and only moves with the last leg. Cycle j is the first
/// cycle mapped by M^j, M(p) = rot270(p) + (0,c), which puts each cycle's
/// start on the previous cycle's end. Throws std::invalid_argument for 0.
GeneratedPair tight1(std::uint64_t cycles);

/// Second tight family: per cycle the request walks
/// (0,1) -> (0,0) -> (1,0) -> (1,-c) -> (1,1) -> (-c,1) -> (1,1) and the
/// next cycle is shifted one unit along +x. Opt pays 1 per cycle.
/// Throws std::invalid_argument for 0.
GeneratedPair tight2(std::uint64_t cycles);

/// Unit-square lower-bound scenario: the request descends the left edge,
/// runs along the bottom edge and then keeps tracing the bottom-left "L".
/// Opt descends with the request once and sits at the corner.
GeneratedPair fig2_scenario();

/// The corner-committing online server for `fig2_scenario`: it waits at the
/// top, slides along the top edge, then drops diagonally into the
/// bottom-left corner. Costs 3.
AlignedTrajectory fig2_committing_online();

/// Online algorithm for the continuous problem, driven leg by leg.
class ContinuousOnline {
 public:
  virtual ~ContinuousOnline() = default;
  virtual void reset(const Point& start) = 0;
  virtual void feed(const RequestSegment& segment) = 0;
  virtual Point position() const = 0;
  virtual Scalar cost() const = 0;
};

class BishopRookOnline : public ContinuousOnline {
 public:
  void reset(const Point& start) override;
  void feed(const RequestSegment& segment) override;
  Point position() const override;
  Scalar cost() const override;

 private:
  std::unique_ptr<BishopRook> engine_;
};

/// Stays put while the moving request keeps it aligned, otherwise follows
/// the request's moving coordinate.
class LazyOnline : public ContinuousOnline {
 public:
  void reset(const Point& start) override;
  void feed(const RequestSegment& segment) override;
  Point position() const override { return server_; }
  Scalar cost() const override { return cost_; }

 private:
  Point server_;
  Point request_;
  Scalar cost_;
};

/// Interactive unit-square adversary for the continuous problem.
///
/// Every cycle starts with the request at a corner A. The request walks one
/// edge to B1 and then the next edge to the opposite corner C. Of the two
/// corners adjacent to A it then anchors at K, the one farther from the
/// online server (ties go to the corner not visited, B2), and repeats the
/// loop K -> A -> K -> C -> K until the online server sits at K, at most
/// `kMaxLoops` times. Opt is at A when the cycle starts and reaches K for $1.
///
/// The realized instance is returned with the opt; `online` is left in its
/// final state. cycles = 0 gives an empty instance.
GeneratedPair adversary_continuous(ContinuousOnline& online, std::uint64_t cycles);

inline constexpr std::size_t kMaxLoops = 50;

/// Seeded random axis-parallel instance with endpoints on a rational grid in
/// [-coord_bound, coord_bound], bundled with a randomized feasible opt. The
/// opt mixes staying still, sliding along the request's line and tracking
/// the request while drifting off it.
GeneratedPair random_orthogonal(std::uint64_t seed, std::size_t n_segments, std::int64_t coord_bound);

/// Deterministic lazy offline trajectory for an axis-parallel instance: the
/// LazyOnline motion, which is always feasible.
AlignedTrajectory lazy_trajectory(const Instance& inst);

}  // namespace cnn
