#pragma once

#include <optional>
#include <vector>

#include "cnn/engine.hpp"
#include "cnn/trajectory.hpp"

namespace cnn {

/// The potential and its terms at one checkpoint:
///   phi = (3 + 2 sqrt3) ell_opt - 3 d_term - ell_on - offset_mag + f_term
struct PotentialRecord {
  Scalar s;
  Scalar ell_opt;
  Scalar ell_on;
  /// d(p_on + o, p_opt)
  Scalar d_term;
  Scalar offset_mag;
  Scalar f_term;
  Scalar phi;

  friend bool operator==(const PotentialRecord&, const PotentialRecord&) = default;
};

struct PotentialDecrease {
  Scalar s;
  Scalar phi_before;
  Scalar phi_after;
};

struct VerificationReport {
  bool ok = true;
  std::optional<PotentialDecrease> first_decrease;
  std::vector<PotentialRecord> records;
};

/// Piecewise-linear f: 0 for h <= 0, (6 - 2 sqrt3) h up to |o|, then flat.
/// Throws std::invalid_argument for a negative offset magnitude.
Scalar f_term(const Scalar& offset_mag, const Scalar& h);

/// Evaluates the potential. h is measured in `frame`'s canonical y direction
/// (opt above the server is positive). The record's s is left at zero.
PotentialRecord phi(const Point& server, const Point& opt, const Vector& offset_vec,
                    const Scalar& ell_on, const Scalar& ell_opt, const Frame& frame);

/// Checks that the potential never decreases along the trace when the
/// offline server follows `opt`.
///
/// The potential is evaluated at every trace event, every opt breakpoint and
/// every interior kink (coordinate differences of p_on + o - p_opt, offset
/// components, h and h - |o| crossing zero). Between these checkpoints all
/// terms are linear, so the endpoint comparison is exact.
///
/// Throws std::invalid_argument if opt is not aligned with the trace's
/// instance or the arc lengths differ.
VerificationReport verify_nondecreasing(const Trace& trace, const AlignedTrajectory& opt);

/// Appends `reps` L-shaped request excursions through `corner`: the request
/// first walks to the corner, then repeatedly goes out one unit along +x and
/// back, then one unit along +y and back. Throws std::invalid_argument if the
/// corner is not aligned with the instance's final request point.
Instance append_homing_suffix(const Instance& inst, const Point& corner, std::size_t reps);

/// Extends opt by staying at its final position for `extra` arc length.
AlignedTrajectory extend_stationary(const AlignedTrajectory& opt, const Scalar& extra);

/// ell_on / ell_opt. nullopt means unbounded (ell_opt = 0 < ell_on); 0 / 0
/// is reported as 1.
std::optional<Scalar> competitive_ratio(const Scalar& ell_on, const Scalar& ell_opt);
std::optional<Scalar> competitive_ratio(const Trace& trace, const AlignedTrajectory& opt);

}  // namespace cnn
