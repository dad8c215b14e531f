#include <stdexcept>

#include "cnn/generators.hpp"
#include "cnn/potential.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cnn;
using cnn::testing::q;

namespace {

Instance mirrored(const Instance& inst) {
  Instance out{{-inst.start.x, inst.start.y}, {}};
  for (const auto& seg : inst.segments) out.segments.push_back({{-seg.direction.dx, seg.direction.dy}, seg.length});
  return out;
}

AlignedTrajectory mirrored(const AlignedTrajectory& traj) {
  AlignedTrajectory out;
  for (const auto& bp : traj.breakpoints) out.breakpoints.push_back({bp.s, {-bp.position.x, bp.position.y}});
  return out;
}

// The potential written out term by term from world data, without frames:
// h is the component of (opt - server) along the cycle's `up` direction.
Scalar phi_by_hand(const Point& server, const Point& opt, const Vector& offset, const Vector& up,
                   const Scalar& ell_on, const Scalar& ell_opt) {
  const Scalar r3 = Scalar::sqrt3();
  const Point shifted = server + offset;
  const Scalar d = abs(shifted.x - opt.x) + abs(shifted.y - opt.y);
  const Scalar mag = abs(offset.dx) + abs(offset.dy);
  const Scalar h = (opt.x - server.x) * up.dx + (opt.y - server.y) * up.dy;
  Scalar f;
  if (h.sign() > 0) f = (6 - 2 * r3) * (h < mag ? h : mag);
  return (3 + 2 * r3) * ell_opt - 3 * d - ell_on - mag + f;
}

}  // namespace

TEST_CASE("f_term examples") {
  CHECK(f_term(1, q(-1, 2)) == Scalar(0));
  CHECK(f_term(1, 0) == Scalar(0));
  CHECK(f_term(1, q(1, 2)) == 3 - Scalar::sqrt3());
  CHECK(f_term(1, 2) == 6 - 2 * Scalar::sqrt3());
  CHECK(f_term(0, 5) == Scalar(0));
  CHECK_THROWS_AS(f_term(-1, 1), std::invalid_argument);
}

TEST_CASE("f_term is continuous at its breakpoints") {
  const Scalar tiny = q(1, 1000000);
  for (const Scalar mag : {q(1, 3), Scalar(1), constants::inverse_decay()}) {
    CHECK(f_term(mag, mag) == constants::f_slope() * mag);
    CHECK(f_term(mag, mag + tiny) == f_term(mag, mag));
    CHECK(f_term(mag, mag) - f_term(mag, mag - tiny) == constants::f_slope() * tiny);
    CHECK(f_term(mag, tiny) == constants::f_slope() * tiny);
  }
}

TEST_CASE("phi example") {
  const PotentialRecord r = phi({1, 0}, {0, 0}, {-1, 0}, 2, 1, Frame{});
  CHECK(r.d_term == Scalar(0));
  CHECK(r.offset_mag == Scalar(1));
  CHECK(r.f_term == Scalar(0));
  CHECK(r.phi == 2 * Scalar::sqrt3());
}

TEST_CASE("phi agrees with a term-by-term evaluation") {
  cnn::testing::Random rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Frame f = rng.frame();
    const Vector up = frame_invert(f).apply(Vector{0, 1});
    const Scalar mag = abs(rng.scalar());
    const Vector offset = frame_invert(f).apply(Vector{-mag, 0});
    const Point server = rng.point(), opt = rng.point();
    const Scalar on = abs(rng.scalar()), off = abs(rng.scalar());
    CHECK(phi(server, opt, offset, on, off, f).phi == phi_by_hand(server, opt, offset, up, on, off));
  }
}

TEST_CASE("potential starts at zero when both servers share the start") {
  const GeneratedPair pair = random_orthogonal(5, 6, 3);
  const VerificationReport r = verify_nondecreasing(run(pair.instance), pair.opt);
  REQUIRE_FALSE(r.records.empty());
  CHECK(r.records.front().phi == Scalar(0));
  CHECK(r.ok);
}

TEST_CASE("tight1 potential is flat across the rook's vertical leg") {
  const GeneratedPair pair = tight1(1);
  const VerificationReport r = verify_nondecreasing(run(pair.instance), pair.opt);
  CHECK(r.ok);
  Scalar at_two, at_end;
  for (const auto& rec : r.records) {
    if (rec.s == Scalar(2)) at_two = rec.phi;
    if (rec.s == pair.instance.total_length()) at_end = rec.phi;
  }
  CHECK(at_two == at_end);
}

TEST_CASE("following the request exactly is a valid opt") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GeneratedPair pair = random_orthogonal(seed, 8, 3);
    AlignedTrajectory follow{{{0, pair.instance.start}}};
    Scalar s;
    Point p = pair.instance.start;
    for (const auto& seg : pair.instance.segments) {
      s += seg.length;
      p = p + seg.displacement();
      follow.breakpoints.push_back({s, p});
    }
    CHECK(verify_nondecreasing(run(pair.instance), follow).ok);
  }
}

TEST_CASE("a corrupted trace is rejected with a location") {
  const GeneratedPair pair = tight1(1);
  Trace bad = run(pair.instance);
  const Scalar last_s = bad.events.back().s;
  Scalar before = bad.events.front().s;
  for (const auto& ev : bad.events)
    if (ev.s < last_s) before = ev.s;
  bad.events.back().cost_on += 1;
  bad.final_cost += 1;
  const VerificationReport r = verify_nondecreasing(bad, pair.opt);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_decrease.has_value());
  CHECK(r.first_decrease->s > before);
  CHECK(r.first_decrease->s <= last_s);
  CHECK(r.first_decrease->phi_after < r.first_decrease->phi_before);
}

TEST_CASE("verify rejects mismatched inputs") {
  const GeneratedPair pair = tight1(1);
  const Trace t = run(pair.instance);
  const AlignedTrajectory far{{{0, {5, 5}}, {pair.instance.total_length(), {5, 5}}}};
  CHECK_THROWS_AS(verify_nondecreasing(t, far), std::invalid_argument);
  const AlignedTrajectory longer = extend_stationary(pair.opt, 1);
  CHECK_THROWS_AS(verify_nondecreasing(t, longer), std::invalid_argument);
}

TEST_CASE("the potential is monotone on random pairs, densely sampled") {
  // Independent of the kink enumeration: sample on a fine rational grid.
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const GeneratedPair pair = random_orthogonal(seed, 6, 2);
    const Trace t = run(pair.instance);
    const auto& ev = t.events;
    Scalar last;
    bool first = true;
    std::size_t i = 0;
    const Scalar total = pair.instance.total_length();
    for (Scalar s; s <= total; s += q(1, 24)) {
      while (i + 1 < ev.size() && ev[i + 1].s <= s) ++i;
      const TraceEvent& a = ev[i];
      Point server = a.server;
      Vector offset = a.offset;
      Scalar cost = a.cost_on;
      if (i + 1 < ev.size() && a.s < s) {
        const TraceEvent& b = ev[i + 1];
        const Scalar k = (s - a.s) / (b.s - a.s);
        server = a.server + k * (b.server - a.server);
        offset = a.offset + k * (b.offset - a.offset);
        cost = a.cost_on + k * (b.cost_on - a.cost_on);
      }
      const Point opt = pair.opt.position_at(s);
      const Scalar value = phi(server, opt, offset, cost, pair.opt.cost_until(s), a.frame).phi;
      if (!first) CHECK_MESSAGE(value >= last, "seed " << seed << " s " << s.to_string());
      last = value;
      first = false;
    }
  }
}

TEST_CASE("mirroring the instance leaves the potential unchanged") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GeneratedPair pair = random_orthogonal(seed, 8, 3);
    const Trace a = run(pair.instance);
    const Trace b = run(mirrored(pair.instance));
    CHECK(a.final_cost == b.final_cost);
    const VerificationReport ra = verify_nondecreasing(a, pair.opt);
    const VerificationReport rb = verify_nondecreasing(b, mirrored(pair.opt));
    CHECK(ra.ok);
    CHECK(rb.ok);
    CHECK(ra.records.back().phi == rb.records.back().phi);
  }
}

TEST_CASE("homing suffix") {
  const GeneratedPair pair = tight2(1);
  const Point corner = pair.opt.breakpoints.back().position;
  CHECK(append_homing_suffix(pair.instance, corner, 0) == pair.instance);
  CHECK_THROWS_AS(append_homing_suffix(pair.instance, {7, 7}, 1), std::invalid_argument);

  const Instance one = append_homing_suffix(pair.instance, corner, 1);
  CHECK(one.end() == corner);
  CHECK(one.total_length() == pair.instance.total_length() + l1_distance(pair.instance.end(), corner) + 4);

  // Once the server sits on the corner the excursions are free.
  const Trace t1 = run(one);
  if (t1.events.back().server == corner) {
    CHECK(run(append_homing_suffix(pair.instance, corner, 3)).final_cost == t1.final_cost);
  }
}

TEST_CASE("homed instances satisfy the ratio bound") {
  for (const auto& pair : {tight2(3), fig2_scenario(), random_orthogonal(17, 12, 3)}) {
    const Point corner = pair.opt.breakpoints.back().position;
    const Instance homed = append_homing_suffix(pair.instance, corner, 1);
    const AlignedTrajectory opt = extend_stationary(pair.opt, homed.total_length() - pair.instance.total_length());
    const Trace t = run(homed);
    const VerificationReport r = verify_nondecreasing(t, opt);
    CHECK(r.ok);
    CHECK(r.records.back().f_term.is_zero());
    CHECK(t.final_cost <= constants::competitive_ratio() * opt.cost());
  }
}

TEST_CASE("a displaced opt start shows up as additive slack") {
  // tight1's opt starts one unit away from the request, so the potential
  // starts at -3 and homing past the tight point costs exactly that.
  const GeneratedPair pair = tight1(3);
  const Point corner = pair.opt.breakpoints.back().position;
  const VerificationReport r0 = verify_nondecreasing(run(pair.instance), pair.opt);
  CHECK(r0.records.front().phi == Scalar(-3));
  CHECK(run(pair.instance).final_cost == constants::competitive_ratio() * pair.opt.cost());
  const Instance homed = append_homing_suffix(pair.instance, corner, 1);
  const AlignedTrajectory opt = extend_stationary(pair.opt, homed.total_length() - pair.instance.total_length());
  CHECK(run(homed).final_cost == constants::competitive_ratio() * opt.cost() + 3);
}

TEST_CASE("ratio conventions") {
  CHECK(competitive_ratio(Scalar(0), Scalar(0)) == Scalar(1));
  CHECK_FALSE(competitive_ratio(Scalar(1), Scalar(0)).has_value());
  CHECK(competitive_ratio(Scalar(3), Scalar(2)) == q(3, 2));
  const GeneratedPair pair = tight2(2);
  CHECK(competitive_ratio(run(pair.instance), pair.opt) == constants::competitive_ratio());
}
