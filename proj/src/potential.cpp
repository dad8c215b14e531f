#include "cnn/potential.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cnn {

namespace {

// Opt position and cumulative cost at arbitrary s.
class OptCursor {
 public:
  explicit OptCursor(const AlignedTrajectory& opt) : opt_(opt) {
    cumulative_.reserve(opt.breakpoints.size());
    Scalar total;
    cumulative_.push_back(total);
    for (std::size_t i = 1; i < opt.breakpoints.size(); ++i) {
      total += l1_distance(opt.breakpoints[i - 1].position, opt.breakpoints[i].position);
      cumulative_.push_back(total);
    }
  }

  std::pair<Point, Scalar> at(const Scalar& s) const {
    const auto& bps = opt_.breakpoints;
    auto it = std::upper_bound(bps.begin(), bps.end(), s,
                               [](const Scalar& v, const Breakpoint& bp) { return v < bp.s; });
    std::size_t i = it == bps.begin() ? 0 : static_cast<std::size_t>(it - bps.begin()) - 1;
    if (i + 1 >= bps.size() || s <= bps[i].s) return {bps[i].position, cumulative_[i]};
    const Point p = lerp(bps[i].position, bps[i + 1].position, s - bps[i].s, bps[i + 1].s - bps[i].s);
    return {p, cumulative_[i] + l1_distance(bps[i].position, p)};
  }

  const AlignedTrajectory& trajectory() const { return opt_; }

 private:
  const AlignedTrajectory& opt_;
  std::vector<Scalar> cumulative_;
};

struct OnlineSample {
  Point server;
  Vector offset;
  Scalar cost;
};

OnlineSample interpolate(const TraceEvent& a, const TraceEvent& b, const Scalar& s) {
  if (s == a.s) return {a.server, a.offset, a.cost_on};
  if (s == b.s) return {b.server, b.offset, b.cost_on};
  const Scalar span = b.s - a.s;
  const Scalar k = (s - a.s) / span;
  return {a.server + k * (b.server - a.server), a.offset + k * (b.offset - a.offset),
          a.cost_on + k * (b.cost_on - a.cost_on)};
}

void add_crossing(std::vector<Scalar>& out, const Scalar& a, const Scalar& b, const Scalar& va,
                  const Scalar& vb) {
  if (va.sign() * vb.sign() >= 0) return;
  out.push_back(a + (b - a) * va / (va - vb));
}

void sort_unique(std::vector<Scalar>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Scalar f_term(const Scalar& offset_mag, const Scalar& h) {
  if (offset_mag.sign() < 0) throw std::invalid_argument("f_term: negative offset magnitude");
  if (h.sign() <= 0) return Scalar();
  return constants::f_slope() * min(h, offset_mag);
}

PotentialRecord phi(const Point& server, const Point& opt, const Vector& offset_vec,
                    const Scalar& ell_on, const Scalar& ell_opt, const Frame& frame) {
  PotentialRecord rec;
  rec.ell_on = ell_on;
  rec.ell_opt = ell_opt;
  rec.d_term = l1_distance(server + offset_vec, opt);
  rec.offset_mag = l1_norm(offset_vec);
  const Scalar h = frame.apply(opt - server).dy;
  rec.f_term = f_term(rec.offset_mag, h);
  rec.phi = constants::competitive_ratio() * ell_opt - 3 * rec.d_term - ell_on - rec.offset_mag +
            rec.f_term;
  return rec;
}

VerificationReport verify_nondecreasing(const Trace& trace, const AlignedTrajectory& opt) {
  const AlignmentReport feasibility = validate_alignment(opt, trace.instance);
  if (!feasibility.feasible) {
    throw std::invalid_argument("opt trajectory is not aligned with the request at s = " +
                                feasibility.first_violation->to_string());
  }
  if (trace.events.empty()) throw std::invalid_argument("trace has no events");
  if (trace.events.back().s != opt.end_s())
    throw std::invalid_argument("trace and opt have different arc lengths");

  const OptCursor cursor(opt);
  VerificationReport report;

  auto record = [&](const Scalar& s, const OnlineSample& on, const Frame& frame) {
    const auto [opt_pos, opt_cost] = cursor.at(s);
    PotentialRecord rec = phi(on.server, opt_pos, on.offset, on.cost, opt_cost, frame);
    rec.s = s;
    if (report.ok && !report.records.empty() && rec.phi < report.records.back().phi) {
      report.ok = false;
      report.first_decrease = PotentialDecrease{s, report.records.back().phi, rec.phi};
    }
    report.records.push_back(std::move(rec));
  };

  const auto& events = trace.events;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TraceEvent& ev = events[i];
    record(ev.s, {ev.server, ev.offset, ev.cost_on}, ev.frame);
    if (i + 1 == events.size() || !(ev.s < events[i + 1].s)) continue;
    const TraceEvent& next = events[i + 1];

    std::vector<Scalar> cuts{ev.s, next.s};
    for (const auto& bp : opt.breakpoints) {
      if (ev.s < bp.s && bp.s < next.s) cuts.push_back(bp.s);
    }
    sort_unique(cuts);

    auto linear_terms = [&](const Scalar& s) {
      const OnlineSample on = interpolate(ev, next, s);
      const Point opt_pos = cursor.at(s).first;
      const Vector u = (on.server + on.offset) - opt_pos;
      const Scalar h = ev.frame.apply(opt_pos - on.server).dy;
      return std::array<Scalar, 5>{u.dx, u.dy, on.offset.dx, on.offset.dy, h};
    };

    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Scalar& a = cuts[c];
      const Scalar& b = cuts[c + 1];
      std::vector<Scalar> kinks{a, b};
      {
        const auto va = linear_terms(a);
        const auto vb = linear_terms(b);
        for (std::size_t k = 0; k < va.size(); ++k) add_crossing(kinks, a, b, va[k], vb[k]);
      }
      sort_unique(kinks);
      // |o| is linear between first-level kinks; now find h = |o|.
      std::vector<Scalar> all = kinks;
      for (std::size_t k = 0; k + 1 < kinks.size(); ++k) {
        const auto va = linear_terms(kinks[k]);
        const auto vb = linear_terms(kinks[k + 1]);
        const Scalar ga = va[4] - (abs(va[2]) + abs(va[3]));
        const Scalar gb = vb[4] - (abs(vb[2]) + abs(vb[3]));
        add_crossing(all, kinks[k], kinks[k + 1], ga, gb);
      }
      sort_unique(all);
      for (std::size_t k = 1; k < all.size(); ++k) {
        record(all[k], interpolate(ev, next, all[k]), ev.frame);
      }
    }
  }
  return report;
}

Instance append_homing_suffix(const Instance& inst, const Point& corner, std::size_t reps) {
  const Point end = inst.end();
  if (!aligned(end, corner))
    throw std::invalid_argument("homing corner is not aligned with the final request point");
  if (reps == 0) return inst;
  std::vector<Point> waypoints{end, corner};
  const Point arm_x = corner + Vector{1, 0};
  const Point arm_y = corner + Vector{0, 1};
  for (std::size_t i = 0; i < reps; ++i) {
    waypoints.push_back(arm_x);
    waypoints.push_back(corner);
    waypoints.push_back(arm_y);
    waypoints.push_back(corner);
  }
  Instance out = inst;
  const Instance suffix = polyline_instance(waypoints);
  out.segments.insert(out.segments.end(), suffix.segments.begin(), suffix.segments.end());
  return out;
}

AlignedTrajectory extend_stationary(const AlignedTrajectory& opt, const Scalar& extra) {
  AlignedTrajectory out = opt;
  if (extra.sign() > 0) out.breakpoints.push_back({opt.end_s() + extra, opt.breakpoints.back().position});
  return out;
}

std::optional<Scalar> competitive_ratio(const Scalar& ell_on, const Scalar& ell_opt) {
  if (ell_opt.is_zero()) {
    if (ell_on.is_zero()) return Scalar(1);
    return std::nullopt;
  }
  return ell_on / ell_opt;
}

std::optional<Scalar> competitive_ratio(const Trace& trace, const AlignedTrajectory& opt) {
  const AlignmentReport feasibility = validate_alignment(opt, trace.instance);
  if (!feasibility.feasible) throw std::invalid_argument("opt trajectory is not feasible");
  return competitive_ratio(trace.final_cost, opt.cost());
}

}  // namespace cnn
