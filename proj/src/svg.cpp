#include "cnn/svg.hpp"

#include <algorithm>
#include <initializer_list>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

namespace cnn {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Viewport {
  double min_x = 0, max_y = 0, scale = 1, margin = 0;

  std::pair<double, double> map(const Point& p) const {
    return {margin + (p.x.to_double() - min_x) * scale, margin + (max_y - p.y.to_double()) * scale};
  }
  std::string coords(const Point& p) const {
    const auto [x, y] = map(p);
    return num(x) + "," + num(y);
  }
};

std::vector<Point> request_points(const Instance& inst) {
  std::vector<Point> out{inst.start};
  Point p = inst.start;
  for (const auto& seg : inst.segments) {
    p = p + seg.displacement();
    out.push_back(p);
  }
  return out;
}

std::vector<Point> positions(const AlignedTrajectory& traj) {
  std::vector<Point> out;
  for (const auto& bp : traj.breakpoints) out.push_back(bp.position);
  return out;
}

std::string polyline(const Viewport& vp, const std::vector<Point>& pts, const char* cls) {
  std::ostringstream os;
  os << "  <polyline class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << vp.coords(pts[i]);
  os << "\"/>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Trace& trace, const std::optional<AlignedTrajectory>& opt, const SvgOptions& options) {
  const std::vector<Point> request = request_points(trace.instance);
  const std::vector<Point> server = positions(trace.server_trajectory());
  std::vector<Point> offline;
  if (opt) offline = positions(*opt);

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  auto grow = [&](const Point& p) {
    const double x = p.x.to_double(), y = p.y.to_double();
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const auto* v : std::initializer_list<const std::vector<Point>*>{&request, &server, &offline})
    for (const auto& p : *v) grow(p);
  for (const auto& ev : trace.events) grow(ev.server + ev.offset);

  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  Viewport vp{min_x, max_y, (options.width - 2 * options.margin) / span, options.margin};
  const double height = (max_y - min_y) * vp.scale + 2 * options.margin;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(options.width) << " " << num(height) << "\">\n";
  os << "  <title>online cost " << trace.final_cost.to_string() << " (" << num(trace.final_cost.to_double())
     << ")</title>\n";
  os << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#2a9d55\"/></marker></defs>\n";
  os << "  <style>.request{fill:none;stroke:#888;stroke-width:2;stroke-dasharray:6 4}"
        ".server{fill:none;stroke:#222;stroke-width:1}.opt{fill:none;stroke:#e08a00;stroke-width:2}"
        ".bishop{stroke:#2b6cb0;stroke-width:3}.rook{stroke:#c53030;stroke-width:3}"
        ".offset{stroke:#2a9d55;stroke-width:1.5;marker-end:url(#arrow)}.cycle-start{fill:#222}</style>\n";
  os << polyline(vp, request, "request");
  os << polyline(vp, server, "server");
  if (opt) os << polyline(vp, offline, "opt");

  const auto& events = trace.events;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    if (events[i].server == events[i + 1].server) continue;
    const auto [x1, y1] = vp.map(events[i].server);
    const auto [x2, y2] = vp.map(events[i + 1].server);
    os << "  <line class=\"" << phase_name(events[i].phase) << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1)
       << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\"/>\n";
  }
  for (const auto& ev : events) {
    if (ev.kind == EventKind::cycle_start) {
      const auto [x, y] = vp.map(ev.server);
      os << "  <circle class=\"cycle-start\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\"/>\n";
    } else if (ev.kind == EventKind::phase_switch && !ev.offset.is_zero()) {
      const auto [x1, y1] = vp.map(ev.server);
      const auto [x2, y2] = vp.map(ev.server + ev.offset);
      os << "  <line class=\"offset\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cnn
