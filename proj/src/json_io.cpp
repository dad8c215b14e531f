#include "cnn/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cnn {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(join(path, key), "missing field");
  return *it;
}

const Json& array_field(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_array()) throw ParseError(join(path, key), "expected an array");
  return v;
}

std::string integer_text(const Integer& v) { return v.get_str(); }

Json rational_json(const Rational& q) {
  return Json::array({integer_text(q.get_num()), integer_text(q.get_den())});
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    Integer out;
    const std::string body = !text.empty() && (text[0] == '-' || text[0] == '+') ? text.substr(1) : text;
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(path, "not an integer: \"" + text + "\"");
    out.set_str(text[0] == '+' ? body : text, 10);
    return out;
  }
  throw ParseError(path, "expected an integer or integer string");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(path, "expected [numerator, denominator]");
    const Integer num = integer_from_json(j[0], index(path, 0));
    const Integer den = integer_from_json(j[1], index(path, 1));
    if (den == 0) throw ParseError(index(path, 1), "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  const Scalar v = scalar_from_json(j, path);
  if (!v.is_rational()) throw ParseError(path, "expected a rational");
  return v.rational_part();
}

Json optional_scalar(const std::optional<Scalar>& v) { return v ? to_json(*v) : Json(nullptr); }

PhaseKind phase_from_json(const Json& j, const std::string& path) {
  if (j == "bishop") return PhaseKind::bishop;
  if (j == "rook") return PhaseKind::rook;
  throw ParseError(path, "expected \"bishop\" or \"rook\"");
}

EventKind event_kind_from_json(const Json& j, const std::string& path) {
  for (EventKind k : {EventKind::request_horizontal, EventKind::request_vertical, EventKind::phase_switch,
                      EventKind::cycle_start}) {
    if (j.is_string() && j.get<std::string>() == event_kind_name(k)) return k;
  }
  throw ParseError(path, "unknown event kind");
}

std::uint64_t count_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw ParseError(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const Scalar& v) {
  return {{"a", rational_json(v.rational_part())}, {"b", rational_json(v.sqrt3_part())}};
}

Json to_json(const Point& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const Vector& v) { return {{"dx", to_json(v.dx)}, {"dy", to_json(v.dy)}}; }

Json to_json(const Frame& f) {
  return {{"perm", std::string(axis_map_name(f.linear))}, {"t", to_json(f.translation)}};
}

Json to_json(const Instance& inst) {
  Json segments = Json::array();
  for (const auto& seg : inst.segments)
    segments.push_back({{"dir", to_json(seg.direction)}, {"len", to_json(seg.length)}});
  return {{"start", to_json(inst.start)}, {"segments", std::move(segments)}};
}

Json to_json(const AlignedTrajectory& traj) {
  Json bps = Json::array();
  for (const auto& bp : traj.breakpoints)
    bps.push_back({{"s", to_json(bp.s)}, {"x", to_json(bp.position.x)}, {"y", to_json(bp.position.y)}});
  return {{"breakpoints", std::move(bps)}};
}

Json to_json(const Trace& trace) {
  Json events = Json::array();
  for (const auto& ev : trace.events) {
    events.push_back({{"s", to_json(ev.s)},
                      {"server", to_json(ev.server)},
                      {"request", to_json(ev.request)},
                      {"phase", std::string(phase_name(ev.phase))},
                      {"frame", to_json(ev.frame)},
                      {"offset_mag", to_json(ev.offset_mag)},
                      {"offset", to_json(ev.offset)},
                      {"cost_on", to_json(ev.cost_on)},
                      {"kind", std::string(event_kind_name(ev.kind))}});
  }
  return {{"instance", to_json(trace.instance)}, {"events", std::move(events)},
          {"final_cost", to_json(trace.final_cost)}};
}

Json to_json(const GeneratedPair& pair) {
  Json meta{{"name", pair.meta.name}};
  if (pair.meta.cycles) meta["cycles"] = *pair.meta.cycles;
  if (pair.meta.seed) meta["seed"] = *pair.meta.seed;
  meta["expected_ratio"] = optional_scalar(pair.meta.expected_ratio);
  return {{"instance", to_json(pair.instance)}, {"opt", to_json(pair.opt)}, {"meta", std::move(meta)}};
}

Json to_json(const VerificationReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back({{"s", to_json(r.s)},
                       {"ell_opt", to_json(r.ell_opt)},
                       {"ell_on", to_json(r.ell_on)},
                       {"d_term", to_json(r.d_term)},
                       {"offset_mag", to_json(r.offset_mag)},
                       {"f_term", to_json(r.f_term)},
                       {"phi", to_json(r.phi)}});
  }
  Json first = nullptr;
  if (report.first_decrease) {
    first = {{"s", to_json(report.first_decrease->s)},
             {"phi_before", to_json(report.first_decrease->phi_before)},
             {"phi_after", to_json(report.first_decrease->phi_after)}};
  }
  return {{"ok", report.ok}, {"first_decrease", std::move(first)}, {"records", std::move(records)}};
}

Json to_json(const std::vector<UnitTranscriptEntry>& transcript) {
  Json out = Json::array();
  for (const auto& e : transcript)
    out.push_back({{"request", to_json(e.request)}, {"online_position", to_json(e.online_position)},
                   {"charge", e.charge}});
  return out;
}

Json unit_requests_to_json(const std::vector<Point>& requests) {
  Json out = Json::array();
  for (const auto& p : requests) out.push_back(to_json(p));
  return out;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(Rational(integer_from_json(j, path)));
  if (j.is_number_float()) throw ParseError(path, "floating-point numbers are not exact; use a decimal string");
  if (j.is_string()) {
    try {
      return parse_decimal(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      if (item.key() != "a" && item.key() != "b") throw ParseError(join(path, item.key()), "unexpected field");
    }
    Rational a = 0;
    Rational b = 0;
    if (j.contains("a")) a = rational_from_json(j.at("a"), join(path, "a"));
    if (j.contains("b")) b = rational_from_json(j.at("b"), join(path, "b"));
    return Scalar(a, b);
  }
  throw ParseError(path, "expected a scalar");
}

Point point_from_json(const Json& j, const std::string& path) {
  return {scalar_from_json(field(j, "x", path), join(path, "x")),
          scalar_from_json(field(j, "y", path), join(path, "y"))};
}

Vector vector_from_json(const Json& j, const std::string& path) {
  return {scalar_from_json(field(j, "dx", path), join(path, "dx")),
          scalar_from_json(field(j, "dy", path), join(path, "dy"))};
}

Frame frame_from_json(const Json& j, const std::string& path) {
  const Json& perm = field(j, "perm", path);
  const auto m = perm.is_string() ? axis_map_from_name(perm.get<std::string>()) : std::nullopt;
  if (!m) throw ParseError(join(path, "perm"), "unknown signed permutation");
  return {*m, vector_from_json(field(j, "t", path), join(path, "t"))};
}

Instance instance_from_json(const Json& j, const std::string& path) {
  Instance inst;
  inst.start = point_from_json(field(j, "start", path), join(path, "start"));
  const Json& segs = array_field(j, "segments", path);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string p = index(join(path, "segments"), i);
    RequestSegment seg{vector_from_json(field(segs[i], "dir", p), join(p, "dir")),
                       scalar_from_json(field(segs[i], "len", p), join(p, "len"))};
    if (seg.direction.is_zero()) throw ParseError(join(p, "dir"), "zero direction");
    if (seg.length.sign() < 0) throw ParseError(join(p, "len"), "negative length");
    inst.segments.push_back(std::move(seg));
  }
  return normalized(std::move(inst));
}

AlignedTrajectory trajectory_from_json(const Json& j, const std::string& path) {
  AlignedTrajectory traj;
  const Json& bps = array_field(j, "breakpoints", path);
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::string p = index(join(path, "breakpoints"), i);
    traj.breakpoints.push_back({scalar_from_json(field(bps[i], "s", p), join(p, "s")),
                                {scalar_from_json(field(bps[i], "x", p), join(p, "x")),
                                 scalar_from_json(field(bps[i], "y", p), join(p, "y"))}});
  }
  try {
    traj.check_shape();
  } catch (const std::invalid_argument& e) {
    throw ParseError(join(path, "breakpoints"), e.what());
  }
  return traj;
}

Trace trace_from_json(const Json& j, const std::string& path) {
  Trace trace;
  trace.instance = instance_from_json(field(j, "instance", path), join(path, "instance"));
  const Json& events = array_field(j, "events", path);
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string p = index(join(path, "events"), i);
    const Json& e = events[i];
    TraceEvent ev;
    ev.s = scalar_from_json(field(e, "s", p), join(p, "s"));
    ev.server = point_from_json(field(e, "server", p), join(p, "server"));
    ev.request = point_from_json(field(e, "request", p), join(p, "request"));
    ev.phase = phase_from_json(field(e, "phase", p), join(p, "phase"));
    ev.frame = frame_from_json(field(e, "frame", p), join(p, "frame"));
    ev.offset_mag = scalar_from_json(field(e, "offset_mag", p), join(p, "offset_mag"));
    ev.offset = vector_from_json(field(e, "offset", p), join(p, "offset"));
    ev.cost_on = scalar_from_json(field(e, "cost_on", p), join(p, "cost_on"));
    ev.kind = event_kind_from_json(field(e, "kind", p), join(p, "kind"));
    if (!trace.events.empty() && ev.s < trace.events.back().s)
      throw ParseError(join(p, "s"), "events must be ordered by s");
    trace.events.push_back(std::move(ev));
  }
  trace.final_cost = scalar_from_json(field(j, "final_cost", path), join(path, "final_cost"));
  return trace;
}

GeneratedPair generated_pair_from_json(const Json& j, const std::string& path) {
  GeneratedPair pair;
  pair.instance = instance_from_json(field(j, "instance", path), join(path, "instance"));
  pair.opt = trajectory_from_json(field(j, "opt", path), join(path, "opt"));
  const std::string mp = join(path, "meta");
  const Json& meta = field(j, "meta", path);
  const Json& name = field(meta, "name", mp);
  if (!name.is_string()) throw ParseError(join(mp, "name"), "expected a string");
  pair.meta.name = name.get<std::string>();
  if (meta.contains("cycles")) pair.meta.cycles = count_from_json(meta.at("cycles"), join(mp, "cycles"));
  if (meta.contains("seed")) pair.meta.seed = count_from_json(meta.at("seed"), join(mp, "seed"));
  if (meta.contains("expected_ratio") && !meta.at("expected_ratio").is_null())
    pair.meta.expected_ratio = scalar_from_json(meta.at("expected_ratio"), join(mp, "expected_ratio"));
  return pair;
}

std::vector<Point> unit_requests_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], index(path, i)));
  return out;
}

std::vector<UnitTranscriptEntry> transcript_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<UnitTranscriptEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = index(path, i);
    const Json& charge = field(j[i], "charge", p);
    if (!charge.is_number_integer()) throw ParseError(join(p, "charge"), "expected an integer");
    out.push_back({point_from_json(field(j[i], "request", p), join(p, "request")),
                   point_from_json(field(j[i], "online_position", p), join(p, "online_position")),
                   charge.get<int>()});
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.path(), path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace cnn
