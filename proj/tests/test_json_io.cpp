#include <functional>

#include "cnn/json_io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cnn;
using cnn::testing::q;

namespace {

std::string parse_error_path(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(scalar_from_json(Json("0.5")) == q(1, 2));
  CHECK(scalar_from_json(Json("3/4")) == q(3, 4));
  CHECK(scalar_from_json(Json(7)) == Scalar(7));
  CHECK(scalar_from_json(Json::parse(R"({"a": [1, 2], "b": ["-3", "4"]})")) == cnn::testing::qs(1, 2, -3, 4));
  CHECK(scalar_from_json(Json::parse(R"({"b": [1, 1]})")) == Scalar::sqrt3());
  CHECK(to_json(cnn::testing::qs(1, 2, -3, 4)) == Json::parse(R"({"a": ["1", "2"], "b": ["-3", "4"]})"));
  CHECK_THROWS_AS(scalar_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json("x")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a": [1, 0]})")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"c": [1, 1]})")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"a": ["1.5", 1]})")), ParseError);
}

TEST_CASE("big integers survive") {
  const std::string big = "123456789012345678901234567890";
  const Scalar v = scalar_from_json(Json::parse(R"({"a": [")" + big + R"(", "1"]})"));
  CHECK(scalar_from_json(to_json(v)) == v);
  CHECK(to_json(v)["a"][0] == big);
}

TEST_CASE("random scalars round trip") {
  cnn::testing::Random rng(61);
  for (int i = 0; i < 1000; ++i) {
    const Scalar v = rng.scalar(100);
    CHECK(scalar_from_json(parse_json_text(dump_json(to_json(v)))) == v);
  }
}

TEST_CASE("instance parsing") {
  const Json j = Json::parse(R"({"start": {"x": 0, "y": "0.5"},
    "segments": [{"dir": {"dx": 2, "dy": 0}, "len": "1/2"}, {"dir": {"dx": 0, "dy": -1}, "len": 0}]})");
  const Instance inst = instance_from_json(j);
  CHECK(inst.start == Point{0, q(1, 2)});
  REQUIRE(inst.segments.size() == 1);
  CHECK(inst.segments[0].direction == Vector{1, 0});
  CHECK(inst.segments[0].length == Scalar(1));

  const Json zero = Json::parse(R"({"start": {"x": 0, "y": 0}, "segments": [{"dir": {"dx": 0, "dy": 0}, "len": 1}]})");
  CHECK(parse_error_path([&] { instance_from_json(zero); }) == "segments[0].dir");
  const Json neg = Json::parse(R"({"start": {"x": 0, "y": 0}, "segments": [{"dir": {"dx": 1, "dy": 0}, "len": -1}]})");
  CHECK(parse_error_path([&] { instance_from_json(neg); }) == "segments[0].len");
  const Json bad = Json::parse(R"({"start": {"x": 0, "y": 0}, "segments": [{"dir": {"dx": 1.5, "dy": 0}, "len": 1}]})");
  CHECK(parse_error_path([&] { instance_from_json(bad); }) == "segments[0].dir.dx");
  const Json missing = Json::parse(R"({"segments": []})");
  CHECK(parse_error_path([&] { instance_from_json(missing); }) == "start");
}

TEST_CASE("trajectory parsing") {
  const AlignedTrajectory t{{{0, {0, 0}}, {q(1, 2), {1, 0}}}};
  CHECK(trajectory_from_json(to_json(t)) == t);
  const Json unsorted = Json::parse(R"({"breakpoints": [{"s": 1, "x": 0, "y": 0}, {"s": 0, "x": 0, "y": 0}]})");
  CHECK(parse_error_path([&] { trajectory_from_json(unsorted, "opt"); }) == "opt.breakpoints");
}

TEST_CASE("generated pairs and traces round trip") {
  for (const auto& pair : {tight1(3), tight2(2), fig2_scenario(), random_orthogonal(9, 10, 3)}) {
    CHECK(generated_pair_from_json(parse_json_text(dump_json(to_json(pair)))) == pair);
    const Trace t = run(pair.instance);
    CHECK(trace_from_json(parse_json_text(dump_json(to_json(t)))) == t);
  }
  const Json j = to_json(fig2_scenario());
  CHECK(j["meta"]["expected_ratio"] == to_json(Scalar(3)));
  CHECK(to_json(random_orthogonal(1, 2, 1))["meta"]["expected_ratio"].is_null());
}

TEST_CASE("unit requests and transcripts round trip") {
  const std::vector<Point> req{{0, 0}, {0, 1}, {q(1, 3), 1}};
  CHECK(unit_requests_from_json(unit_requests_to_json(req)) == req);
  const UnitRun run = sweet4_run(req);
  CHECK(transcript_from_json(to_json(run.transcript)) == run.transcript);
  CHECK(parse_error_path([] { unit_requests_from_json(Json::parse(R"([{"x": 0}])")); }) == "[0].y");
}

TEST_CASE("verification report serializes") {
  const GeneratedPair pair = tight1(1);
  const VerificationReport r = verify_nondecreasing(run(pair.instance), pair.opt);
  const Json j = to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["first_decrease"].is_null());
  CHECK(j["records"].size() == r.records.size());
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::runtime_error);
  CHECK(dump_json(Json::array()) == "[]\n");
}
