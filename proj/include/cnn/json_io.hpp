#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cnn/engine.hpp"
#include "cnn/generators.hpp"
#include "cnn/potential.hpp"
#include "cnn/unit_cnn.hpp"
#include "json.hpp"

namespace cnn {

using Json = nlohmann::json;

/// Schema violation. `path` locates the offending field, e.g.
/// "segments[3].dir.dx".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json to_json(const Scalar& v);
Json to_json(const Point& p);
Json to_json(const Vector& v);
Json to_json(const Frame& f);
Json to_json(const Instance& inst);
Json to_json(const AlignedTrajectory& traj);
Json to_json(const Trace& trace);
Json to_json(const GeneratedPair& pair);
Json to_json(const VerificationReport& report);
Json to_json(const std::vector<UnitTranscriptEntry>& transcript);
Json unit_requests_to_json(const std::vector<Point>& requests);

/// Scalars accept {"a": [num, den], "b": [num, den]} (num/den as integers or
/// integer strings), plain integers, and decimal or "p/q" strings.
Scalar scalar_from_json(const Json& j, const std::string& path = "");
Point point_from_json(const Json& j, const std::string& path = "");
Vector vector_from_json(const Json& j, const std::string& path = "");
Frame frame_from_json(const Json& j, const std::string& path = "");
/// The result is normalized; a zero direction is an error.
Instance instance_from_json(const Json& j, const std::string& path = "");
AlignedTrajectory trajectory_from_json(const Json& j, const std::string& path = "");
Trace trace_from_json(const Json& j, const std::string& path = "");
GeneratedPair generated_pair_from_json(const Json& j, const std::string& path = "");
std::vector<Point> unit_requests_from_json(const Json& j, const std::string& path = "");
std::vector<UnitTranscriptEntry> transcript_from_json(const Json& j, const std::string& path = "");

/// Parses text; syntax errors become ParseError with line and column.
Json parse_json_text(const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cnn
