#include <string>

#include "cnn/generators.hpp"
#include "cnn/svg.hpp"
#include "doctest.h"

using namespace cnn;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("svg structure") {
  const GeneratedPair pair = tight1(2);
  const Trace t = run(pair.instance);
  const std::string svg = render_svg(t, pair.opt);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  CHECK(count(svg, "<polyline ") == 3);
  CHECK(count(svg, "class=\"opt\"") == 1);
  CHECK(count(svg, "class=\"bishop\"") >= 2);
  CHECK(count(svg, "class=\"rook\"") >= 2);
  std::size_t starts = 0, offsets = 0;
  for (const auto& ev : t.events) {
    starts += ev.kind == EventKind::cycle_start;
    offsets += ev.kind == EventKind::phase_switch && !ev.offset.is_zero();
  }
  CHECK(count(svg, "class=\"cycle-start\"") == starts);
  CHECK(count(svg, "class=\"offset\"") == offsets);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find(t.final_cost.to_string()) != std::string::npos);
}

TEST_CASE("svg without opt and on degenerate traces") {
  const Trace t = run(fig2_scenario().instance);
  CHECK(count(render_svg(t), "<polyline ") == 2);
  const Trace empty = run(Instance{{0, 0}, {}});
  const std::string svg = render_svg(empty);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
}

TEST_CASE("svg output is deterministic") {
  const GeneratedPair pair = random_orthogonal(12, 10, 3);
  const Trace t = run(pair.instance);
  CHECK(render_svg(t, pair.opt) == render_svg(run(pair.instance), pair.opt));
  SvgOptions wide;
  wide.width = 1200;
  CHECK(render_svg(t, pair.opt, wide).find("width=\"1200.000\"") != std::string::npos);
}
