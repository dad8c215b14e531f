#pragma once

#include <optional>
#include <string>

#include "cnn/engine.hpp"

namespace cnn {

struct SvgOptions {
  double width = 800;
  double margin = 40;
};

/// Renders the request path, the online server path and optionally an
/// offline path, one <polyline> each. Online motion is overlaid with
/// phase-coloured <line> pieces, cycle starts get a marker and every
/// bishop-to-rook switch gets an offset arrow. Output depends only on the
/// inputs.
std::string render_svg(const Trace& trace, const std::optional<AlignedTrajectory>& opt = std::nullopt,
                       const SvgOptions& options = {});

}  // namespace cnn
