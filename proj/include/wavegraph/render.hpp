#ifndef WAVEGRAPH_RENDER_HPP
#define WAVEGRAPH_RENDER_HPP

#include <string>

#include "wavegraph/graphs.hpp"

namespace wavegraph {

/// Deterministic SVG drawing of a wave graph: vertices on a horizontal
/// line, arcs over their endpoints. For n = 3 page 1 is drawn above and
/// page 2 below the line; for other n all pages go above, with per-page
/// colors and scaled arc heights.
std::string render_svg(const WaveGraph& g);

}  // namespace wavegraph

#endif
