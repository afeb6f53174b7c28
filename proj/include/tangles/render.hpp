#pragma once

#include <string>

#include "tangles/tangle.hpp"

namespace tangles {

struct RenderOptions {
  double scale = 40.0;  // pixels per r
  bool show_polyform = false;
  bool show_coloring = true;
  bool show_dual_graph = false;  // square only
  double curve_width = 3.0;
  double edge_width = 1.0;
  double margin = 10.0;
};

/// Deterministic SVG of a closed Tangle, optionally over its dual polyform.
std::string render_svg(const Tangle& t, const DualPolyform* p = nullptr, const RenderOptions& opts = {});

/// Cells and vertex coloring. With a report attached, white cut vertices
/// and other offending vertices are ringed in red.
std::string render_polyform_svg(const DualPolyform& p, const RenderOptions& opts = {},
                                const ValidityReport* report = nullptr);

/// Pre-state in gray under the post-state in black.
std::string render_op_preview(const Tangle& before, const Tangle& after, const RenderOptions& opts = {});

/// %.9g with negative zero printed as 0.
std::string format_number(double v);

}  // namespace tangles
