#pragma once

#include <string>

#include "apollon/numerics.hpp"
#include "apollon/symbols.hpp"

namespace apollon {

enum class LabelMode { None, Bends, Symbols };

struct RenderOptions {
  long width_px = 1000;
  LabelMode label_mode = LabelMode::None;
  bool draw_frame = false;      // draw the principal frame with its triples
  Rat min_radius_px = Rat(1, 2);  // circles smaller than this are culled
};

// Deterministic SVG 1.1 (svg, g, circle, line, text elements only). The view
// is square, normalized to the enclosing circle with a 5% margin. Circles are
// emitted sorted by bend then coordinates; all coordinates are serialized as
// 12-significant-digit decimals. Throws EmptyPacking for a packing without
// circles and std::invalid_argument for unusable options.
std::string render_svg(const Packing& packing, const RenderOptions& opts);

}  // namespace apollon
