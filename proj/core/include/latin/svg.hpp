#pragma once

// Deterministic SVG drawings of boards, Latin boards and partial boards.
// Element classes: "outline" paths, "cell" polygons, "line" paths (one per
// symmetric line), "point" circles (one per point), "symbol" texts.

#include <string>

#include "latin/critical.hpp"
#include "latin/latin.hpp"

namespace latin {

struct SvgOptions {
  /// Pixels per layout unit.
  double scale = 48.0;
  /// Draw the symmetric lines.
  bool lines = true;
  /// Label empty points with their ids.
  bool ids = false;
};

/// Throws no_layout when the board's source has no 2D layout.
std::string render_svg(const Board& b, const SvgOptions& o = {});
std::string render_svg(const LatinBoard& l, const SvgOptions& o = {});
std::string render_svg(const PartialBoard& p, const SvgOptions& o = {});

}  // namespace latin
