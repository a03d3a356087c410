#pragma once

#include <string>

#include "knights/tour.hpp"

namespace knights {

enum class RenderMode { BoardAscii, LiftAscii, LiftSvg };

struct RenderOptions {
    RenderMode mode = RenderMode::BoardAscii;
    bool show_fundamental_domains = true;
    int cell_px = 24; // LiftSvg cell size; must be at least 4
};

// Diagrams a tour.
//   BoardAscii: the board grid with each square's visit index; a move that
//   crosses an identified edge marks its source square with '~'.
//   LiftAscii: the unrolled path on the covering strip or plane, one cell
//   per lift point, with fundamental-domain rulings and the path's base
//   point starred.
//   LiftSvg: the same picture as SVG 1.1 bytes.
// Open tours render without the closing move; rectangles are their own
// cover. Never fails on a valid tour.
std::string render(const Tour &tour, const RenderOptions &opts);

} // namespace knights
