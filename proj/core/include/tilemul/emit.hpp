#pragma once

// Text emitters: self-contained structural HDL for a finished netlist and
// SVG/ASCII diagrams of a board tiling. All output is a pure function of the
// inputs, so identical designs give byte-identical files.

#include <string>
#include <vector>

#include "tilemul/netlist.hpp"
#include "tilemul/tiling.hpp"

namespace tilemul {

enum class RenderFormat { svg, ascii };

// One primitive instance per node with vendor-neutral names (genlut6,
// genlut6_2, gencarry, gendsp), LUT init vectors in hex, names in creation
// order. Behavioral primitive models are appended so the file simulates
// standalone; the header comments map each primitive to its AMD equivalent.
std::string emitHdl(const Netlist& net, const std::string& moduleName);

// Labeled axis-aligned rectangles in the partial-product board orientation:
// weight grows to the left and upward, so the (0,0) corner sits bottom-right.
// The ASCII form draws one glyph per cell plus a legend.
std::string renderTiling(const std::vector<PlacedTile>& tiles, const Board& board,
                         RenderFormat format);

} // namespace tilemul
