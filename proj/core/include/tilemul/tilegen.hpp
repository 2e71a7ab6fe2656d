#pragma once

// Turns solved tilings into logic. Every catalog tile knows how to emit
// itself as LUTs, carry chains or a DSP block; the outputs of all placed
// tiles land in weighted columns that the compressor tree then reduces.

#include <vector>

#include "tilemul/netlist.hpp"
#include "tilemul/tiling.hpp"

namespace tilemul {

// One tile's contribution to the product. Tiles whose slice touches a sign
// bit produce a biased word; the bias shows up here as a signed addend, so
// the tile value is always (assembled output bits) + addend, taken at the
// tile's local weight zero.
struct TileBits {
    std::vector<Signal> bits; // LSB first
    __int128 addend = 0;
};

// Emit the logic for one tile. xs and ys are the operand slices the tile
// covers (sizes must match the entry's shape); xSigned / ySigned mark whether
// the top bit of the respective slice is the operand's sign bit. For Booth
// tiles the signedness of the recoded operand has to agree with the kind's
// signedTile flag.
TileBits emitTile(Netlist& net, const CatalogEntry& entry,
                  const std::vector<Signal>& xs, const std::vector<Signal>& ys,
                  bool xSigned, bool ySigned);

// All chosen placements of a solved board, wired to net's X and Y inputs.
struct GeneratedTiles {
    int width = 0;                            // product width, wx + wy
    std::vector<std::vector<Signal>> columns; // columns[w] holds bits of weight w
    Wide constant = 0;                        // folded tile addends, mod 2^width
    int lutCount = 0;                         // LUTs spent on tiles
    int dspCount = 0;
};

GeneratedTiles emitTiles(Netlist& net, const PlacementSet& set,
                         const std::vector<int>& chosen);

} // namespace tilemul
