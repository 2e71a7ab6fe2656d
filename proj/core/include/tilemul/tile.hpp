#pragma once

// Tile catalog for the multiplier generator: the rectangular sub-multiplier
// shapes the tiler may place, and the cost model used as the tiling objective.
// A tile's total cost is its own LUT count plus 0.65 LUTs per output bit, the
// average price of later compressing that bit in the reduction tree.

#include <string>
#include <vector>

#include "tilemul/rational.hpp"

namespace tilemul {

enum class TileFamily {
    Lut1x1,
    Lut1x2,
    Lut2x3,
    Lut3x3,
    Lut2xK,     // one carry-chain row, k >= 3
    BoothArray, // radix-4 Booth carry-chain array, levels in [3,6], k >= 2
    Dsp24x17,
};

struct TileKind {
    TileFamily family = TileFamily::Lut1x1;
    int k = 0;                // length of the parametric dimension; 0 while unresolved
    int levels = 0;           // BoothArray only
    bool signedTile = false;  // BoothArray only: the 2L-height variant for signed MSB rows
    bool transposed = false;

    bool operator==(const TileKind& o) const = default;
};

struct TileShape {
    int width = 0;  // extent along X (multiplicand bits consumed)
    int height = 0; // extent along Y
    int area() const { return width * height; }
    bool operator==(const TileShape& o) const = default;
};

struct TileCost {
    Rational lutMult;    // LUTs of the sub-multiplier itself
    Rational lutTotal;   // lutMult + 0.65 * wOut
    int wOut = 0;        // output word length fed to the bit heap
    int dsp = 0;
    Rational efficiency; // area / lutTotal, exact
};

struct CatalogEntry {
    TileKind kind;
    TileShape shape;
    TileCost cost;
    // Efficiency figure as published in the reference characterization tables.
    // Matches cost.efficiency to print precision for every entry except the
    // 1x1 and DSP rows, whose printed values do not round from the cost model.
    Rational tableEfficiency;
};

struct TileSetConfig {
    bool lut1x1 = true;
    bool lut1x2 = true;
    bool lut2x3 = true;
    bool lut3x3 = true;
    bool lut2xk = true;
    int boothMaxLevel = 4; // 0 disables Booth tiles; otherwise clamped to [3,6] by validation
    bool dsp = true;
};

// Resolve one concrete tile kind (parametric kinds need k set) to shape + cost.
CatalogEntry catalogEntry(const TileKind& kind);

// Limit of area/lutTotal as k grows; only parametric families have one.
Rational efficiencyLimit(const TileKind& kind);

// The admissible kinds under a configuration, both orientations of asymmetric
// tiles, deduplicated, in deterministic order. Parametric kinds have k == 0.
std::vector<TileKind> buildTileSet(const TileSetConfig& config);

std::string kindName(const TileKind& kind);

} // namespace tilemul
