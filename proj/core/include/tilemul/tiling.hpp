#pragma once

// Partial-product board covering.
//
// The board is the wx-by-wy grid of partial-product bits; cell (i, j) is
// x_i * y_j at weight i + j. A tiling is an exact cover of the board by
// catalog tiles; its cost is the summed tile cost in hundredths of a LUT.
// On signed boards the MSB column and row carry negative weight, which most
// tiles absorb per placement; the few shapes that cannot are filtered out of
// the placement list here.

#include "tilemul/tile.hpp"

#include <cstdint>
#include <vector>

namespace tilemul {

struct Board {
    int wx = 8, wy = 8;
    bool isSigned = false;
    int dspBudget = 0;
};

struct Placement {
    int entry; // index into PlacementSet::entries
    int ax, ay;
};

// A tile pinned to a board position, portable across placement sets.
struct PlacedTile {
    TileKind kind;
    int ax = 0, ay = 0;
};

struct PlacementSet {
    Board board;
    std::vector<CatalogEntry> entries;
    std::vector<Placement> placements;
    std::vector<std::int64_t> entryCostH; // lutTotal in hundredths per entry

    // Cell coverage as bitmask spans, CSR layout over placements.
    std::vector<int> maskStart;
    std::vector<int> maskWord;
    std::vector<std::uint64_t> maskBits;

    // Placements anchored at each cell, best efficiency first. The search
    // fills cells in row-major order, so only anchored tiles can ever cover
    // the first hole.
    std::vector<std::vector<int>> anchored;

    int cells() const { return board.wx * board.wy; }
    int words() const { return (cells() + 63) / 64; }
};

// Expands parametric kinds (k = 0) to every k the board admits, then lists
// all fitting placements, minus the ones a signed board rules out.
PlacementSet enumeratePlacements(const Board& board, const std::vector<TileKind>& kinds);

struct SolveOptions {
    // Deterministic effort cap; the search reports optimal only if it
    // finished within the budget.
    std::int64_t nodeBudget = 50'000'000;
    std::vector<PlacedTile> warmStart; // prior cover to seed the incumbent
};

struct SolveResult {
    bool feasible = false;
    bool optimal = false;
    std::vector<int> chosen; // placement indices, sorted
    std::int64_t costH = 0;
    int dspUsed = 0;
    std::int64_t nodes = 0;
};

// Branch and bound over exact covers: branch on the first uncovered cell,
// bound with the best cost-per-cell rate still available (DSP rate capped by
// the remaining budget).
SolveResult solveExact(const PlacementSet& set, const SolveOptions& options = {});

PlacedTile placedTile(const PlacementSet& set, int placement);

} // namespace tilemul
