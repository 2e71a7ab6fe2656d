#include "tilemul/tiling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tilemul {

namespace {

std::int64_t hundredthsOf(const Rational& r) {
    Rational h = r * Rational(100);
    // Catalog costs are exact hundredths by construction.
    if (h.den() != 1) throw std::logic_error("tile cost is not a whole number of hundredths");
    return h.num();
}

// The dimension that scales with k is the recoded/long operand; a signed
// board cannot hand that operand's sign bit to these shapes.
bool allowedOnBoard(const Board& board, const CatalogEntry& e, int ax, int ay) {
    if (!board.isSigned) return !(e.kind.family == TileFamily::BoothArray && e.kind.signedTile);
    switch (e.kind.family) {
    case TileFamily::Lut2xK:
        if (!e.kind.transposed) return ax + e.shape.width != board.wx;
        return ay + e.shape.height != board.wy;
    case TileFamily::BoothArray: {
        bool atEdge = e.kind.transposed ? ax + e.shape.width == board.wx
                                        : ay + e.shape.height == board.wy;
        return e.kind.signedTile == atEdge;
    }
    default:
        return true;
    }
}

} // namespace

PlacementSet enumeratePlacements(const Board& board, const std::vector<TileKind>& kinds) {
    if (board.wx < 1 || board.wy < 1 || board.wx > 64 || board.wy > 64)
        throw std::invalid_argument("board sides must be in [1,64]");
    if (board.isSigned && (board.wx < 2 || board.wy < 2))
        throw std::invalid_argument("signed operands need at least 2 bits");

    PlacementSet set;
    set.board = board;

    for (const TileKind& kind : kinds) {
        int longMax = kind.transposed ? board.wy : board.wx;
        if (kind.family == TileFamily::Lut2xK && kind.k == 0) {
            for (int k = 3; k <= longMax; ++k) {
                TileKind t = kind;
                t.k = k;
                set.entries.push_back(catalogEntry(t));
            }
        } else if (kind.family == TileFamily::BoothArray && kind.k == 0) {
            for (int k = 2; k <= longMax; ++k) {
                TileKind t = kind;
                t.k = k;
                set.entries.push_back(catalogEntry(t));
            }
        } else {
            set.entries.push_back(catalogEntry(kind));
        }
    }

    // Keep only tiles that can actually land somewhere; the solver's rate
    // bound must not see phantom entries.
    std::vector<CatalogEntry> usable;
    int words = set.words();
    for (const CatalogEntry& e : set.entries) {
        bool any = false;
        for (int ay = 0; ay + e.shape.height <= board.wy && !any; ++ay)
            for (int ax = 0; ax + e.shape.width <= board.wx && !any; ++ax)
                any = allowedOnBoard(board, e, ax, ay);
        if (any) usable.push_back(e);
    }
    set.entries = std::move(usable);

    for (const CatalogEntry& e : set.entries)
        set.entryCostH.push_back(hundredthsOf(e.cost.lutTotal));

    for (int ei = 0; ei < static_cast<int>(set.entries.size()); ++ei) {
        const CatalogEntry& e = set.entries[ei];
        for (int ay = 0; ay + e.shape.height <= board.wy; ++ay)
            for (int ax = 0; ax + e.shape.width <= board.wx; ++ax) {
                if (!allowedOnBoard(board, e, ax, ay)) continue;
                set.placements.push_back({ei, ax, ay});
                set.maskStart.push_back(static_cast<int>(set.maskWord.size()));
                std::vector<std::uint64_t> mask(words, 0);
                for (int y = ay; y < ay + e.shape.height; ++y)
                    for (int x = ax; x < ax + e.shape.width; ++x) {
                        int c = y * board.wx + x;
                        mask[c >> 6] |= std::uint64_t(1) << (c & 63);
                    }
                for (int w = 0; w < words; ++w)
                    if (mask[w]) {
                        set.maskWord.push_back(w);
                        set.maskBits.push_back(mask[w]);
                    }
            }
    }
    set.maskStart.push_back(static_cast<int>(set.maskWord.size()));

    set.anchored.resize(set.cells());
    for (int p = 0; p < static_cast<int>(set.placements.size()); ++p) {
        const Placement& pl = set.placements[p];
        set.anchored[pl.ay * board.wx + pl.ax].push_back(p);
    }
    for (auto& cand : set.anchored)
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            const CatalogEntry& ea = set.entries[set.placements[a].entry];
            const CatalogEntry& eb = set.entries[set.placements[b].entry];
            if (ea.cost.efficiency != eb.cost.efficiency)
                return eb.cost.efficiency < ea.cost.efficiency;
            return set.placements[a].entry < set.placements[b].entry;
        });

    return set;
}

namespace {

constexpr std::int64_t kInfiniteCost = std::numeric_limits<std::int64_t>::max() / 4;

struct Searcher {
    const PlacementSet& set;
    std::int64_t budget;
    std::vector<std::uint64_t> covered;
    std::vector<int> path;
    std::int64_t cost = 0;
    int dspUsed = 0;
    int remaining;

    SolveResult best;
    std::int64_t nodes = 0;
    bool stopped = false;

    // Cheapest cost-per-cell rates available, as exact fractions.
    std::int64_t logicNum = 0, logicDen = 0;
    std::int64_t dspNum = 0, dspDen = 0;
    bool haveDsp = false;

    explicit Searcher(const PlacementSet& s, std::int64_t nodeBudget)
        : set(s), budget(nodeBudget), covered(s.words(), 0), remaining(s.cells()) {
        for (std::size_t i = 0; i < set.entries.size(); ++i) {
            const CatalogEntry& e = set.entries[i];
            std::int64_t num = set.entryCostH[i], den = e.shape.area();
            if (e.cost.dsp > 0) {
                if (!haveDsp || num * dspDen < dspNum * den) { dspNum = num; dspDen = den; }
                haveDsp = true;
            } else if (!logicDen || num * logicDen < logicNum * den) {
                logicNum = num;
                logicDen = den;
            }
        }
        best.costH = kInfiniteCost;
    }

    std::int64_t lowerBound(int rem, int dspLeft) const {
        if (rem == 0) return 0;
        std::int64_t viaDsp = haveDsp && dspLeft > 0 ? std::min<std::int64_t>(rem, std::int64_t(dspLeft) * 408)
                                                     : 0;
        if (!logicDen) {
            if (viaDsp < rem) return kInfiniteCost;
            return viaDsp * dspNum / dspDen;
        }
        if (viaDsp > 0 && dspNum * logicDen < logicNum * dspDen)
            return viaDsp * dspNum / dspDen + (rem - viaDsp) * logicNum / logicDen;
        return std::int64_t(rem) * logicNum / logicDen;
    }

    bool overlaps(int p) const {
        for (int m = set.maskStart[p]; m < set.maskStart[p + 1]; ++m)
            if (covered[set.maskWord[m]] & set.maskBits[m]) return true;
        return false;
    }

    void apply(int p, bool on) {
        for (int m = set.maskStart[p]; m < set.maskStart[p + 1]; ++m) {
            if (on) covered[set.maskWord[m]] |= set.maskBits[m];
            else covered[set.maskWord[m]] &= ~set.maskBits[m];
        }
    }

    void dfs(int from) {
        if (stopped) return;
        if (++nodes >= budget) { stopped = true; return; }

        int cell = -1;
        for (int c = from; c < set.cells(); ++c)
            if (!((covered[c >> 6] >> (c & 63)) & 1)) { cell = c; break; }
        if (cell < 0) {
            if (cost < best.costH) {
                best.costH = cost;
                best.chosen = path;
                best.dspUsed = dspUsed;
                best.feasible = true;
            }
            return;
        }

        int dspLeft = set.board.dspBudget - dspUsed;
        if (cost + lowerBound(remaining, dspLeft) >= best.costH) return;

        for (int p : set.anchored[cell]) {
            const CatalogEntry& e = set.entries[set.placements[p].entry];
            if (e.cost.dsp > dspLeft) continue;
            if (overlaps(p)) continue;
            std::int64_t c2 = cost + set.entryCostH[set.placements[p].entry];
            int area = e.shape.area();
            if (c2 + lowerBound(remaining - area, dspLeft - e.cost.dsp) >= best.costH) continue;

            apply(p, true);
            path.push_back(p);
            cost = c2;
            dspUsed += e.cost.dsp;
            remaining -= area;
            dfs(cell + 1);
            remaining += area;
            dspUsed -= e.cost.dsp;
            cost -= set.entryCostH[set.placements[p].entry];
            path.pop_back();
            apply(p, false);
            if (stopped) return;
        }
    }
};

int findPlacement(const PlacementSet& set, const PlacedTile& t) {
    for (int p = 0; p < static_cast<int>(set.placements.size()); ++p) {
        const Placement& pl = set.placements[p];
        if (pl.ax == t.ax && pl.ay == t.ay && set.entries[pl.entry].kind == t.kind) return p;
    }
    return -1;
}

} // namespace

SolveResult solveExact(const PlacementSet& set, const SolveOptions& options) {
    Searcher s(set, options.nodeBudget);

    if (!options.warmStart.empty()) {
        std::vector<int> warm;
        std::vector<std::uint64_t> mask(set.words(), 0);
        std::int64_t cost = 0;
        int dsp = 0;
        bool ok = true;
        for (const PlacedTile& t : options.warmStart) {
            int p = findPlacement(set, t);
            if (p < 0) { ok = false; break; }
            for (int m = set.maskStart[p]; m < set.maskStart[p + 1] && ok; ++m) {
                if (mask[set.maskWord[m]] & set.maskBits[m]) ok = false;
                mask[set.maskWord[m]] |= set.maskBits[m];
            }
            warm.push_back(p);
            cost += set.entryCostH[set.placements[p].entry];
            dsp += set.entries[set.placements[p].entry].cost.dsp;
        }
        int coveredCells = 0;
        for (std::uint64_t w : mask) coveredCells += __builtin_popcountll(w);
        if (ok && coveredCells == set.cells() && dsp <= set.board.dspBudget) {
            s.best.costH = cost;
            s.best.chosen = warm;
            s.best.dspUsed = dsp;
            s.best.feasible = true;
        }
    }

    s.dfs(0);

    SolveResult r = s.best;
    r.nodes = s.nodes;
    r.optimal = r.feasible && !s.stopped;
    std::sort(r.chosen.begin(), r.chosen.end());
    return r;
}

PlacedTile placedTile(const PlacementSet& set, int placement) {
    const Placement& pl = set.placements.at(placement);
    return {set.entries[pl.entry].kind, pl.ax, pl.ay};
}

} // namespace tilemul
