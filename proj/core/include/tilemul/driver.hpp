#pragma once

// One-call pipeline: tile the board, compress the heap, build and verify the
// netlist, render artifacts. Everything downstream of the config is
// deterministic; time limits are enforced as solver node budgets through a
// fixed nodes-per-second calibration so artifacts never depend on wall clock.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tilemul/bitheap.hpp"
#include "tilemul/emit.hpp"
#include "tilemul/tiling.hpp"

namespace tilemul {

inline constexpr std::int64_t kNodesPerSecond = 4'000'000;

inline std::int64_t nodeBudgetFor(double seconds) {
    double nodes = seconds * double(kNodesPerSecond);
    if (nodes < 1) return 1;
    if (nodes > 9e18) return std::int64_t(9e18);
    return std::int64_t(nodes);
}

inline double solveSeconds(std::int64_t nodes) {
    return double(nodes) / double(kNodesPerSecond);
}

enum class SolverMode { automatic, exact, lp };

struct RunConfig {
    int wx = 8, wy = 8;
    bool isSigned = false;
    int dspBudget = 0;
    TileSetConfig tiles; // family toggles and boothMaxLevel
    SolverMode solver = SolverMode::automatic;
    bool forceExact = false;
    double timeLimit = 60.0;
    ScheduleMode scheduleMode = ScheduleMode::heuristic;
    bool ternaryFinal = false;
    std::uint64_t seed = 1;

    bool wantHdl = false, wantSvg = false, wantAscii = false;
    bool wantReport = true, wantLp = false;
    std::string outPrefix;   // when set, artifacts land in <prefix>.v/.svg/...
    std::string moduleName = "tilemul";
    std::string compressorFile; // overrides the built-in library
    std::string solutionFile;   // external LP solution to import

    std::vector<PlacedTile> warmStart; // seeds the branch and bound incumbent
};

struct RunResult {
    bool ok = false;
    std::string error;   // why ok is false
    std::string warning; // non-fatal notes (LP fallback)
    std::string status;  // ok | lp_exported | infeasible | verify_failed | error

    bool feasible = false, optimal = false, verified = false;
    std::int64_t objectiveH = 0; // model cost in hundredths of a LUT
    int lutExact = 0, dspUsed = 0, logicDepth = 0, stageCount = 0;
    std::int64_t nodes = 0;
    std::vector<PlacedTile> tiles;

    std::string report, hdl, svg, ascii, lp;
};

RunResult run(const RunConfig& config);

struct SweepOutcome {
    std::string csv;
    std::vector<std::string> errors; // one entry per failed row
};

// Runs every config in order and emits one CSV row each. Consecutive rows on
// the same board chain their tilings as warm starts, so a widening tile set
// can only keep or improve the objective. Row failures leave the result
// columns empty and the sweep continues.
SweepOutcome sweep(const std::vector<RunConfig>& grid);

// Flat `key = value` text config; '#' starts a comment. Unknown keys throw.
void applyConfigKey(RunConfig& config, const std::string& key, const std::string& value);
RunConfig loadConfig(std::istream& in);
std::string formatConfig(const RunConfig& config);

} // namespace tilemul
