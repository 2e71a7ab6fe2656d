// Microbenchmarks for the hot paths: placement enumeration, the branch and
// bound search (items/s is search nodes per second, the figure the driver's
// deterministic time limits are calibrated against), compressor planning, and
// bit-parallel simulation.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "tilemul/bitheap.hpp"
#include "tilemul/driver.hpp"
#include "tilemul/tilegen.hpp"
#include "tilemul/tiling.hpp"

using namespace tilemul;

namespace {

PlacementSet boardSet(int side, int boothLevel) {
    Board b;
    b.wx = b.wy = side;
    TileSetConfig cfg;
    cfg.boothMaxLevel = boothLevel;
    return enumeratePlacements(b, buildTileSet(cfg));
}

struct BuiltDesign {
    Netlist net;
    BitHeap heap;
};

// Fully tiled board with the heap still unreduced, for planner benchmarks.
BuiltDesign tiledDesign(int side, int boothLevel) {
    PlacementSet set = boardSet(side, boothLevel);
    SolveOptions opt;
    opt.nodeBudget = 2'000'000;
    SolveResult sol = solveExact(set, opt);
    BuiltDesign d;
    d.net.init(side, side);
    GeneratedTiles gen = emitTiles(d.net, set, sol.chosen);
    d.heap = buildHeap(d.net, gen);
    return d;
}

} // namespace

static void BM_EnumeratePlacements(benchmark::State& state) {
    int side = int(state.range(0));
    Board b;
    b.wx = b.wy = side;
    std::vector<TileKind> kinds = buildTileSet(TileSetConfig{});
    for (auto _ : state) {
        PlacementSet set = enumeratePlacements(b, kinds);
        benchmark::DoNotOptimize(set.placements.data());
    }
}
BENCHMARK(BM_EnumeratePlacements)->Arg(16)->Arg(32)->Arg(64);

static void BM_SolveNodes(benchmark::State& state) {
    PlacementSet set = boardSet(24, 4);
    std::int64_t nodes = 0;
    for (auto _ : state) {
        SolveOptions opt;
        opt.nodeBudget = state.range(0);
        SolveResult r = solveExact(set, opt);
        nodes += r.nodes;
        benchmark::DoNotOptimize(r.costH);
    }
    state.SetItemsProcessed(nodes);
}
BENCHMARK(BM_SolveNodes)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_ScheduleHeuristic(benchmark::State& state) {
    BuiltDesign d = tiledDesign(int(state.range(0)), 0);
    std::vector<Compressor> lib = defaultCompressors();
    for (auto _ : state) {
        CompressorSchedule s = schedule(d.heap, lib);
        benchmark::DoNotOptimize(s.totalLut);
    }
}
BENCHMARK(BM_ScheduleHeuristic)->Arg(16)->Arg(32);

static void BM_ScheduleExactStages(benchmark::State& state) {
    BuiltDesign d = tiledDesign(int(state.range(0)), 0);
    std::vector<Compressor> lib = defaultCompressors();
    ScheduleOptions opt;
    opt.mode = ScheduleMode::exactStages;
    for (auto _ : state) {
        CompressorSchedule s = schedule(d.heap, lib, opt);
        benchmark::DoNotOptimize(s.totalLut);
    }
}
BENCHMARK(BM_ScheduleExactStages)->Arg(16)->Arg(32);

// items/s is simulated vectors per second (64 per batch).
static void BM_Simulate(benchmark::State& state) {
    int side = int(state.range(0));
    BuiltDesign d = tiledDesign(side, 4);
    std::vector<Compressor> lib = defaultCompressors();
    CompressorSchedule sched = schedule(d.heap, lib);
    d.net.product = applySchedule(d.net, d.heap, sched, lib);

    std::mt19937_64 rng(7);
    Wide mask = (Wide(1) << side) - 1;
    std::vector<Wide> xs(64), ys(64);
    for (int i = 0; i < 64; ++i) {
        xs[i] = Wide(rng()) & mask;
        ys[i] = Wide(rng()) & mask;
    }
    for (auto _ : state) {
        std::vector<Wide> out = simulate(d.net, xs, ys);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_Simulate)->Arg(8)->Arg(16)->Arg(32);

// Whole pipeline including verification, as the command line tool runs it.
static void BM_EndToEnd(benchmark::State& state) {
    RunConfig c;
    c.wx = c.wy = int(state.range(0));
    c.forceExact = true;
    c.timeLimit = 0.05;
    for (auto _ : state) {
        RunResult r = run(c);
        benchmark::DoNotOptimize(r.lutExact);
    }
}
BENCHMARK(BM_EndToEnd)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
