#pragma once

// Weighted-column accumulation of partial-product bits and its reduction to
// at most two rows (optionally three) with a library of generalized parallel
// counters and carry-chain adder rows, followed by one final adder.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tilemul/netlist.hpp"
#include "tilemul/rational.hpp"
#include "tilemul/tilegen.hpp"

namespace tilemul {

struct BitHeap {
    int width = 0;                            // columns 0..width-1
    std::vector<std::vector<Signal>> columns; // compressors consume from the front
    Wide constant = 0; // correction word, already present as constant-one bits
    int maxHeight() const;
    long long bitCount() const;
};

// Collects tile outputs into columns and injects the folded correction
// constant as one row of constant-one bits.
BitHeap buildHeap(Netlist& net, const GeneratedTiles& tiles);

// a*n + b, used for the output count and LUT cost of scalable rows.
struct LinearLaw {
    long long slope = 0;
    long long base = 0;
    long long at(long long n) const { return slope * n + base; }
    bool operator==(const LinearLaw& o) const = default;
};

// Either a fixed parallel counter (signature lists per-column input counts,
// least significant column first) or a carry-chain row that scales to any
// span of n >= 2 columns at schedule time.
struct Compressor {
    std::string name;
    bool row = false;

    std::vector<int> signature; // counters only
    int outBits = 0;
    Rational cost;

    int rowBase = 0;   // intake of the base column (rowRepeat or rowRepeat + 1)
    int rowRepeat = 0; // intake of every further column, 3 or 4
    LinearLaw rowOut;  // emitted bits for span n
    LinearLaw rowCost; // LUTs for span n

    bool operator==(const Compressor& o) const = default;
};

// fa32 (3;2), gpc63 (6;3), gpc153 (1,5;3), gpc233 (2,3;3), the 4:2 row and
// the ternary row, with the stock cost figures.
std::vector<Compressor> defaultCompressors();

// One compressor per line: `name; signature; outputs; cost`. The signature is
// comma-separated per-column intake, least significant first; a trailing '*'
// marks a scalable row's repeating column. Row outputs and costs are linear
// expressions in the span, e.g. `n+2`. '#' starts a comment.
std::vector<Compressor> parseCompressors(std::istream& in);
std::string formatCompressors(const std::vector<Compressor>& lib);

struct CompressorOp {
    int comp = 0;           // library index
    int column = 0;         // base weight
    int span = 1;           // columns covered; always 1 for counters
    std::vector<int> taken; // bits consumed per relative column
};

struct ScheduleStage {
    std::vector<CompressorOp> ops;
};

enum class ScheduleMode { heuristic, exactStages };

struct ScheduleOptions {
    ScheduleMode mode = ScheduleMode::heuristic;
    bool ternaryFinal = false; // stop at three rows and use a ternary adder
};

struct CompressorSchedule {
    std::vector<ScheduleStage> stages;
    int finalAdderWidth = 0; // 0 when at most one row remains
    bool ternaryFinal = false;
    Rational totalLut;       // compressor cost plus final adder cost
    int stageCount() const { return int(stages.size()); }
};

// Plans the reduction of the heap's column heights. The heuristic settles
// columns LSB to MSB within each stage, picking the most efficient move
// (eliminated bits per LUT); exactStages reruns the planner under a family
// of greedy policies and keeps the lowest stage count, ties broken by cost.
// The library must contain the (3;2) full adder.
CompressorSchedule schedule(const BitHeap& heap, const std::vector<Compressor>& lib,
                            const ScheduleOptions& opt = {});

Rational compressionCost(const CompressorSchedule& sched,
                         const std::vector<Compressor>& lib);

// Expected output bit count per relative weight for one op, shared by the
// planner and the builder so their bookkeeping cannot drift apart.
std::vector<int> compressorOutCounts(const Compressor& comp, int span,
                                     const std::vector<int>& taken);

// Builds one compressor instance over the given per-column input bits
// (anchored at relative weight 0) and returns its (weight, signal) outputs.
std::vector<std::pair<int, Signal>> emitCompressor(Netlist& net, const Compressor& comp,
                                                   int span,
                                                   const std::vector<std::vector<Signal>>& inputs);

// Replays the schedule on the real heap bits, builds the final adder and
// returns the product bits (length heap.width). Compressor outputs at or
// beyond the heap width are dropped; the result is exact modulo 2^width.
std::vector<Signal> applySchedule(Netlist& net, const BitHeap& heap,
                                  const CompressorSchedule& sched,
                                  const std::vector<Compressor>& lib);

} // namespace tilemul
