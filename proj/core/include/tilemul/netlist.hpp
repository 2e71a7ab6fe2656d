#pragma once

// Gate-level netlist the generator produces and verifies against.
//
// The node vocabulary matches what a LUT/carry-chain fabric offers: LUTs of up
// to six inputs with one or two outputs (the second output is the hardware's
// shared-input five-input function), carry cells (sum = sel ^ cin,
// cout = sel ? cin : di) grouped into chains, constants, and a behavioral DSP
// multiplier node. Signals are created strictly before use, so the graph is
// acyclic by construction and every input has exactly one driver.
//
// Simulation is bit-parallel: 64 test vectors per pass, one machine word per
// signal. Logic depth counts a whole carry chain (and a DSP block) as a single
// stage, LUTs as one stage each.

#include <cstdint>
#include <utility>
#include <vector>

namespace tilemul {

using Wide = unsigned __int128; // operand/product values, boards up to 64x64

enum class SignalOrigin : std::uint8_t {
    Const0,
    Const1,
    InputX,
    InputY,
    InputD,
    LutOut,  // aux = output port (0 or 1)
    CarrySum,
    CarryOut,
    DspOut, // aux = product bit
};

using Signal = std::int32_t;

struct SignalInfo {
    SignalOrigin origin;
    std::int32_t node; // index into the owning node table, or input bit index
    std::int32_t aux;
};

struct LutNode {
    std::vector<Signal> inputs;  // size 1..6
    std::uint64_t mask[2] = {0, 0}; // truth tables, input 0 is the low index bit
    int numOutputs = 1;
    Signal out[2] = {-1, -1};
};

struct CarryCell {
    Signal sel;
    Signal di;
    Signal cin;
    std::int32_t chain;
    Signal sum = -1;
    Signal cout = -1;
};

struct DspNode {
    std::vector<Signal> a; // up to 24 bits, LSB first
    std::vector<Signal> b; // up to 17 bits
    bool aSigned = false;
    bool bSigned = false;
    std::vector<Signal> out; // 41 product bits of (a * b) in offset-binary when signed
    bool offsetBinary = false; // MSB complemented (value + 2^40 emitted)
};

struct Diagnostics {
    int lutCount = 0;
    int carryCellCount = 0;
    int dspCount = 0;
    int logicDepth = 0;
};

class Netlist {
public:
    int xWidth = 0, yWidth = 0, dWidth = 0;
    std::vector<Signal> product; // LSB first

    std::vector<SignalInfo> signals;
    std::vector<LutNode> luts;
    std::vector<CarryCell> cells;
    std::vector<DspNode> dsps;
    std::int32_t chainCount = 0;

    Netlist() = default;
    Netlist(int xw, int yw, int dw = 0) { init(xw, yw, dw); }
    void init(int xw, int yw, int dw = 0);

    Signal constSig(bool v) const { return v ? 1 : 0; }
    Signal xBit(int i) const;
    Signal yBit(int i) const;
    Signal dBit(int i) const;

    Signal addLut(const std::vector<Signal>& inputs, std::uint64_t mask);
    // Dual-output LUT; the second function may only use the first five inputs.
    std::pair<Signal, Signal> addLut2(const std::vector<Signal>& inputs,
                                      std::uint64_t mask6, std::uint64_t mask5);

    std::int32_t newChain() { return chainCount++; }
    // Returns {sum, cout}.
    std::pair<Signal, Signal> addCarry(std::int32_t chain, Signal sel, Signal di, Signal cin);

    const DspNode& addDsp(const std::vector<Signal>& a, const std::vector<Signal>& b,
                          bool aSigned, bool bSigned, bool offsetBinary);

private:
    void checkInput(Signal s) const;
    Signal newSignal(SignalOrigin origin, std::int32_t node, std::int32_t aux);
};

Diagnostics diagnose(const Netlist& net);

// Stage depth of every signal under the same counting diagnose uses; primary
// inputs and constants sit at 0. Lets builders wire late arrivals around
// logic they do not have to pass through.
std::vector<int> signalDepths(const Netlist& net);

// Evaluate up to 64 vectors at once; all argument vectors share one length.
// Returns product values assembled from the product port, low bit first.
std::vector<Wide> simulate(const Netlist& net, const std::vector<Wide>& x,
                           const std::vector<Wide>& y, const std::vector<Wide>& d = {});

} // namespace tilemul
