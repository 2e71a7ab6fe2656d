#include "tilemul/netlist.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilemul {

void Netlist::init(int xw, int yw, int dw) {
    if (xw < 0 || yw < 0 || dw < 0 || xw > 64 || yw > 64 || dw > 64)
        throw std::invalid_argument("port widths must be in [0,64]");
    xWidth = xw; yWidth = yw; dWidth = dw;
    signals.clear(); luts.clear(); cells.clear(); dsps.clear(); product.clear();
    chainCount = 0;
    signals.push_back({SignalOrigin::Const0, 0, 0});
    signals.push_back({SignalOrigin::Const1, 0, 0});
    for (int i = 0; i < xw; ++i) signals.push_back({SignalOrigin::InputX, i, 0});
    for (int i = 0; i < yw; ++i) signals.push_back({SignalOrigin::InputY, i, 0});
    for (int i = 0; i < dw; ++i) signals.push_back({SignalOrigin::InputD, i, 0});
}

Signal Netlist::xBit(int i) const {
    if (i < 0 || i >= xWidth) throw std::out_of_range("x bit index");
    return 2 + i;
}
Signal Netlist::yBit(int i) const {
    if (i < 0 || i >= yWidth) throw std::out_of_range("y bit index");
    return 2 + xWidth + i;
}
Signal Netlist::dBit(int i) const {
    if (i < 0 || i >= dWidth) throw std::out_of_range("d bit index");
    return 2 + xWidth + yWidth + i;
}

void Netlist::checkInput(Signal s) const {
    if (s < 0 || s >= static_cast<Signal>(signals.size()))
        throw std::invalid_argument("netlist input references a signal that does not exist yet");
}

Signal Netlist::newSignal(SignalOrigin origin, std::int32_t node, std::int32_t aux) {
    signals.push_back({origin, node, aux});
    return static_cast<Signal>(signals.size() - 1);
}

Signal Netlist::addLut(const std::vector<Signal>& inputs, std::uint64_t mask) {
    if (inputs.empty() || inputs.size() > 6) throw std::invalid_argument("LUT needs 1..6 inputs");
    for (Signal s : inputs) checkInput(s);
    LutNode n;
    n.inputs = inputs;
    n.mask[0] = mask;
    n.numOutputs = 1;
    n.out[0] = newSignal(SignalOrigin::LutOut, static_cast<std::int32_t>(luts.size()), 0);
    luts.push_back(std::move(n));
    return luts.back().out[0];
}

std::pair<Signal, Signal> Netlist::addLut2(const std::vector<Signal>& inputs,
                                           std::uint64_t mask6, std::uint64_t mask5) {
    if (inputs.empty() || inputs.size() > 6) throw std::invalid_argument("LUT needs 1..6 inputs");
    for (Signal s : inputs) checkInput(s);
    // The second output must not depend on a sixth input. Accept a 32-entry
    // table and replicate it so evaluation over all six inputs stays exact.
    if (inputs.size() == 6) {
        std::uint64_t lo = mask5 & 0xffffffffu, hi = mask5 >> 32;
        if (hi == 0) mask5 = lo | (lo << 32);
        else if (lo != hi)
            throw std::invalid_argument("second LUT output may only use the first five inputs");
    }
    LutNode n;
    n.inputs = inputs;
    n.mask[0] = mask6;
    n.mask[1] = mask5;
    n.numOutputs = 2;
    n.out[0] = newSignal(SignalOrigin::LutOut, static_cast<std::int32_t>(luts.size()), 0);
    n.out[1] = newSignal(SignalOrigin::LutOut, static_cast<std::int32_t>(luts.size()), 1);
    luts.push_back(std::move(n));
    return {luts.back().out[0], luts.back().out[1]};
}

std::pair<Signal, Signal> Netlist::addCarry(std::int32_t chain, Signal sel, Signal di, Signal cin) {
    if (chain < 0 || chain >= chainCount) throw std::invalid_argument("unknown carry chain");
    checkInput(sel); checkInput(di); checkInput(cin);
    CarryCell c;
    c.sel = sel; c.di = di; c.cin = cin; c.chain = chain;
    c.sum = newSignal(SignalOrigin::CarrySum, static_cast<std::int32_t>(cells.size()), 0);
    c.cout = newSignal(SignalOrigin::CarryOut, static_cast<std::int32_t>(cells.size()), 0);
    cells.push_back(c);
    return {c.sum, c.cout};
}

const DspNode& Netlist::addDsp(const std::vector<Signal>& a, const std::vector<Signal>& b,
                               bool aSigned, bool bSigned, bool offsetBinary) {
    if (a.empty() || a.size() > 24 || b.empty() || b.size() > 17)
        throw std::invalid_argument("DSP operand widths are 1..24 and 1..17");
    for (Signal s : a) checkInput(s);
    for (Signal s : b) checkInput(s);
    DspNode n;
    n.a = a; n.b = b; n.aSigned = aSigned; n.bSigned = bSigned; n.offsetBinary = offsetBinary;
    std::int32_t idx = static_cast<std::int32_t>(dsps.size());
    dsps.push_back(std::move(n));
    for (int i = 0; i < 41; ++i)
        dsps.back().out.push_back(newSignal(SignalOrigin::DspOut, idx, i));
    return dsps.back();
}

namespace {

// One word per signal, 64 vectors per pass.
struct Eval {
    const Netlist& net;
    std::vector<std::uint64_t> val;

    explicit Eval(const Netlist& n) : net(n), val(n.signals.size(), 0) {}

    std::uint64_t lutEval(const LutNode& n, int port) const {
        // Shannon fold over the input words: words[] starts as the truth table
        // (each row broadcast to a full word) and halves once per input, pairing
        // cofactors as (~v & f0) | (v & f1). Six folds max.
        std::uint64_t mask = n.mask[port];
        std::uint64_t words[64];
        int nin = static_cast<int>(n.inputs.size());
        int width = 1 << nin;
        for (int i = 0; i < width; ++i)
            words[i] = (mask >> i) & 1 ? ~0ull : 0ull;
        for (int level = nin - 1; level >= 0; --level) {
            std::uint64_t v = val[n.inputs[level]];
            width >>= 1;
            for (int i = 0; i < width; ++i)
                words[i] = (~v & words[i]) | (v & words[i + width]);
        }
        return words[0];
    }

    void run() {
        val[0] = 0;
        val[1] = ~0ull;
        // Input words are preloaded by the caller. Nodes only ever reference
        // signals that already existed when they were created, so walking the
        // signal table in creation order is a topological walk.
        for (std::size_t s = 0; s < net.signals.size(); ++s) {
            const SignalInfo& info = net.signals[s];
            switch (info.origin) {
            case SignalOrigin::LutOut:
                if (info.aux == 0) {
                    const LutNode& n = net.luts[info.node];
                    val[n.out[0]] = lutEval(n, 0);
                    if (n.numOutputs == 2) val[n.out[1]] = lutEval(n, 1);
                }
                break;
            case SignalOrigin::CarrySum: {
                const CarryCell& c = net.cells[info.node];
                std::uint64_t sel = val[c.sel], d = val[c.di], cin = val[c.cin];
                val[c.sum] = sel ^ cin;
                val[c.cout] = (sel & cin) | (~sel & d);
                break;
            }
            case SignalOrigin::DspOut:
                if (info.aux == 0) evalDsp(net.dsps[info.node]);
                break;
            default:
                break;
            }
        }
    }

    void evalDsp(const DspNode& n) {
        for (int lane = 0; lane < 64; ++lane) {
            std::int64_t a = 0, b = 0;
            for (std::size_t i = 0; i < n.a.size(); ++i)
                a |= static_cast<std::int64_t>((val[n.a[i]] >> lane) & 1) << i;
            for (std::size_t i = 0; i < n.b.size(); ++i)
                b |= static_cast<std::int64_t>((val[n.b[i]] >> lane) & 1) << i;
            if (n.aSigned && (a >> (n.a.size() - 1)) & 1) a -= std::int64_t(1) << n.a.size();
            if (n.bSigned && (b >> (n.b.size() - 1)) & 1) b -= std::int64_t(1) << n.b.size();
            std::int64_t p = a * b;
            std::uint64_t enc = static_cast<std::uint64_t>(p) & ((std::uint64_t(1) << 41) - 1);
            if (n.offsetBinary) enc ^= std::uint64_t(1) << 40;
            for (int i = 0; i < 41; ++i) {
                std::uint64_t bit = (enc >> i) & 1;
                val[n.out[i]] = (val[n.out[i]] & ~(1ull << lane)) | (bit << lane);
            }
        }
    }
};

} // namespace

std::vector<Wide> simulate(const Netlist& net, const std::vector<Wide>& x,
                           const std::vector<Wide>& y, const std::vector<Wide>& d) {
    std::size_t n = x.size();
    if (y.size() != n || (!d.empty() && d.size() != n))
        throw std::invalid_argument("simulate: vector count mismatch");
    std::vector<Wide> out(n, 0);
    Eval ev(net);
    for (std::size_t base = 0; base < n; base += 64) {
        std::size_t lanes = std::min<std::size_t>(64, n - base);
        for (int i = 0; i < net.xWidth; ++i) {
            std::uint64_t w = 0;
            for (std::size_t l = 0; l < lanes; ++l) w |= static_cast<std::uint64_t>((x[base + l] >> i) & 1) << l;
            ev.val[net.xBit(i)] = w;
        }
        for (int i = 0; i < net.yWidth; ++i) {
            std::uint64_t w = 0;
            for (std::size_t l = 0; l < lanes; ++l) w |= static_cast<std::uint64_t>((y[base + l] >> i) & 1) << l;
            ev.val[net.yBit(i)] = w;
        }
        for (int i = 0; i < net.dWidth; ++i) {
            std::uint64_t w = 0;
            if (!d.empty())
                for (std::size_t l = 0; l < lanes; ++l) w |= static_cast<std::uint64_t>((d[base + l] >> i) & 1) << l;
            ev.val[net.dBit(i)] = w;
        }
        ev.run();
        for (std::size_t l = 0; l < lanes; ++l) {
            Wide p = 0;
            for (std::size_t i = 0; i < net.product.size(); ++i)
                p |= static_cast<Wide>((ev.val[net.product[i]] >> l) & 1) << i;
            out[base + l] = p;
        }
    }
    return out;
}

// Which input pins the truth table actually reads. Dual-output LUTs often
// route a signal past an output that ignores it (a ternary adder's saved
// majority shares pins with the sum xor but depends only on the fresh column
// bits), and counting such pass-throughs as timing arcs would turn every
// cascade into a fake ripple path.
static std::uint64_t maskSupport(std::uint64_t mask, int n) {
    std::uint64_t support = 0;
    int entries = 1 << n;
    for (int j = 0; j < n; ++j) {
        int stride = 1 << j;
        for (int i = 0; i < entries; ++i) {
            if (i & stride) continue;
            if (((mask >> i) & 1) != ((mask >> (i + stride)) & 1)) {
                support |= 1u << j;
                break;
            }
        }
    }
    return support;
}

namespace {

// Depth over "stage nodes": one per LUT output, one per carry chain, one per
// DSP. A chain counts as a single stage no matter its length, and LUT outputs
// are tracked separately so a pin only one output reads does not delay the
// other.
struct StageDepths {
    std::vector<int> outBase; // LUT index -> first stage node of its outputs
    int nLutOuts = 0;
    int nStages = 0;
    std::vector<int> depth; // per stage node, starting at 1

    int stageOf(const Netlist& net, Signal s) const {
        const SignalInfo& info = net.signals[s];
        switch (info.origin) {
        case SignalOrigin::LutOut: return outBase[info.node] + info.aux;
        case SignalOrigin::CarrySum:
        case SignalOrigin::CarryOut: return nLutOuts + net.cells[info.node].chain;
        case SignalOrigin::DspOut: return nLutOuts + net.chainCount + info.node;
        default: return -1;
        }
    }
};

StageDepths analyzeStages(const Netlist& net) {
    StageDepths a;
    a.outBase.assign(net.luts.size() + 1, 0);
    for (std::size_t i = 0; i < net.luts.size(); ++i)
        a.outBase[i + 1] = a.outBase[i] + net.luts[i].numOutputs;
    a.nLutOuts = a.outBase[net.luts.size()];
    a.nStages = a.nLutOuts + net.chainCount + static_cast<int>(net.dsps.size());

    std::vector<std::vector<int>> preds(a.nStages);
    auto addPred = [&](int stage, Signal s) {
        int p = a.stageOf(net, s);
        if (p >= 0 && p != stage) preds[stage].push_back(p);
    };
    for (std::size_t i = 0; i < net.luts.size(); ++i) {
        const LutNode& lut = net.luts[i];
        int n = static_cast<int>(lut.inputs.size());
        for (int o = 0; o < lut.numOutputs; ++o) {
            std::uint64_t support = maskSupport(lut.mask[o], n);
            for (int j = 0; j < n; ++j)
                if (support & (1u << j)) addPred(a.outBase[i] + o, lut.inputs[j]);
        }
    }
    for (const CarryCell& c : net.cells) {
        int st = a.nLutOuts + c.chain;
        addPred(st, c.sel);
        addPred(st, c.di);
        addPred(st, c.cin);
    }
    for (std::size_t i = 0; i < net.dsps.size(); ++i) {
        int st = a.nLutOuts + net.chainCount + static_cast<int>(i);
        for (Signal s : net.dsps[i].a) addPred(st, s);
        for (Signal s : net.dsps[i].b) addPred(st, s);
    }

    // Longest path by Kahn's algorithm; a cycle here means a chain feeds itself
    // through outside logic, which no valid construction produces.
    std::vector<int> indeg(a.nStages, 0);
    a.depth.assign(a.nStages, 1);
    std::vector<std::vector<int>> succs(a.nStages);
    for (int v = 0; v < a.nStages; ++v) {
        std::sort(preds[v].begin(), preds[v].end());
        preds[v].erase(std::unique(preds[v].begin(), preds[v].end()), preds[v].end());
        for (int p : preds[v]) { succs[p].push_back(v); ++indeg[v]; }
    }
    std::vector<int> ready;
    for (int v = 0; v < a.nStages; ++v) if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int s : succs[v]) {
            a.depth[s] = std::max(a.depth[s], a.depth[v] + 1);
            if (--indeg[s] == 0) ready.push_back(s);
        }
    }
    if (seen != a.nStages) throw std::logic_error("carry chain depends on its own outputs");
    return a;
}

} // namespace

Diagnostics diagnose(const Netlist& net) {
    Diagnostics d;
    d.lutCount = static_cast<int>(net.luts.size());
    d.carryCellCount = static_cast<int>(net.cells.size());
    d.dspCount = static_cast<int>(net.dsps.size());
    StageDepths a = analyzeStages(net);
    for (int v = 0; v < a.nStages; ++v) d.logicDepth = std::max(d.logicDepth, a.depth[v]);
    return d;
}

std::vector<int> signalDepths(const Netlist& net) {
    StageDepths a = analyzeStages(net);
    std::vector<int> out(net.signals.size(), 0);
    for (std::size_t s = 0; s < net.signals.size(); ++s) {
        int v = a.stageOf(net, static_cast<Signal>(s));
        if (v >= 0) out[s] = a.depth[v];
    }
    return out;
}

} // namespace tilemul
