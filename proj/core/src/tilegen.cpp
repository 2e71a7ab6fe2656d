#include "tilemul/tilegen.hpp"

#include <algorithm>
#include <stdexcept>

#include "tilemul/booth.hpp"

namespace tilemul {

namespace {

inline bool rowBit(unsigned row, int i) { return (row >> i) & 1u; }

template <typename F>
std::uint64_t maskOf(int n, F f) {
    std::uint64_t m = 0;
    for (unsigned row = 0; row < (1u << n); ++row)
        if (f(row)) m |= std::uint64_t(1) << row;
    return m;
}

// Small multiplier as plain truth tables, one LUT (or shared-output LUT pair)
// per product bit. Inputs interleave x and y starting from the LSBs, so the
// two low product bits never depend on more than the first four inputs and
// can share a LUT even in the six-input case.
//
// Signed slices make the raw product range dip below zero; the emitted word
// is value - vmin, which the caller corrects with the (negative) addend.
TileBits emitTableTile(Netlist& net, const std::vector<Signal>& xs,
                       const std::vector<Signal>& ys, bool xSigned, bool ySigned,
                       const TileCost& cost) {
    int w = int(xs.size()), h = int(ys.size()), n = w + h;
    if (n > 6) throw std::logic_error("table tile with more than six inputs");

    std::vector<Signal> in;
    std::vector<int> xPos(w), yPos(h);
    for (int i = 0; i < std::max(w, h); ++i) {
        if (i < w) { xPos[i] = int(in.size()); in.push_back(xs[i]); }
        if (i < h) { yPos[i] = int(in.size()); in.push_back(ys[i]); }
    }

    auto value = [&](unsigned row) {
        long long xv = 0, yv = 0;
        for (int i = 0; i < w; ++i)
            if (rowBit(row, xPos[i])) xv += 1LL << i;
        for (int i = 0; i < h; ++i)
            if (rowBit(row, yPos[i])) yv += 1LL << i;
        if (xSigned && rowBit(row, xPos[w - 1])) xv -= 1LL << w;
        if (ySigned && rowBit(row, yPos[h - 1])) yv -= 1LL << h;
        return xv * yv;
    };

    long long vmin = 0;
    for (unsigned row = 0; row < (1u << n); ++row) vmin = std::min(vmin, value(row));

    int wOut = cost.wOut;
    std::vector<std::uint64_t> masks(wOut, 0);
    for (unsigned row = 0; row < (1u << n); ++row) {
        auto enc = (unsigned long long)(value(row) - vmin);
        if (enc >> wOut) throw std::logic_error("table tile output overflow");
        for (int b = 0; b < wOut; ++b)
            if ((enc >> b) & 1) masks[b] |= std::uint64_t(1) << row;
    }

    // The catalog LUT figure dictates how many bit pairs must share a LUT.
    long long lutMult = cost.lutMult.num();
    int pairs = wOut - int(lutMult);
    if (cost.lutMult.den() != 1 || pairs < 0 || 2 * pairs > wOut)
        throw std::logic_error("table tile cost out of shape");

    TileBits out;
    out.bits.resize(wOut);
    int next = 0;
    for (int p = 0; p < pairs; ++p, next += 2) {
        auto [o6, o5] = net.addLut2(in, masks[next + 1], masks[next]);
        out.bits[next] = o5;
        out.bits[next + 1] = o6;
    }
    for (; next < wOut; ++next) out.bits[next] = net.addLut(in, masks[next]);
    out.addend = vmin;
    return out;
}

// One carry-chain row computing a * b for a k-bit unsigned a and a 2-bit b.
// The chain adds the two shifted copies b0*a and 2*b1*a; cell j's LUT forms
// the sum-select from a[j] and a[j-1] and hands b0&a[j] to the carry mux via
// its second output.
//
// A signed b (b = b0 - 2*b1) replaces the second copy with b1 ? ~(2a) : 0
// plus a carry-in of b1, which is the usual complement trick; the top
// pattern bit folds the 2^(k+2) wrap into a -2^(k+1) bias, so the word comes
// out biased and the addend repays it.
TileBits emit2xK(Netlist& net, const std::vector<Signal>& a,
                 const std::vector<Signal>& b, bool bSigned) {
    int k = int(a.size());
    if (k < 3 || b.size() != 2) throw std::logic_error("2xk tile operand widths");
    Signal zero = net.constSig(false);
    Signal b0 = b[0], b1 = b[1];
    auto chain = net.newChain();

    TileBits out;
    out.bits.resize(k + 2);
    Signal carry = bSigned ? b1 : zero;
    Signal topSel = -1; // second output of the last cell's LUT, signed case
    for (int j = 0; j <= k; ++j) {
        std::vector<Signal> in{b0, b1};
        int posAj = -1, posAjm1 = -1;
        if (j < k) { posAj = int(in.size()); in.push_back(a[j]); }
        if (j > 0) { posAjm1 = int(in.size()); in.push_back(a[j - 1]); }
        auto alpha = [&](unsigned row) {
            return posAj >= 0 && rowBit(row, 0) && rowBit(row, posAj);
        };
        auto beta = [&](unsigned row) {
            if (!rowBit(row, 1)) return false;
            bool twoA = posAjm1 >= 0 && rowBit(row, posAjm1);
            return bSigned ? !twoA : twoA;
        };
        int ni = int(in.size());
        std::uint64_t m6 = maskOf(ni, [&](unsigned r) { return alpha(r) != beta(r); });
        Signal sel, di;
        if (j == k) {
            // no b0 addend bit here, so the carry mux data is constant zero
            // and the second output is free for the closing bias bit
            if (bSigned) {
                auto [o6, o5] = net.addLut2(in, m6, maskOf(ni, [&](unsigned r) {
                                                return !rowBit(r, 1);
                                            }));
                sel = o6;
                topSel = o5;
            } else {
                sel = net.addLut(in, m6);
            }
            di = zero;
        } else {
            auto [o6, o5] = net.addLut2(in, m6, maskOf(ni, alpha));
            sel = o6;
            di = o5;
        }
        auto [sum, cout] = net.addCarry(chain, sel, di, carry);
        out.bits[j] = sum;
        carry = cout;
    }
    if (bSigned) {
        auto [sum, cout] = net.addCarry(chain, topSel, zero, carry);
        (void)cout;
        out.bits[k + 1] = sum;
        out.addend = -(__int128(1) << (k + 1));
    } else {
        out.bits[k + 1] = carry;
    }
    return out;
}

TileBits emitDspTile(Netlist& net, const std::vector<Signal>& a,
                     const std::vector<Signal>& b, bool aSigned, bool bSigned) {
    bool offset = aSigned || bSigned;
    const DspNode& node = net.addDsp(a, b, aSigned, bSigned, offset);
    TileBits out;
    out.bits = node.out;
    if (offset) out.addend = -(__int128(1) << 40);
    return out;
}

} // namespace

TileBits emitTile(Netlist& net, const CatalogEntry& entry,
                  const std::vector<Signal>& xs, const std::vector<Signal>& ys,
                  bool xSigned, bool ySigned) {
    const TileKind& kind = entry.kind;
    if (int(xs.size()) != entry.shape.width || int(ys.size()) != entry.shape.height)
        throw std::invalid_argument("tile slice widths do not match the shape");

    std::size_t lutsBefore = net.luts.size();
    TileBits out;
    switch (kind.family) {
    case TileFamily::Lut1x1:
    case TileFamily::Lut1x2:
    case TileFamily::Lut2x3:
    case TileFamily::Lut3x3:
        out = emitTableTile(net, xs, ys, xSigned, ySigned, entry.cost);
        break;
    case TileFamily::Lut2xK: {
        const auto& longOp = kind.transposed ? ys : xs;
        const auto& shortOp = kind.transposed ? xs : ys;
        bool longSigned = kind.transposed ? ySigned : xSigned;
        bool shortSigned = kind.transposed ? xSigned : ySigned;
        if (longSigned)
            throw std::invalid_argument("2xk tile cannot take the long operand's sign bit");
        out = emit2xK(net, longOp, shortOp, shortSigned);
        break;
    }
    case TileFamily::BoothArray: {
        const auto& recoded = kind.transposed ? ys : xs;
        const auto& control = kind.transposed ? xs : ys;
        bool recodedSigned = kind.transposed ? ySigned : xSigned;
        bool controlSigned = kind.transposed ? xSigned : ySigned;
        if (controlSigned != kind.signedTile)
            throw std::invalid_argument("Booth tile signedness does not match its kind");
        int offsetExp = -1;
        out.bits = emitBoothArray(net, recoded, control, {}, kind.levels,
                                  recodedSigned, controlSigned, offsetExp);
        if (offsetExp >= 0) out.addend = -(__int128(1) << offsetExp);
        break;
    }
    case TileFamily::Dsp24x17: {
        const auto& a = kind.transposed ? ys : xs;
        const auto& bb = kind.transposed ? xs : ys;
        bool aS = kind.transposed ? ySigned : xSigned;
        bool bS = kind.transposed ? xSigned : ySigned;
        out = emitDspTile(net, a, bb, aS, bS);
        break;
    }
    }

    auto spent = (long long)(net.luts.size() - lutsBefore);
    if (entry.cost.lutMult.den() != 1 || entry.cost.lutMult.num() != spent)
        throw std::logic_error("tile used a different LUT count than the catalog");
    if (int(out.bits.size()) != entry.cost.wOut)
        throw std::logic_error("tile output width differs from the catalog");
    return out;
}

GeneratedTiles emitTiles(Netlist& net, const PlacementSet& set,
                         const std::vector<int>& chosen) {
    const Board& bd = set.board;
    if (net.xWidth != bd.wx || net.yWidth != bd.wy)
        throw std::invalid_argument("netlist operand widths do not match the board");

    GeneratedTiles g;
    g.width = bd.wx + bd.wy;
    g.columns.resize(g.width);
    __int128 constant = 0;
    int lutsBefore = int(net.luts.size());
    int dspsBefore = int(net.dsps.size());

    for (int pi : chosen) {
        const Placement& p = set.placements.at(pi);
        const CatalogEntry& e = set.entries[p.entry];
        std::vector<Signal> xs, ys;
        xs.reserve(e.shape.width);
        ys.reserve(e.shape.height);
        for (int i = 0; i < e.shape.width; ++i) xs.push_back(net.xBit(p.ax + i));
        for (int i = 0; i < e.shape.height; ++i) ys.push_back(net.yBit(p.ay + i));
        bool xS = bd.isSigned && p.ax + e.shape.width == bd.wx;
        bool yS = bd.isSigned && p.ay + e.shape.height == bd.wy;

        TileBits tb = emitTile(net, e, xs, ys, xS, yS);
        int shift = p.ax + p.ay;
        for (std::size_t i = 0; i < tb.bits.size(); ++i) {
            int weight = shift + int(i);
            if (weight >= g.width)
                throw std::logic_error("tile output lands beyond the product");
            g.columns[weight].push_back(tb.bits[i]);
        }
        constant += tb.addend << shift;
    }

    g.lutCount = int(net.luts.size()) - lutsBefore;
    g.dspCount = int(net.dsps.size()) - dspsBefore;
    Wide mask = g.width >= 128 ? ~Wide(0) : (Wide(1) << g.width) - 1;
    g.constant = Wide(constant) & mask;
    return g;
}

} // namespace tilemul
