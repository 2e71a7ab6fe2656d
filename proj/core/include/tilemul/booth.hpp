#pragma once

// Radix-4 recoded array multiplier built from carry chains.
//
// The multiplier Y is recoded into digits in {-2,-1,0,1,2}, one per level.
// Each level owns one carry chain of k+1 LUTs (the top one dual-output) that
// adds the recoded multiple of X into a running window, retires the two
// finished low bits, and hands the rest down. Negative multiples enter as a
// complement pattern with the digit's sign as the chain carry-in; the bias
// this introduces telescopes level to level, so only a single power of two is
// left at the end. For unsigned operands it lands one past the top output bit
// and is dropped; for signed operands the outputs are offset-binary and the
// builder reports the constant to subtract.
//
// An optional addend D (unsigned, k bits) seeds the window of the first
// level, giving a fused multiply-add at no extra cost.

#include "tilemul/netlist.hpp"

namespace tilemul {

// One recoded digit from multiplier bits (y_{m+1}, y_m, y_{m-1}).
struct BoothDigit {
    int value;   // in [-2, 2]
    bool zero;   // multiple is 0
    bool negate; // multiple enters complemented, digit sign; equals y_{m+1}
    bool shift;  // multiple is 2X rather than X
};

// triplet packs (y_{m+1}, y_m, y_{m-1}) as bits (2, 1, 0).
BoothDigit boothEncode(int triplet);

// Appends the array to an existing netlist. x has k >= 2 bits, y has
// 2*levels bits when ySigned else 2*levels - 1, d is empty or k bits.
// Returns the product bits, lowest weight first: k + y.size() of them.
// offsetExp receives -1 when the bits are the plain product, otherwise the
// bits encode (value + 2^offsetExp) and the caller owes a -2^offsetExp
// correction.
std::vector<Signal> emitBoothArray(Netlist& net,
                                   const std::vector<Signal>& x,
                                   const std::vector<Signal>& y,
                                   const std::vector<Signal>& d,
                                   int levels, bool xSigned, bool ySigned,
                                   int& offsetExp);

struct BoothArraySpec {
    int k = 8;
    int levels = 3;
    bool xSigned = false;
    bool ySigned = false;
    bool mac = false; // unsupported for xSigned && !ySigned (no headroom)
};

struct BoothArray {
    Netlist net;  // product port holds the array outputs
    int wOut = 0;
    int offsetExp = -1;
};

// Standalone multiplier: inputs X (k bits), Y (2*levels or 2*levels - 1
// bits), optionally D.
BoothArray buildBoothArray(const BoothArraySpec& spec);

} // namespace tilemul
