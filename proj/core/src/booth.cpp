#include "tilemul/booth.hpp"

#include <stdexcept>

namespace tilemul {

BoothDigit boothEncode(int triplet) {
    if (triplet < 0 || triplet > 7) throw std::invalid_argument("triplet is 3 bits");
    static const int value[8] = {0, 1, 1, 2, -2, -1, -1, 0};
    BoothDigit d;
    d.value = value[triplet];
    d.zero = triplet == 0 || triplet == 7;
    d.negate = triplet >= 4;
    d.shift = triplet == 3 || triplet == 4;
    return d;
}

namespace {

// Truth table over n inputs; input i is bit i of the row index.
template <class F>
std::uint64_t maskOf(int n, F f) {
    std::uint64_t m = 0;
    for (int row = 0; row < (1 << n); ++row)
        if (f(row)) m |= std::uint64_t(1) << row;
    return m;
}

inline bool bit(int row, int i) { return (row >> i) & 1; }

} // namespace

// Level r adds digit_r * X into a running window U of k+1 bits:
//
//   T = U + P* + c - [r>0]*2^(k-1) - [rebias]*2^k
//
// where P* + c - 2^(k+1) equals digit*X exactly (P* is the k+2 bit multiple
// pattern, complemented when the digit is negative, with its top bit flipped
// to make the sign weight positive; c is the digit's sign bit, fed in as the
// chain carry-in). The 2^(k-1) term removes the bias the previous level left
// in the window, so after the last level a single 2^(k+1) remains; "rebias"
// (signed X with unsigned Y only) moves it down one bit so the result still
// fits in k + y.size() output bits. The subtractions are folded into the top
// three pattern bits mod 2^(k+2); the chain's carry-out is then a wrap
// artifact and is discarded, except at level 0 where it is the genuine
// overflow of the seeded addend and rides along as the window's top bit.
//
// Digit overlap keeps every T inside k+2 bits: a negative digit forces the
// next digit's low recoding bit high, so deficits never accumulate. The two
// low bits of T are final product bits; T >> 2 is the next window.
std::vector<Signal> emitBoothArray(Netlist& net,
                                   const std::vector<Signal>& x,
                                   const std::vector<Signal>& y,
                                   const std::vector<Signal>& d,
                                   int levels, bool xSigned, bool ySigned,
                                   int& offsetExp) {
    int k = static_cast<int>(x.size());
    int h = ySigned ? 2 * levels : 2 * levels - 1;
    if (k < 2) throw std::invalid_argument("multiplicand needs at least 2 bits");
    if (levels < 1) throw std::invalid_argument("at least one level");
    if (static_cast<int>(y.size()) != h)
        throw std::invalid_argument("multiplier width must match the level count");
    if (!d.empty() && static_cast<int>(d.size()) != k)
        throw std::invalid_argument("addend is k bits");
    if (!d.empty() && xSigned && !ySigned)
        throw std::invalid_argument("no addend headroom for signed X with unsigned Y");

    Signal zero = net.constSig(false);
    auto ybit = [&](int i) { return (i < 0 || i >= static_cast<int>(y.size())) ? zero : y[i]; };

    std::vector<Signal> u(k + 1, zero);
    if (!d.empty()) for (int j = 0; j < k; ++j) u[j] = d[j];

    std::vector<Signal> out;
    for (int r = 0; r < levels; ++r) {
        Signal y0 = ybit(2 * r - 1), y1 = ybit(2 * r), y2 = ybit(2 * r + 1);
        bool last = r == levels - 1;
        bool adjust = r > 0;
        bool rebias = last && xSigned && !ySigned;

        std::int32_t chain = net.newChain();
        Signal carry = y2; // the digit sign doubles as the +1 of the complement
        std::vector<Signal> t;

        // Multiple pattern bit j before sign handling, from the x bits a cell
        // sees. Beyond the top, X sign-extends (or 0 for unsigned X).
        auto ebit = [&](const BoothDigit& g, bool xj, bool xjm1) {
            return !g.zero && (g.shift ? xjm1 : xj);
        };

        for (int j = 0; j <= k - 2; ++j) {
            std::vector<Signal> in;
            in.push_back(u[j]);
            in.push_back(x[j]);
            if (j > 0) in.push_back(x[j - 1]);
            in.push_back(y2); in.push_back(y1); in.push_back(y0);
            int n = static_cast<int>(in.size());
            std::uint64_t m = maskOf(n, [&](int row) {
                BoothDigit g = boothEncode(bit(row, n - 3) * 4 + bit(row, n - 2) * 2 + bit(row, n - 1));
                bool p = ebit(g, bit(row, 1), j > 0 && bit(row, 2)) ^ g.negate;
                return p ^ bit(row, 0);
            });
            Signal sel = net.addLut(in, m);
            auto [s, c] = net.addCarry(chain, sel, u[j], carry);
            t.push_back(s);
            carry = c;
        }

        {
            // Position k-1: the bias cancellation lands here as a +1.
            std::vector<Signal> in = {u[k - 1], x[k - 1], x[k - 2], y2, y1, y0};
            std::uint64_t m = maskOf(6, [&](int row) {
                BoothDigit g = boothEncode(bit(row, 3) * 4 + bit(row, 4) * 2 + bit(row, 5));
                bool p = ebit(g, bit(row, 1), bit(row, 2)) ^ g.negate;
                if (adjust) p = !p;
                return p ^ bit(row, 0);
            });
            Signal sel = net.addLut(in, m);
            auto [s, c] = net.addCarry(chain, sel, u[k - 1], carry);
            t.push_back(s);
            carry = c;
        }

        {
            // Positions k and k+1 share one dual-output LUT; the second
            // function needs no window bit, so five shared inputs suffice.
            std::vector<Signal> in = {x[k - 1], x[k - 2], y2, y1, y0, u[k]};
            auto topBits = [&](int row) {
                BoothDigit g = boothEncode(bit(row, 2) * 4 + bit(row, 3) * 2 + bit(row, 4));
                bool xt = bit(row, 0), xt1 = bit(row, 1);
                bool ext = xSigned && xt; // sign extension of X (and 2X) past bit k-1
                bool pk = ebit(g, ext, xt) ^ g.negate;
                bool pk1 = (!g.zero && ext) ^ !g.negate; // top bit pre-flipped
                bool qk = pk, qk1 = pk1;
                if (adjust) {
                    bool gam = ebit(g, xt, xt1) ^ g.negate; // pattern bit k-1
                    qk = pk ^ 1 ^ gam;
                    qk1 = pk1 ^ 1 ^ (pk | gam);
                }
                if (rebias) {
                    bool dlt = qk;
                    qk = !qk;
                    qk1 = qk1 ^ 1 ^ dlt;
                }
                return std::pair<bool, bool>(qk, qk1);
            };
            std::uint64_t m6 = maskOf(6, [&](int row) { return topBits(row).first ^ bit(row, 5); });
            std::uint64_t m5 = maskOf(6, [&](int row) { return topBits(row).second; });
            auto [o6, o5] = net.addLut2(in, m6, m5);
            auto [sk, ck] = net.addCarry(chain, o6, u[k], carry);
            t.push_back(sk);
            auto [sk1, ck1] = net.addCarry(chain, o5, zero, ck);
            t.push_back(sk1);
            carry = ck1;
        }

        if (!last) {
            out.push_back(t[0]);
            out.push_back(t[1]);
            for (int j = 0; j + 2 <= k + 1; ++j) u[j] = t[j + 2];
            u[k] = r == 0 ? carry : zero;
        } else {
            for (int j = 0; j <= k; ++j) out.push_back(t[j]);
            if (ySigned) out.push_back(t[k + 1]);
        }
    }

    offsetExp = (xSigned || ySigned) ? k + h - 1 : -1;
    return out;
}

BoothArray buildBoothArray(const BoothArraySpec& spec) {
    int h = spec.ySigned ? 2 * spec.levels : 2 * spec.levels - 1;
    BoothArray a;
    a.net.init(spec.k, h, spec.mac ? spec.k : 0);
    std::vector<Signal> x, y, d;
    for (int i = 0; i < spec.k; ++i) x.push_back(a.net.xBit(i));
    for (int i = 0; i < h; ++i) y.push_back(a.net.yBit(i));
    if (spec.mac) for (int i = 0; i < spec.k; ++i) d.push_back(a.net.dBit(i));
    a.net.product = emitBoothArray(a.net, x, y, d, spec.levels,
                                   spec.xSigned, spec.ySigned, a.offsetExp);
    a.wOut = spec.k + h;
    return a;
}

} // namespace tilemul
