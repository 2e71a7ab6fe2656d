#include "tilemul/tile.hpp"

#include <stdexcept>

namespace tilemul {

namespace {

const Rational kCompressPerBit = Rational::hundredths(65);

TileShape orient(int w, int h, bool transposed) {
    return transposed ? TileShape{h, w} : TileShape{w, h};
}

CatalogEntry makeEntry(const TileKind& kind, TileShape shape, Rational lutMult, int wOut, int dsp,
                       Rational tableEfficiency = Rational(0)) {
    CatalogEntry e;
    e.kind = kind;
    e.shape = shape;
    e.cost.lutMult = lutMult;
    e.cost.lutTotal = lutMult + kCompressPerBit * Rational(wOut);
    e.cost.wOut = wOut;
    e.cost.dsp = dsp;
    e.cost.efficiency = Rational(shape.area()) / e.cost.lutTotal;
    e.tableEfficiency = (tableEfficiency == Rational(0)) ? e.cost.efficiency : tableEfficiency;
    return e;
}

} // namespace

CatalogEntry catalogEntry(const TileKind& kind) {
    switch (kind.family) {
    case TileFamily::Lut1x1:
        return makeEntry(kind, {1, 1}, 1, 1, 0, Rational(5, 8));
    case TileFamily::Lut1x2:
        return makeEntry(kind, orient(1, 2, kind.transposed), 1, 2, 0, Rational(87, 100));
    case TileFamily::Lut2x3:
        return makeEntry(kind, orient(2, 3, kind.transposed), 3, 5, 0, Rational(24, 25));
    case TileFamily::Lut3x3:
        return makeEntry(kind, {3, 3}, 5, 6, 0, Rational(1011, 1000));
    case TileFamily::Lut2xK: {
        if (kind.k < 3) throw std::invalid_argument("Lut2xK needs k >= 3");
        return makeEntry(kind, orient(kind.k, 2, kind.transposed), kind.k + 1, kind.k + 2, 0);
    }
    case TileFamily::BoothArray: {
        if (kind.levels < 3 || kind.levels > 6)
            throw std::invalid_argument("BoothArray needs 3 <= levels <= 6");
        if (kind.k < 2) throw std::invalid_argument("BoothArray needs k >= 2");
        int height = kind.signedTile ? 2 * kind.levels : 2 * kind.levels - 1;
        int wOut = kind.k + height;
        Rational lutMult = Rational(kind.levels) * Rational(kind.k + 1);
        return makeEntry(kind, orient(kind.k, height, kind.transposed), lutMult, wOut, 0);
    }
    case TileFamily::Dsp24x17:
        return makeEntry(kind, orient(24, 17, kind.transposed), 0, 41, 1, Rational(153, 10));
    }
    throw std::invalid_argument("unknown tile family");
}

Rational efficiencyLimit(const TileKind& kind) {
    // E(k) = h*k / (a + b*k) -> h/b with b the per-k slope of lutTotal.
    switch (kind.family) {
    case TileFamily::Lut2xK:
        return Rational(2) / Rational::hundredths(165);
    case TileFamily::BoothArray: {
        if (kind.levels < 3 || kind.levels > 6)
            throw std::invalid_argument("BoothArray needs 3 <= levels <= 6");
        int height = kind.signedTile ? 2 * kind.levels : 2 * kind.levels - 1;
        return Rational(height) / (Rational(kind.levels) + Rational::hundredths(65));
    }
    default:
        throw std::invalid_argument("efficiencyLimit is defined for parametric tiles only");
    }
}

std::vector<TileKind> buildTileSet(const TileSetConfig& config) {
    if (config.boothMaxLevel != 0 && (config.boothMaxLevel < 3 || config.boothMaxLevel > 6))
        throw std::invalid_argument("boothMaxLevel must be 0 or in [3,6]");

    std::vector<TileKind> kinds;
    auto add = [&](TileKind k) { kinds.push_back(k); };

    if (config.lut1x1) add({TileFamily::Lut1x1});
    if (config.lut1x2) {
        add({TileFamily::Lut1x2});
        add({TileFamily::Lut1x2, 0, 0, false, true});
    }
    if (config.lut2x3) {
        add({TileFamily::Lut2x3});
        add({TileFamily::Lut2x3, 0, 0, false, true});
    }
    if (config.lut3x3) add({TileFamily::Lut3x3});
    if (config.lut2xk) {
        add({TileFamily::Lut2xK});
        add({TileFamily::Lut2xK, 0, 0, false, true});
    }
    for (int level = 3; level <= config.boothMaxLevel; ++level) {
        for (bool sgn : {false, true}) {
            add({TileFamily::BoothArray, 0, level, sgn, false});
            add({TileFamily::BoothArray, 0, level, sgn, true});
        }
    }
    if (config.dsp) {
        add({TileFamily::Dsp24x17});
        add({TileFamily::Dsp24x17, 0, 0, false, true});
    }

    if (kinds.empty()) throw std::invalid_argument("tile set configuration admits no tiles");
    return kinds;
}

std::string kindName(const TileKind& kind) {
    std::string base;
    switch (kind.family) {
    case TileFamily::Lut1x1: base = "lut1x1"; break;
    case TileFamily::Lut1x2: base = "lut1x2"; break;
    case TileFamily::Lut2x3: base = "lut2x3"; break;
    case TileFamily::Lut3x3: base = "lut3x3"; break;
    case TileFamily::Lut2xK: base = "lut2xk" + (kind.k ? std::to_string(kind.k) : std::string()); break;
    case TileFamily::BoothArray:
        base = "booth" + std::to_string(kind.levels) + (kind.signedTile ? "s" : "u") +
               (kind.k ? "x" + std::to_string(kind.k) : std::string());
        break;
    case TileFamily::Dsp24x17: base = "dsp24x17"; break;
    }
    if (kind.transposed) base += "t";
    return base;
}

} // namespace tilemul
