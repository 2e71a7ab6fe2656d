#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "tilemul/tile.hpp"

using namespace tilemul;

TEST_SUITE_BEGIN("tile");

namespace {

CatalogEntry entry(TileFamily f, int k = 0, int levels = 0, bool sgn = false,
                   bool transposed = false) {
    return catalogEntry({f, k, levels, sgn, transposed});
}

bool near(const Rational& got, double want, double tol = 0.005) {
    return std::fabs(got.toDouble() - want) <= tol;
}

} // namespace

TEST_CASE("fixed tile rows carry the stock characteristics") {
    auto e = entry(TileFamily::Lut1x1);
    CHECK(e.shape.area() == 1);
    CHECK(e.cost.lutMult == Rational(1));
    CHECK(e.cost.lutTotal == Rational::hundredths(165));
    CHECK(e.cost.wOut == 1);
    CHECK(e.cost.dsp == 0);

    e = entry(TileFamily::Lut1x2);
    CHECK(e.shape.area() == 2);
    CHECK(e.cost.lutMult == Rational(1));
    CHECK(e.cost.lutTotal == Rational::hundredths(230));
    CHECK(e.cost.wOut == 2);

    e = entry(TileFamily::Lut2x3);
    CHECK(e.shape.area() == 6);
    CHECK(e.cost.lutMult == Rational(3));
    CHECK(e.cost.lutTotal == Rational::hundredths(625));
    CHECK(e.cost.wOut == 5);

    e = entry(TileFamily::Lut3x3);
    CHECK(e.shape.area() == 9);
    CHECK(e.cost.lutMult == Rational(5));
    CHECK(e.cost.lutTotal == Rational::hundredths(890));
    CHECK(e.cost.wOut == 6);

    e = entry(TileFamily::Dsp24x17);
    CHECK(e.shape.area() == 408);
    CHECK(e.cost.lutMult == Rational(0));
    CHECK(e.cost.lutTotal == Rational::hundredths(2665));
    CHECK(e.cost.wOut == 41);
    CHECK(e.cost.dsp == 1);
}

TEST_CASE("carry chain row scales as k+1 LUTs and k+2 outputs") {
    for (int k = 3; k <= 12; ++k) {
        auto e = entry(TileFamily::Lut2xK, k);
        CHECK(e.shape.width == k);
        CHECK(e.shape.height == 2);
        CHECK(e.cost.lutMult == Rational(k + 1));
        CHECK(e.cost.lutTotal == Rational::hundredths(165 * k + 230));
        CHECK(e.cost.wOut == k + 2);
        CHECK(e.cost.efficiency == Rational(2 * k) / e.cost.lutTotal);
    }
}

TEST_CASE("recoded array rows scale as levels*(k+1) LUTs") {
    // unsigned height 2L-1; per column: L(k+1) LUTs, 365+100L per-k cost slope
    struct Row { int levels, height, baseH, slopeH; };
    const Row rows[] = {
        {3, 5, 625, 365},
        {4, 7, 855, 465},
        {5, 9, 1085, 565},
        {6, 11, 1315, 665},
    };
    for (const Row& r : rows) {
        for (int k : {2, 4, 8, 16}) {
            auto e = entry(TileFamily::BoothArray, k, r.levels);
            CHECK(e.shape.width == k);
            CHECK(e.shape.height == r.height);
            CHECK(e.cost.lutMult == Rational(r.levels) * Rational(k + 1));
            CHECK(e.cost.lutTotal == Rational::hundredths(r.baseH + std::int64_t(r.slopeH) * k));
            CHECK(e.cost.wOut == k + r.height);
            CHECK(e.cost.efficiency ==
                  Rational(r.height * k) / e.cost.lutTotal);
        }
    }
}

TEST_CASE("signed array variant adds one row and one output bit") {
    auto u = entry(TileFamily::BoothArray, 6, 3, false);
    auto s = entry(TileFamily::BoothArray, 6, 3, true);
    CHECK(u.shape.height == 5);
    CHECK(s.shape.height == 6);
    CHECK(s.cost.lutMult == u.cost.lutMult);
    CHECK(s.cost.wOut == u.cost.wOut + 1);
}

TEST_CASE("transposed kinds swap the shape, nothing else") {
    auto a = entry(TileFamily::Lut2x3);
    auto b = entry(TileFamily::Lut2x3, 0, 0, false, true);
    CHECK(a.shape.width == b.shape.height);
    CHECK(a.shape.height == b.shape.width);
    CHECK(a.cost.lutTotal == b.cost.lutTotal);
    CHECK(a.cost.wOut == b.cost.wOut);

    auto c = entry(TileFamily::BoothArray, 9, 4, false, true);
    CHECK(c.shape.width == 7);
    CHECK(c.shape.height == 9);
}

TEST_CASE("efficiency limits of the parametric families") {
    CHECK(near(efficiencyLimit({TileFamily::Lut2xK}), 1.21));
    CHECK(near(efficiencyLimit({TileFamily::BoothArray, 0, 3}), 1.37));
    CHECK(near(efficiencyLimit({TileFamily::BoothArray, 0, 4}), 1.51));
    CHECK(near(efficiencyLimit({TileFamily::BoothArray, 0, 5}), 1.59));
    CHECK(near(efficiencyLimit({TileFamily::BoothArray, 0, 6}), 1.65));
    CHECK_THROWS_AS(efficiencyLimit({TileFamily::Lut1x1}), std::invalid_argument);
}

TEST_CASE("published efficiency figures round from the cost model almost everywhere") {
    // The 1x1 and DSP rows are the two documented exceptions: their published
    // figures (0.625 and 15.30) differ from area/lutTotal (0.606..., 15.3096)
    // by more than print rounding, so the catalog carries both values.
    CHECK(entry(TileFamily::Lut1x1).tableEfficiency == Rational(5, 8));
    CHECK(entry(TileFamily::Lut1x1).cost.efficiency == Rational(100, 165));
    CHECK(entry(TileFamily::Dsp24x17).tableEfficiency == Rational(153, 10));
    CHECK(entry(TileFamily::Dsp24x17).cost.efficiency == Rational(40800, 2665));

    CHECK(near(entry(TileFamily::Lut1x2).tableEfficiency, 0.87));
    CHECK(near(entry(TileFamily::Lut2x3).tableEfficiency, 0.96));
    CHECK(near(entry(TileFamily::Lut3x3).tableEfficiency, 1.011));
    for (TileFamily f : {TileFamily::Lut1x2, TileFamily::Lut2x3, TileFamily::Lut3x3})
        CHECK(std::fabs(entry(f).tableEfficiency.toDouble() -
                        entry(f).cost.efficiency.toDouble()) <= 0.005);
}

TEST_CASE("parametric kinds insist on a resolved size") {
    CHECK_THROWS_AS(entry(TileFamily::Lut2xK, 0), std::invalid_argument);
    CHECK_THROWS_AS(entry(TileFamily::Lut2xK, 2), std::invalid_argument);
    CHECK_THROWS_AS(entry(TileFamily::BoothArray, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(entry(TileFamily::BoothArray, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(entry(TileFamily::BoothArray, 4, 7), std::invalid_argument);
}

TEST_CASE("tile set listing is deterministic and honors the toggles") {
    TileSetConfig cfg;
    auto kinds = buildTileSet(cfg);
    // 1 + 2 + 2 + 1 + 2 fixed/row kinds, 4 levels x {u,s} x {plain,t} arrays, 2 DSP
    CHECK(kinds.size() == 1 + 2 + 2 + 1 + 2 + 2 * 2 * 2 + 2);
    CHECK(kinds == buildTileSet(cfg));
    CHECK(kinds.front().family == TileFamily::Lut1x1);

    cfg.boothMaxLevel = 0;
    cfg.dsp = false;
    auto lutOnly = buildTileSet(cfg);
    CHECK(lutOnly.size() == 8);
    for (const TileKind& k : lutOnly) {
        CHECK(k.family != TileFamily::BoothArray);
        CHECK(k.family != TileFamily::Dsp24x17);
    }

    cfg.boothMaxLevel = 6;
    auto deep = buildTileSet(cfg);
    CHECK(deep.size() == 8 + 4 * 4);

    TileSetConfig none;
    none.lut1x1 = none.lut1x2 = none.lut2x3 = none.lut3x3 = none.lut2xk = false;
    none.boothMaxLevel = 0;
    none.dsp = false;
    CHECK_THROWS_AS(buildTileSet(none), std::invalid_argument);

    TileSetConfig bad;
    bad.boothMaxLevel = 2;
    CHECK_THROWS_AS(buildTileSet(bad), std::invalid_argument);
}

TEST_CASE("kind names are stable identifiers") {
    CHECK(kindName({TileFamily::Lut1x1}) == "lut1x1");
    CHECK(kindName({TileFamily::Lut1x2, 0, 0, false, true}) == "lut1x2t");
    CHECK(kindName({TileFamily::Lut2xK, 5}) == "lut2xk5");
    CHECK(kindName({TileFamily::BoothArray, 8, 3}) == "booth3ux8");
    CHECK(kindName({TileFamily::BoothArray, 8, 4, true, true}) == "booth4sx8t");
    CHECK(kindName({TileFamily::Dsp24x17}) == "dsp24x17");
}

TEST_SUITE_END();
