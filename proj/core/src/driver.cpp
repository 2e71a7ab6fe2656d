#include "tilemul/driver.hpp"

#include "tilemul/lp.hpp"
#include "tilemul/tilegen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tilemul {

namespace {

std::string fixed2(std::int64_t hundredths) {
    std::string s = std::to_string(hundredths / 100);
    s += '.';
    s += char('0' + (hundredths % 100) / 10);
    s += char('0' + hundredths % 10);
    return s;
}

std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string wideHex(Wide v) {
    if (v == 0) return "0x0";
    std::string digits;
    while (v) {
        digits += "0123456789abcdef"[int(v & 0xf)];
        v >>= 4;
    }
    std::reverse(digits.begin(), digits.end());
    return "0x" + digits;
}

const char* solverName(const RunConfig& config, bool lpOnly) {
    if (!config.solutionFile.empty()) return "import";
    return lpOnly ? "lp" : "exact";
}

std::string makeReport(const RunConfig& config, const RunResult& res, const char* solver) {
    std::ostringstream out;
    out << "design: " << config.wx << "x" << config.wy
        << (config.isSigned ? " signed" : " unsigned") << "\n";
    out << "dsp_budget: " << config.dspBudget << "\n";
    out << "booth_max_level: " << config.tiles.boothMaxLevel << "\n";
    out << "solver: " << solver << "\n";
    out << "status: " << res.status << "\n";
    if (res.feasible) {
        out << "objective_luts: " << fixed2(res.objectiveH) << "\n";
        out << "lut_exact: " << res.lutExact << "\n";
        out << "dsp_used: " << res.dspUsed << "\n";
        out << "logic_depth: " << res.logicDepth << "\n";
        out << "stages: " << res.stageCount << "\n";
        out << "tiles: " << res.tiles.size() << "\n";
        out << "optimal: " << int(res.optimal) << "\n";
        out << "verified: " << int(res.verified) << "\n";
    }
    out << "solve_s: " << fixed6(solveSeconds(res.nodes)) << "\n";
    out << "seed: " << config.seed << "\n";
    return out.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("short write to " + path);
}

void writeArtifacts(const RunConfig& config, const RunResult& res) {
    if (config.outPrefix.empty()) return;
    const std::string& p = config.outPrefix;
    if (config.wantReport) writeFile(p + ".report.txt", res.report);
    if (!res.hdl.empty()) writeFile(p + ".v", res.hdl);
    if (!res.svg.empty()) writeFile(p + ".svg", res.svg);
    if (!res.ascii.empty()) writeFile(p + ".tiling.txt", res.ascii);
    if (!res.lp.empty()) writeFile(p + ".lp", res.lp);
}

bool verifyProduct(const Netlist& net, const RunConfig& config, std::string& detail) {
    int wx = config.wx, wy = config.wy, P = wx + wy;
    Wide pmask = P >= 128 ? ~Wide(0) : (Wide(1) << P) - 1;
    Wide xmask = (wx >= 64 ? ~Wide(0) >> 64 : Wide((1ull << wx) - 1));
    Wide ymask = (wy >= 64 ? ~Wide(0) >> 64 : Wide((1ull << wy) - 1));

    auto sext = [](Wide v, int w) {
        __int128 u = __int128(v);
        if ((v >> (w - 1)) & 1) u -= __int128(1) << w;
        return u;
    };
    std::vector<Wide> xs, ys;
    auto flush = [&]() {
        if (xs.empty()) return true;
        auto got = simulate(net, xs, ys);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            __int128 sx = config.isSigned ? sext(xs[i], wx) : __int128(xs[i]);
            __int128 sy = config.isSigned ? sext(ys[i], wy) : __int128(ys[i]);
            Wide want = Wide(sx * sy) & pmask;
            if (got[i] != want) {
                detail = "x=" + wideHex(xs[i]) + " y=" + wideHex(ys[i]) + " got " +
                         wideHex(got[i]) + " want " + wideHex(want);
                return false;
            }
        }
        xs.clear();
        ys.clear();
        return true;
    };
    auto push = [&](Wide x, Wide y) {
        xs.push_back(x & xmask);
        ys.push_back(y & ymask);
        return xs.size() < 64 || flush();
    };

    if (wx <= 8 && wy <= 8) {
        for (Wide x = 0; x <= xmask; ++x)
            for (Wide y = 0; y <= ymask; ++y)
                if (!push(x, y)) return false;
        return flush();
    }
    // corners first: all zeros, all ones, lone sign bit, max positive
    const Wide xc[4] = {0, xmask, Wide(1) << (wx - 1), xmask >> 1};
    const Wide yc[4] = {0, ymask, Wide(1) << (wy - 1), ymask >> 1};
    for (Wide x : xc)
        for (Wide y : yc)
            if (!push(x, y)) return false;
    std::mt19937_64 rng(config.seed);
    for (int i = 16; i < 10'000; ++i)
        if (!push(rng(), rng())) return false;
    return flush();
}

} // namespace

RunResult run(const RunConfig& config) {
    RunResult res;
    try {
        if (config.wx < 1 || config.wx > 64 || config.wy < 1 || config.wy > 64)
            throw std::invalid_argument("operand widths must be in [1,64]");
        if (config.dspBudget < 0) throw std::invalid_argument("negative DSP budget");
        if (config.timeLimit <= 0) throw std::invalid_argument("time limit must be positive");

        Board board{config.wx, config.wy, config.isSigned, config.dspBudget};
        auto kinds = buildTileSet(config.tiles);
        auto set = enumeratePlacements(board, kinds);

        bool lpOnly = config.solutionFile.empty() &&
                      (config.solver == SolverMode::lp ||
                       (config.solver == SolverMode::automatic && set.cells() > 256 &&
                        !config.forceExact));
        const char* solver = solverName(config, lpOnly);

        if (config.wantLp || lpOnly) {
            std::ostringstream lp;
            exportLp(set, lp);
            res.lp = lp.str();
        }
        if (lpOnly) {
            if (config.solver != SolverMode::lp)
                res.warning = "board exceeds the exact-solver cutoff of 256 cells; exported "
                              "the covering LP instead (force the exact solver or import a "
                              "solution to build the netlist)";
            res.status = "lp_exported";
            res.ok = true;
            res.report = makeReport(config, res, solver);
            writeArtifacts(config, res);
            return res;
        }

        SolveResult sol;
        if (!config.solutionFile.empty()) {
            std::ifstream in(config.solutionFile);
            if (!in) throw std::runtime_error("cannot open solution file: " + config.solutionFile);
            sol = importSolution(set, in);
        } else {
            SolveOptions opt;
            opt.nodeBudget = nodeBudgetFor(config.timeLimit);
            opt.warmStart = config.warmStart;
            sol = solveExact(set, opt);
        }

        res.nodes = sol.nodes;
        res.feasible = sol.feasible;
        res.optimal = sol.optimal;
        if (!sol.feasible) {
            res.status = "infeasible";
            res.error = "no exact cover within the configured tile set and budget";
            res.report = makeReport(config, res, solver);
            writeArtifacts(config, res);
            return res;
        }
        res.objectiveH = sol.costH;
        res.dspUsed = sol.dspUsed;
        res.tiles.reserve(sol.chosen.size());
        for (int p : sol.chosen) res.tiles.push_back(placedTile(set, p));

        Netlist net(config.wx, config.wy);
        auto gen = emitTiles(net, set, sol.chosen);
        auto heap = buildHeap(net, gen);

        std::vector<Compressor> lib;
        if (config.compressorFile.empty()) {
            lib = defaultCompressors();
        } else {
            std::ifstream in(config.compressorFile);
            if (!in)
                throw std::runtime_error("cannot open compressor library: " + config.compressorFile);
            lib = parseCompressors(in);
        }
        // The final adder style is an outcome, not a preference: a ternary
        // carry-propagate target of height 3 often absorbs a whole compressor
        // stage, while the binary target passes through one less LUT level at
        // the end. Build against both targets and keep the plan with fewer
        // stages, then the shallower net, then the smaller one, unless the
        // config pins the ternary style outright.
        auto sched = schedule(heap, lib, {config.scheduleMode, true});
        Netlist built = net;
        built.product = applySchedule(built, heap, sched, lib);
        auto diag = diagnose(built);
        if (!config.ternaryFinal) {
            auto alt = schedule(heap, lib, {config.scheduleMode, false});
            Netlist altNet = net;
            altNet.product = applySchedule(altNet, heap, alt, lib);
            auto altDiag = diagnose(altNet);
            auto key = [](const CompressorSchedule& s, const Diagnostics& d) {
                return std::make_tuple(s.stageCount(), d.logicDepth, d.lutCount);
            };
            if (key(alt, altDiag) <= key(sched, diag)) {
                sched = std::move(alt);
                built = std::move(altNet);
                diag = altDiag;
            }
        }
        net = std::move(built);
        res.stageCount = sched.stageCount();
        res.lutExact = diag.lutCount;
        res.logicDepth = diag.logicDepth;
        if (diag.dspCount != sol.dspUsed)
            throw std::logic_error("solver and netlist disagree on the DSP count");

        std::string detail;
        res.verified = verifyProduct(net, config, detail);
        if (!res.verified) {
            res.status = "verify_failed";
            res.error = "self-verification failed: " + detail;
            res.report = makeReport(config, res, solver);
            writeArtifacts(config, res);
            return res;
        }

        if (config.wantHdl) res.hdl = emitHdl(net, config.moduleName);
        if (config.wantSvg) res.svg = renderTiling(res.tiles, board, RenderFormat::svg);
        if (config.wantAscii) res.ascii = renderTiling(res.tiles, board, RenderFormat::ascii);
        res.status = "ok";
        res.ok = true;
        res.report = makeReport(config, res, solver);
        writeArtifacts(config, res);
    } catch (const std::exception& e) {
        res.ok = false;
        res.status = "error";
        res.error = e.what();
    }
    return res;
}

SweepOutcome sweep(const std::vector<RunConfig>& grid) {
    SweepOutcome out;
    std::ostringstream csv;
    csv << "wx,wy,signed,dsp,booth_level,lut_model,lut_exact,depth,stages,optimal,solve_s\n";
    std::tuple<int, int, bool, int> chainKey{-1, -1, false, -1};
    std::vector<PlacedTile> chainTiles;
    for (const RunConfig& base : grid) {
        RunConfig config = base;
        std::tuple<int, int, bool, int> key{config.wx, config.wy, config.isSigned,
                                            config.dspBudget};
        if (key == chainKey && config.warmStart.empty()) config.warmStart = chainTiles;
        RunResult r = run(config);
        csv << config.wx << ',' << config.wy << ',' << int(config.isSigned) << ','
            << config.dspBudget << ',' << config.tiles.boothMaxLevel << ',';
        if (r.ok && r.status == "ok") {
            csv << fixed2(r.objectiveH) << ',' << r.lutExact << ',' << r.logicDepth << ','
                << r.stageCount << ',' << int(r.optimal) << ','
                << fixed6(solveSeconds(r.nodes));
            chainKey = key;
            chainTiles = r.tiles;
        } else {
            csv << ",,,,,";
            std::ostringstream what;
            what << config.wx << "x" << config.wy << (config.isSigned ? "s" : "u") << " dsp"
                 << config.dspBudget << " booth" << config.tiles.boothMaxLevel << ": "
                 << (r.error.empty() ? r.status : r.error);
            out.errors.push_back(what.str());
            chainKey = {-1, -1, false, -1};
            chainTiles.clear();
        }
        csv << '\n';
    }
    out.csv = csv.str();
    return out;
}

namespace {

bool parseBool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

int parseIntValue(const std::string& v) {
    std::size_t used = 0;
    int r = std::stoi(v, &used);
    if (used != v.size()) throw std::invalid_argument("expected an integer, got '" + v + "'");
    return r;
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

void applyConfigKey(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "wx") config.wx = parseIntValue(value);
    else if (key == "wy") config.wy = parseIntValue(value);
    else if (key == "signed") config.isSigned = parseBool(value);
    else if (key == "dsp") config.dspBudget = parseIntValue(value);
    else if (key == "booth_max_level") config.tiles.boothMaxLevel = parseIntValue(value);
    else if (key == "tile_1x1") config.tiles.lut1x1 = parseBool(value);
    else if (key == "tile_1x2") config.tiles.lut1x2 = parseBool(value);
    else if (key == "tile_2x3") config.tiles.lut2x3 = parseBool(value);
    else if (key == "tile_3x3") config.tiles.lut3x3 = parseBool(value);
    else if (key == "tile_2xk") config.tiles.lut2xk = parseBool(value);
    else if (key == "tile_dsp") config.tiles.dsp = parseBool(value);
    else if (key == "solver") {
        if (value == "auto") config.solver = SolverMode::automatic;
        else if (value == "exact") config.solver = SolverMode::exact;
        else if (value == "lp") config.solver = SolverMode::lp;
        else throw std::invalid_argument("solver must be auto, exact or lp");
    } else if (key == "force_exact") config.forceExact = parseBool(value);
    else if (key == "time_limit") {
        std::size_t used = 0;
        config.timeLimit = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("bad time_limit '" + value + "'");
    } else if (key == "schedule") {
        if (value == "heuristic") config.scheduleMode = ScheduleMode::heuristic;
        else if (value == "exact_stages") config.scheduleMode = ScheduleMode::exactStages;
        else throw std::invalid_argument("schedule must be heuristic or exact_stages");
    } else if (key == "ternary_final") config.ternaryFinal = parseBool(value);
    else if (key == "seed") config.seed = std::stoull(value);
    else if (key == "hdl") config.wantHdl = parseBool(value);
    else if (key == "svg") config.wantSvg = parseBool(value);
    else if (key == "ascii") config.wantAscii = parseBool(value);
    else if (key == "report") config.wantReport = parseBool(value);
    else if (key == "lp") config.wantLp = parseBool(value);
    else if (key == "out") config.outPrefix = value;
    else if (key == "module") config.moduleName = value;
    else if (key == "compressors") config.compressorFile = value;
    else if (key == "solution") config.solutionFile = value;
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

RunConfig loadConfig(std::istream& in) {
    RunConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string text = trimmed(line);
        if (text.empty()) continue;
        std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key = value");
        try {
            applyConfigKey(config, trimmed(text.substr(0, eq)), trimmed(text.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return config;
}

std::string formatConfig(const RunConfig& c) {
    std::ostringstream out;
    out << "wx = " << c.wx << "\n";
    out << "wy = " << c.wy << "\n";
    out << "signed = " << int(c.isSigned) << "\n";
    out << "dsp = " << c.dspBudget << "\n";
    out << "booth_max_level = " << c.tiles.boothMaxLevel << "\n";
    out << "tile_1x1 = " << int(c.tiles.lut1x1) << "\n";
    out << "tile_1x2 = " << int(c.tiles.lut1x2) << "\n";
    out << "tile_2x3 = " << int(c.tiles.lut2x3) << "\n";
    out << "tile_3x3 = " << int(c.tiles.lut3x3) << "\n";
    out << "tile_2xk = " << int(c.tiles.lut2xk) << "\n";
    out << "tile_dsp = " << int(c.tiles.dsp) << "\n";
    out << "solver = "
        << (c.solver == SolverMode::automatic ? "auto"
                                              : c.solver == SolverMode::exact ? "exact" : "lp")
        << "\n";
    out << "force_exact = " << int(c.forceExact) << "\n";
    out << "time_limit = " << fixed6(c.timeLimit) << "\n";
    out << "schedule = "
        << (c.scheduleMode == ScheduleMode::heuristic ? "heuristic" : "exact_stages") << "\n";
    out << "ternary_final = " << int(c.ternaryFinal) << "\n";
    out << "seed = " << c.seed << "\n";
    out << "hdl = " << int(c.wantHdl) << "\n";
    out << "svg = " << int(c.wantSvg) << "\n";
    out << "ascii = " << int(c.wantAscii) << "\n";
    out << "report = " << int(c.wantReport) << "\n";
    out << "lp = " << int(c.wantLp) << "\n";
    if (!c.outPrefix.empty()) out << "out = " << c.outPrefix << "\n";
    if (c.moduleName != "tilemul") out << "module = " << c.moduleName << "\n";
    if (!c.compressorFile.empty()) out << "compressors = " << c.compressorFile << "\n";
    if (!c.solutionFile.empty()) out << "solution = " << c.solutionFile << "\n";
    return out.str();
}

} // namespace tilemul
