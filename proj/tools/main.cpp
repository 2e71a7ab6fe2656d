// Command line front end: `generate` builds one multiplier, `sweep` runs a
// size-by-policy grid and prints CSV. Every option is also a config file key;
// flags given on the command line override the file.

#include "CLI11.hpp"

#include "tilemul/driver.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

using namespace tilemul;

namespace {

struct Overrides {
    std::vector<std::pair<std::string, std::string>> items;
    void set(const std::string& key, const std::string& value) { items.emplace_back(key, value); }
};

void addConfigOptions(CLI::App* cmd, Overrides& ov) {
    auto opt = [cmd, &ov](const char* flag, const char* key, const char* desc) {
        cmd->add_option_function<std::string>(
            flag, [key, &ov](const std::string& v) { ov.set(key, v); }, desc);
    };
    auto flagOn = [cmd, &ov](const char* flag, const char* key, const char* value,
                             const char* desc) {
        cmd->add_flag_function(
            flag, [key, value, &ov](std::int64_t) { ov.set(key, value); }, desc);
    };
    opt("--wx", "wx", "multiplicand width in bits");
    opt("--wy", "wy", "multiplier width in bits");
    flagOn("--signed", "signed", "1", "two's-complement operands");
    flagOn("--unsigned", "signed", "0", "unsigned operands (default)");
    opt("--dsp", "dsp", "DSP block budget");
    opt("--booth-max-level", "booth_max_level",
        "deepest Booth array allowed, 0 disables Booth tiles");
    flagOn("--no-tile-1x1", "tile_1x1", "0", "drop the 1x1 tile");
    flagOn("--no-tile-1x2", "tile_1x2", "0", "drop the 1x2 tile");
    flagOn("--no-tile-2x3", "tile_2x3", "0", "drop the 2x3 tile");
    flagOn("--no-tile-3x3", "tile_3x3", "0", "drop the 3x3 tile");
    flagOn("--no-tile-2xk", "tile_2xk", "0", "drop the 2xk row tiles");
    flagOn("--no-tile-dsp", "tile_dsp", "0", "drop the DSP tile family");
    opt("--solver", "solver", "auto, exact or lp");
    flagOn("--force-exact", "force_exact", "1", "run the exact solver past the size cutoff");
    opt("--time-limit", "time_limit", "solver limit in seconds (deterministic node budget)");
    opt("--schedule", "schedule", "compressor scheduling: heuristic or exact_stages");
    flagOn("--ternary-final", "ternary_final", "1", "stop at three rows, ternary final adder");
    opt("--seed", "seed", "seed for randomized self-verification");
    flagOn("--hdl", "hdl", "1", "emit structural HDL");
    flagOn("--svg", "svg", "1", "emit an SVG tiling diagram");
    flagOn("--ascii", "ascii", "1", "print an ASCII tiling diagram");
    flagOn("--no-report", "report", "0", "suppress the report block");
    flagOn("--lp", "lp", "1", "emit the covering LP");
    opt("--out", "out", "artifact path prefix (<prefix>.v, .svg, .report.txt, ...)");
    opt("--module", "module", "HDL module name");
    opt("--compressors", "compressors", "compressor library file");
    opt("--solution", "solution", "LP solution file to import");
}

RunConfig configFrom(const std::string& configPath, const Overrides& ov) {
    RunConfig config;
    if (!configPath.empty()) {
        std::ifstream in(configPath);
        if (!in) throw std::runtime_error("cannot open config file: " + configPath);
        config = loadConfig(in);
    }
    for (const auto& [key, value] : ov.items) applyConfigKey(config, key, value);
    return config;
}

int finishRun(const RunConfig& config, const RunResult& res) {
    if (!res.warning.empty()) std::cerr << "warning: " << res.warning << "\n";
    if (config.outPrefix.empty()) {
        if (config.wantReport) std::cout << res.report;
        if (!res.ascii.empty()) std::cout << res.ascii;
        if (!res.hdl.empty()) std::cout << res.hdl;
        if (!res.svg.empty()) std::cout << res.svg;
        if (!res.lp.empty()) std::cout << res.lp;
    } else if (!res.ascii.empty()) {
        std::cout << res.ascii;
    }
    if (!res.ok) {
        std::cerr << "error: " << res.error << "\n";
        return 1;
    }
    return 0;
}

int runGenerate(const std::string& configPath, const Overrides& ov) {
    RunConfig config = configFrom(configPath, ov);
    return finishRun(config, run(config));
}

int runSweep(const std::string& configPath, const Overrides& ov,
             const std::vector<int>& sizes, const std::vector<std::string>& levels,
             const std::string& csvPath) {
    RunConfig base = configFrom(configPath, ov);
    std::vector<RunConfig> grid;
    for (int size : sizes)
        for (const std::string& lv : levels) {
            RunConfig c = base;
            c.wx = c.wy = size;
            c.tiles.boothMaxLevel = lv == "none" ? 0 : std::stoi(lv);
            c.wantHdl = c.wantSvg = c.wantAscii = c.wantLp = false;
            c.outPrefix.clear();
            grid.push_back(c);
        }
    SweepOutcome out = sweep(grid);
    if (csvPath.empty()) {
        std::cout << out.csv;
    } else {
        std::ofstream f(csvPath, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + csvPath);
        f << out.csv;
    }
    for (const std::string& e : out.errors) std::cerr << "error: " << e << "\n";
    return out.errors.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplier generator for LUT/carry-chain fabrics"};
    app.require_subcommand(1);

    std::string genConfig, sweepConfig, csvPath;
    Overrides genOv, sweepOv;
    std::vector<int> sizes{8, 16, 24, 32};
    std::vector<std::string> levels{"none", "3", "4"};

    CLI::App* gen = app.add_subcommand("generate", "tile one board and emit a verified netlist");
    gen->add_option("--config", genConfig, "config file, flags override it");
    addConfigOptions(gen, genOv);

    CLI::App* sw = app.add_subcommand("sweep", "run a size-by-Booth-level grid, print CSV");
    sw->add_option("--config", sweepConfig, "base config file, flags override it");
    sw->add_option("--sizes", sizes, "square sizes to run")->delimiter(',');
    sw->add_option("--levels", levels, "Booth policies: none or a max level")->delimiter(',');
    sw->add_option("--csv", csvPath, "write CSV here instead of stdout");
    addConfigOptions(sw, sweepOv);

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return runGenerate(genConfig, genOv);
        return runSweep(sweepConfig, sweepOv, sizes, levels, csvPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
