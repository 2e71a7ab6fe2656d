#include "tilemul/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tilemul {

namespace {

// Keeps LP lines comfortably below the format's historical 255-char cap.
class LineWrapper {
public:
    LineWrapper(std::ostream& out, std::string indent) : out_(out), indent_(std::move(indent)) {}
    void add(const std::string& term) {
        if (col_ > 0 && col_ + term.size() + 1 > 200) {
            out_ << "\n" << indent_;
            col_ = static_cast<int>(indent_.size());
        } else if (col_ > 0) {
            out_ << " ";
            ++col_;
        }
        out_ << term;
        col_ += static_cast<int>(term.size());
    }
    void finish(const std::string& tail) {
        out_ << " " << tail << "\n";
        col_ = 0;
    }

private:
    std::ostream& out_;
    std::string indent_;
    int col_ = 0;
};

} // namespace

void exportLp(const PlacementSet& set, std::ostream& out) {
    const Board& b = set.board;
    out << "\\ exact cover of a " << b.wx << "x" << b.wy << (b.isSigned ? " signed" : "")
        << " board, " << set.placements.size() << " placements\n";
    out << "Minimize\n";
    {
        LineWrapper w(out, "      ");
        w.add(" obj:");
        for (std::size_t p = 0; p < set.placements.size(); ++p) {
            Rational cost = Rational::hundredths(set.entryCostH[set.placements[p].entry]);
            std::string term = cost.toDecimal(2) + " p" + std::to_string(p);
            if (p > 0) term = "+ " + term;
            w.add(term);
        }
        out << "\n";
    }
    out << "Subject To\n";

    std::vector<std::vector<int>> covering(set.cells());
    for (int p = 0; p < static_cast<int>(set.placements.size()); ++p) {
        const Placement& pl = set.placements[p];
        const CatalogEntry& e = set.entries[pl.entry];
        for (int y = pl.ay; y < pl.ay + e.shape.height; ++y)
            for (int x = pl.ax; x < pl.ax + e.shape.width; ++x)
                covering[y * b.wx + x].push_back(p);
    }
    for (int c = 0; c < set.cells(); ++c) {
        LineWrapper w(out, "      ");
        w.add(" cell_" + std::to_string(c % b.wx) + "_" + std::to_string(c / b.wx) + ":");
        for (std::size_t i = 0; i < covering[c].size(); ++i) {
            std::string term = "p" + std::to_string(covering[c][i]);
            if (i > 0) term = "+ " + term;
            w.add(term);
        }
        w.finish("= 1");
    }

    std::vector<int> dspPlacements;
    for (int p = 0; p < static_cast<int>(set.placements.size()); ++p)
        if (set.entries[set.placements[p].entry].cost.dsp > 0) dspPlacements.push_back(p);
    if (!dspPlacements.empty()) {
        LineWrapper w(out, "      ");
        w.add(" dsp:");
        for (std::size_t i = 0; i < dspPlacements.size(); ++i) {
            std::string term = "p" + std::to_string(dspPlacements[i]);
            if (i > 0) term = "+ " + term;
            w.add(term);
        }
        w.finish("<= " + std::to_string(b.dspBudget));
    }

    out << "Binaries\n";
    {
        LineWrapper w(out, " ");
        w.add("");
        for (std::size_t p = 0; p < set.placements.size(); ++p)
            w.add("p" + std::to_string(p));
        out << "\n";
    }
    out << "End\n";
}

SolveResult importSolution(const PlacementSet& set, std::istream& in) {
    std::vector<char> taken(set.placements.size(), 0);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string name;
        double value;
        if (!(ls >> name)) continue;
        if (!(ls >> value))
            throw std::runtime_error("solution line " + std::to_string(lineNo) + ": missing value");
        if (name.size() < 2 || name[0] != 'p')
            throw std::runtime_error("solution line " + std::to_string(lineNo) +
                                     ": unknown variable '" + name + "'");
        std::size_t idx;
        try {
            idx = std::stoul(name.substr(1));
        } catch (const std::exception&) {
            throw std::runtime_error("solution line " + std::to_string(lineNo) +
                                     ": unknown variable '" + name + "'");
        }
        if (idx >= set.placements.size())
            throw std::runtime_error("solution line " + std::to_string(lineNo) +
                                     ": variable out of range '" + name + "'");
        taken[idx] = std::lround(value) != 0;
    }

    SolveResult r;
    std::vector<std::uint64_t> mask(set.words(), 0);
    for (std::size_t p = 0; p < taken.size(); ++p) {
        if (!taken[p]) continue;
        for (int m = set.maskStart[p]; m < set.maskStart[p + 1]; ++m) {
            if (mask[set.maskWord[m]] & set.maskBits[m])
                throw std::runtime_error("solution places overlapping tiles");
            mask[set.maskWord[m]] |= set.maskBits[m];
        }
        r.chosen.push_back(static_cast<int>(p));
        r.costH += set.entryCostH[set.placements[p].entry];
        r.dspUsed += set.entries[set.placements[p].entry].cost.dsp;
    }
    int covered = 0;
    for (std::uint64_t w : mask) covered += __builtin_popcountll(w);
    if (covered != set.cells()) throw std::runtime_error("solution leaves board cells uncovered");
    if (r.dspUsed > set.board.dspBudget)
        throw std::runtime_error("solution exceeds the DSP budget");
    r.feasible = true;
    r.optimal = false; // the external solver's claim is not re-verified
    return r;
}

} // namespace tilemul
