#include "tilemul/bitheap.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

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

std::uint64_t xorMask(int n) {
    return maskOf(n, [](unsigned r) { return __builtin_popcount(r) & 1; });
}

// majority of the first k of n inputs, as needed for a 3-bit column carry
std::uint64_t majMask(int n, int k) {
    return maskOf(n, [&](unsigned r) {
        int c = __builtin_popcount(r & ((1u << k) - 1));
        return 2 * c > k || (k == 2 && c == 2); // maj(a,b) degenerates to a&b
    });
}

} // namespace

int BitHeap::maxHeight() const {
    std::size_t h = 0;
    for (const auto& col : columns) h = std::max(h, col.size());
    return int(h);
}

long long BitHeap::bitCount() const {
    long long n = 0;
    for (const auto& col : columns) n += (long long)col.size();
    return n;
}

BitHeap buildHeap(Netlist& net, const GeneratedTiles& tiles) {
    BitHeap heap;
    heap.width = tiles.width;
    heap.columns = tiles.columns;
    heap.constant = tiles.constant;
    for (int w = 0; w < heap.width; ++w)
        if ((tiles.constant >> w) & 1) heap.columns[w].push_back(net.constSig(true));
    return heap;
}

std::vector<Compressor> defaultCompressors() {
    std::vector<Compressor> lib(6);
    lib[0].name = "fa32";
    lib[0].signature = {3};
    lib[0].outBits = 2;
    lib[0].cost = Rational(1);

    lib[1].name = "gpc63";
    lib[1].signature = {6};
    lib[1].outBits = 3;
    lib[1].cost = Rational(3);

    lib[2].name = "gpc153";
    lib[2].signature = {5, 1};
    lib[2].outBits = 3;
    lib[2].cost = Rational(3);

    lib[3].name = "gpc233";
    lib[3].signature = {3, 2};
    lib[3].outBits = 3;
    lib[3].cost = Rational(2);

    lib[4].name = "row42";
    lib[4].row = true;
    lib[4].rowBase = 5;
    lib[4].rowRepeat = 4;
    lib[4].rowOut = {2, 1};
    lib[4].rowCost = {1, 2};

    lib[5].name = "ternary";
    lib[5].row = true;
    lib[5].rowBase = 3;
    lib[5].rowRepeat = 3;
    lib[5].rowOut = {1, 2};
    lib[5].rowCost = {1, 0};
    return lib;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void parseFail(int line, const std::string& what) {
    throw std::runtime_error("compressors line " + std::to_string(line) + ": " + what);
}

long long parseInt(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) parseFail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        parseFail(line, "bad integer '" + s + "'");
    }
}

// "5", "n", "2n", "n+2", "2n+1"
LinearLaw parseLinear(const std::string& raw, int line) {
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s += c;
    LinearLaw law;
    std::size_t n = s.find('n');
    if (n == std::string::npos) {
        law.base = parseInt(s, line);
        return law;
    }
    law.slope = n == 0 ? 1 : parseInt(s.substr(0, n), line);
    std::string rest = s.substr(n + 1);
    if (!rest.empty()) {
        if (rest[0] != '+') parseFail(line, "bad linear term '" + raw + "'");
        law.base = parseInt(rest.substr(1), line);
    }
    return law;
}

Rational parseCost(const std::string& s, int line) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parseInt(s, line));
    long long num = parseInt(trim(s.substr(0, slash)), line);
    long long den = parseInt(trim(s.substr(slash + 1)), line);
    if (den <= 0) parseFail(line, "bad cost denominator");
    return Rational(num, den);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::vector<Compressor> parseCompressors(std::istream& in) {
    std::vector<Compressor> lib;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = splitOn(line, ';');
        if (fields.size() != 4) parseFail(lineno, "expected `name; signature; outputs; cost`");

        Compressor c;
        c.name = trim(fields[0]);
        if (c.name.empty()) parseFail(lineno, "empty name");

        std::vector<std::string> sig = splitOn(fields[1], ',');
        for (auto& tok : sig) tok = trim(tok);
        bool star = !sig.empty() && !sig.back().empty() && sig.back().back() == '*';
        if (star) {
            std::string rep = sig.back().substr(0, sig.back().size() - 1);
            c.row = true;
            c.rowRepeat = int(parseInt(trim(rep), lineno));
            if (sig.size() > 2) parseFail(lineno, "row signature takes at most base,repeat*");
            c.rowBase = sig.size() == 2 ? int(parseInt(sig[0], lineno)) : c.rowRepeat;
            if (c.rowRepeat != 3 && c.rowRepeat != 4)
                parseFail(lineno, "row repeat intake must be 3 or 4");
            if (c.rowBase != c.rowRepeat && c.rowBase != c.rowRepeat + 1)
                parseFail(lineno, "row base intake must be the repeat intake or one more");
            c.rowOut = parseLinear(fields[2], lineno);
            c.rowCost = parseLinear(fields[3], lineno);
        } else {
            long long total = 0, maxv = 0;
            for (std::size_t j = 0; j < sig.size(); ++j) {
                long long v = parseInt(sig[j], lineno);
                if (v < 0) parseFail(lineno, "negative intake");
                c.signature.push_back(int(v));
                total += v;
                maxv += v << j;
            }
            while (!c.signature.empty() && c.signature.back() == 0) c.signature.pop_back();
            if (c.signature.empty()) parseFail(lineno, "counter consumes nothing");
            if (total > 6) parseFail(lineno, "counter intake exceeds one LUT's six inputs");
            c.outBits = int(parseInt(trim(fields[2]), lineno));
            if (c.outBits < 1 || c.outBits > 20) parseFail(lineno, "bad output count");
            if (maxv >= (1LL << c.outBits)) parseFail(lineno, "output word too narrow for the intake");
            c.cost = parseCost(trim(fields[3]), lineno);
        }
        lib.push_back(std::move(c));
    }
    return lib;
}

namespace {

std::string formatLinear(const LinearLaw& law) {
    std::string s;
    if (law.slope == 1) s = "n";
    else if (law.slope != 0) s = std::to_string(law.slope) + "n";
    if (law.base != 0 || s.empty()) {
        if (!s.empty()) s += "+";
        s += std::to_string(law.base);
    }
    return s;
}

} // namespace

std::string formatCompressors(const std::vector<Compressor>& lib) {
    std::ostringstream out;
    for (const Compressor& c : lib) {
        out << c.name << "; ";
        if (c.row) {
            if (c.rowBase != c.rowRepeat) out << c.rowBase << ",";
            out << c.rowRepeat << "*; " << formatLinear(c.rowOut) << "; "
                << formatLinear(c.rowCost);
        } else {
            for (std::size_t j = 0; j < c.signature.size(); ++j)
                out << (j ? "," : "") << c.signature[j];
            out << "; " << c.outBits << "; " << c.cost.num();
            if (c.cost.den() != 1) out << "/" << c.cost.den();
        }
        out << "\n";
    }
    return out.str();
}

std::vector<int> compressorOutCounts(const Compressor& comp, int span,
                                     const std::vector<int>& taken) {
    std::vector<int> counts;
    if (!comp.row) {
        counts.assign(comp.outBits, 1);
        return counts;
    }
    counts.assign(span + 2, 0);
    for (int i = 0; i < span; ++i) counts[i] += 1; // chain sums
    if (comp.rowRepeat == 4) {
        // saved column carries, one weight up; the last one is flushed into
        // the chain and surfaces as the sum at relative weight span
        for (int i = 0; i + 1 < span; ++i)
            if (taken[i] >= 2) counts[i + 1] += 1;
        counts[span] += 1;     // flush sum
        counts[span + 1] += 1; // chain carry out
    } else {
        if (taken[span - 1] >= 2) counts[span] += 1; // last cascade carry
        counts[span] += 1;                           // chain carry out
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

std::vector<std::pair<int, Signal>> emitCompressor(Netlist& net, const Compressor& comp,
                                                   int span,
                                                   const std::vector<std::vector<Signal>>& inputs) {
    std::vector<std::pair<int, Signal>> out;
    Signal zero = net.constSig(false);

    if (!comp.row) {
        if (span != 1) throw std::invalid_argument("counters have no span");
        if (inputs.size() > comp.signature.size())
            throw std::invalid_argument("more input columns than the signature");
        std::vector<Signal> flat;
        std::vector<int> colOf;
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            if (int(inputs[j].size()) > comp.signature[j])
                throw std::invalid_argument("column overfilled");
            for (Signal s : inputs[j]) {
                flat.push_back(s);
                colOf.push_back(int(j));
            }
        }
        int n = int(flat.size());
        if (n < 1 || n > 6) throw std::invalid_argument("counter input count out of range");

        auto value = [&](unsigned row) {
            long long v = 0;
            for (int i = 0; i < n; ++i)
                if (rowBit(row, i)) v += 1LL << colOf[i];
            return v;
        };
        std::vector<std::uint64_t> masks(comp.outBits, 0);
        for (unsigned row = 0; row < (1u << n); ++row) {
            long long v = value(row);
            for (int b = 0; b < comp.outBits; ++b)
                if ((v >> b) & 1) masks[b] |= std::uint64_t(1) << row;
        }
        // shared-LUT pairs only where the cost figure demands them
        int pairs = 0;
        if (comp.cost.den() == 1 && n < 6) {
            long long costInt = comp.cost.num();
            pairs = int(std::clamp<long long>(comp.outBits - costInt, 0, comp.outBits / 2));
        }
        int next = 0;
        for (int p = 0; p < pairs; ++p, next += 2) {
            auto [o6, o5] = net.addLut2(flat, masks[next + 1], masks[next]);
            out.emplace_back(next, o5);
            out.emplace_back(next + 1, o6);
        }
        for (; next < comp.outBits; ++next)
            out.emplace_back(next, net.addLut(flat, masks[next]));
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    // scalable rows
    if (span < 2 || int(inputs.size()) != span)
        throw std::invalid_argument("row span and input columns disagree");
    for (int i = 0; i < span; ++i) {
        int cap = i == 0 ? comp.rowBase : comp.rowRepeat;
        if (inputs[i].empty() || int(inputs[i].size()) > cap)
            throw std::invalid_argument("row column intake out of range");
    }
    auto chain = net.newChain();

    if (comp.rowRepeat == 4) {
        // 4:2 style: per-column LUT forms the xor of up to four bits and
        // saves the three-bit majority for the next stage; an injection cell
        // feeds the base column's fifth bit into the chain and a flush cell
        // folds the last saved carry back in.
        Signal extra = int(inputs[0].size()) == comp.rowBase && comp.rowBase == 5
                           ? inputs[0][4]
                           : zero;
        Signal zsel = net.addLut({extra}, 0);
        Signal carry = net.addCarry(chain, zsel, extra, zero).second;

        Signal lastMaj = zero;
        for (int i = 0; i < span; ++i) {
            std::vector<Signal> col(inputs[i].begin(),
                                    inputs[i].begin() + std::min<std::size_t>(4, inputs[i].size()));
            int ni = int(col.size());
            Signal sel, maj = -1;
            if (ni >= 2) {
                auto [o6, o5] = net.addLut2(col, xorMask(ni), majMask(ni, std::min(ni, 3)));
                sel = o6;
                maj = o5;
            } else {
                sel = net.addLut(col, 0b10);
            }
            Signal di = ni == 4 ? col[3] : zero;
            auto [sum, cout] = net.addCarry(chain, sel, di, carry);
            carry = cout;
            out.emplace_back(i, sum);
            if (i + 1 < span) {
                if (maj != -1) out.emplace_back(i + 1, maj);
            } else {
                lastMaj = maj != -1 ? maj : zero;
            }
        }
        Signal fsel = net.addLut({lastMaj}, 0b10);
        auto [fs, fc] = net.addCarry(chain, fsel, zero, carry);
        out.emplace_back(span, fs);
        out.emplace_back(span + 1, fc);
    } else {
        // ternary style: each column's saved majority cascades into the next
        // column's select, so only the last one escapes to the heap
        Signal carry = int(inputs[0].size()) == comp.rowBase && comp.rowBase == 4
                           ? inputs[0][3]
                           : zero;
        Signal prevMaj = -1;
        for (int i = 0; i < span; ++i) {
            std::vector<Signal> col(inputs[i].begin(),
                                    inputs[i].begin() + std::min<std::size_t>(3, inputs[i].size()));
            std::vector<Signal> in = col;
            if (prevMaj != -1) in.push_back(prevMaj);
            int ni = int(in.size());
            Signal sel, maj = -1;
            if (int(col.size()) >= 2) {
                auto [o6, o5] = net.addLut2(in, xorMask(ni), majMask(ni, int(col.size())));
                sel = o6;
                maj = o5;
            } else {
                sel = net.addLut(in, xorMask(ni));
            }
            Signal di = prevMaj != -1 ? prevMaj : zero;
            auto [sum, cout] = net.addCarry(chain, sel, di, carry);
            carry = cout;
            out.emplace_back(i, sum);
            prevMaj = maj; // may be -1 when this column had under two bits
        }
        if (prevMaj != -1) out.emplace_back(span, prevMaj);
        out.emplace_back(span, carry);
    }
    return out;
}

namespace {

struct Policy {
    int rowMask = 3; // bit 0: repeat-3 rows, bit 1: repeat-4 rows
    bool eagerRows = false;
    bool preferElim = false;
};

struct Candidate {
    bool valid = false;
    int comp = -1;
    int span = 1;
    std::vector<int> taken;
    long long elim = 0;
    Rational cost;
};

// true when a is the better pick
bool betterCandidate(const Candidate& a, const Candidate& b, const Policy& pol) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    Rational ae = Rational(a.elim) * b.cost;
    Rational be = Rational(b.elim) * a.cost;
    if (pol.preferElim) {
        if (a.elim != b.elim) return a.elim > b.elim;
        if (ae != be) return ae > be;
    } else {
        if (ae != be) return ae > be;
        if (a.elim != b.elim) return a.elim > b.elim;
    }
    if (a.comp != b.comp) return a.comp < b.comp;
    return a.span < b.span;
}

long long clippedOuts(const Compressor& comp, int at, int width, int span,
                      const std::vector<int>& taken) {
    std::vector<int> counts = compressorOutCounts(comp, span, taken);
    long long total = 0;
    for (std::size_t rel = 0; rel < counts.size(); ++rel)
        if (at + int(rel) < width) total += counts[rel];
    return total;
}

Candidate rowCandidate(int w, int ci, const Compressor& comp, const std::vector<int>& leftover,
                       const std::vector<int>& incoming, int width, int target,
                       const Policy& pol) {
    Candidate c;
    int t0 = std::min(comp.rowBase, leftover[w]);
    if (t0 < 2) return c;
    std::vector<int> taken{t0};
    int e = w + 1;
    while (e < width) {
        if (leftover[e] == 0) break;
        if (pol.eagerRows) {
            if (leftover[e] < comp.rowRepeat) break;
        } else if (leftover[e] + incoming[e] + 2 <= target) {
            break;
        }
        taken.push_back(std::min(comp.rowRepeat, leftover[e]));
        ++e;
    }
    int span = e - w;
    if (span < 2) return c;
    long long consumed = 0;
    for (int t : taken) consumed += t;
    long long elim = consumed - clippedOuts(comp, w, width, span, taken);
    if (elim < 1) return c;
    c.valid = true;
    c.comp = ci;
    c.span = span;
    c.taken = std::move(taken);
    c.elim = elim;
    c.cost = Rational(comp.rowCost.at(span));
    return c;
}

Candidate gpcCandidate(int w, int ci, const Compressor& comp, const std::vector<int>& leftover,
                       const std::vector<int>& incoming, int width, int target) {
    Candidate c;
    std::vector<int> taken;
    long long consumed = 0;
    for (std::size_t j = 0; j < comp.signature.size() && w + int(j) < width; ++j) {
        taken.push_back(std::min(comp.signature[j], leftover[w + j]));
        consumed += taken.back();
    }
    while (!taken.empty() && taken.back() == 0) taken.pop_back();
    if (taken.empty() || taken[0] < 2) return c;
    long long elim = consumed - clippedOuts(comp, w, width, 1, taken);
    if (elim < 1) {
        // a half-adder rescue: burning a LUT without eliminating anything is
        // still worth it when it settles this column for good
        bool rescue = comp.signature == std::vector<int>{3} && leftover[w] == 2 &&
                      elim == 0 && incoming[w] + 1 <= target;
        if (!rescue) return c;
    }
    c.valid = true;
    c.comp = ci;
    c.span = 1;
    c.taken = std::move(taken);
    c.elim = elim;
    c.cost = comp.cost;
    return c;
}

CompressorSchedule scheduleWithPolicy(std::vector<int> heights, int width,
                                      const std::vector<Compressor>& lib,
                                      const ScheduleOptions& opt, const Policy& pol) {
    int target = opt.ternaryFinal ? 3 : 2;
    CompressorSchedule sched;
    Rational opCost(0);

    int guard = 0;
    while (*std::max_element(heights.begin(), heights.end()) > target) {
        if (++guard > 100) throw std::logic_error("compressor scheduling did not converge");
        std::vector<int> leftover = heights;
        std::vector<int> incoming(width, 0);
        ScheduleStage stage;
        for (int w = 0; w < width; ++w) {
            while (leftover[w] + incoming[w] > target) {
                Candidate best;
                for (int ci = 0; ci < int(lib.size()); ++ci) {
                    const Compressor& comp = lib[ci];
                    Candidate cand;
                    if (comp.row) {
                        int bit = comp.rowRepeat == 3 ? 1 : 2;
                        if (!(pol.rowMask & bit)) continue;
                        cand = rowCandidate(w, ci, comp, leftover, incoming, width, target, pol);
                    } else {
                        cand = gpcCandidate(w, ci, comp, leftover, incoming, width, target);
                    }
                    if (betterCandidate(cand, best, pol)) best = cand;
                }
                if (!best.valid) break;
                for (std::size_t j = 0; j < best.taken.size(); ++j)
                    leftover[w + j] -= best.taken[j];
                const Compressor& comp = lib[best.comp];
                std::vector<int> counts = compressorOutCounts(comp, best.span, best.taken);
                for (std::size_t rel = 0; rel < counts.size(); ++rel)
                    if (w + int(rel) < width) incoming[w + rel] += counts[rel];
                opCost = opCost + (comp.row ? Rational(comp.rowCost.at(best.span)) : comp.cost);
                stage.ops.push_back({best.comp, w, best.span, best.taken});
            }
        }
        if (stage.ops.empty()) throw std::logic_error("compressor scheduling stalled");
        for (int w = 0; w < width; ++w) heights[w] = leftover[w] + incoming[w];
        sched.stages.push_back(std::move(stage));
    }

    int maxNonempty = -1, maxH = 0;
    for (int w = 0; w < width; ++w) {
        if (heights[w] > 0) maxNonempty = w;
        maxH = std::max(maxH, heights[w]);
    }
    if (maxH > 1) {
        sched.finalAdderWidth = maxNonempty + 1;
        sched.ternaryFinal = maxH > 2;
    }
    Rational final(sched.finalAdderWidth + (sched.ternaryFinal ? 1 : 0));
    sched.totalLut = opCost + final;
    return sched;
}

} // namespace

CompressorSchedule schedule(const BitHeap& heap, const std::vector<Compressor>& lib,
                            const ScheduleOptions& opt) {
    bool haveFa = false;
    for (const Compressor& c : lib)
        if (!c.row && c.signature == std::vector<int>{3} && c.outBits == 2) haveFa = true;
    if (!haveFa) throw std::invalid_argument("compressor library lacks the (3;2) full adder");

    std::vector<int> heights(heap.width, 0);
    for (int w = 0; w < heap.width; ++w) heights[w] = int(heap.columns[w].size());

    if (opt.mode == ScheduleMode::heuristic)
        return scheduleWithPolicy(heights, heap.width, lib, opt, Policy{});

    CompressorSchedule best;
    bool haveBest = false;
    for (int rowMask : {3, 1, 2, 0})
        for (bool eager : {false, true})
            for (bool elim : {false, true}) {
                Policy pol{rowMask, eager, elim};
                CompressorSchedule s = scheduleWithPolicy(heights, heap.width, lib, opt, pol);
                bool better = !haveBest || s.stageCount() < best.stageCount() ||
                              (s.stageCount() == best.stageCount() && s.totalLut < best.totalLut);
                if (better) {
                    best = std::move(s);
                    haveBest = true;
                }
            }
    return best;
}

Rational compressionCost(const CompressorSchedule& sched, const std::vector<Compressor>& lib) {
    Rational total(sched.finalAdderWidth + (sched.ternaryFinal ? 1 : 0));
    for (const ScheduleStage& stage : sched.stages)
        for (const CompressorOp& op : stage.ops) {
            const Compressor& comp = lib.at(op.comp);
            total = total + (comp.row ? Rational(comp.rowCost.at(op.span)) : comp.cost);
        }
    return total;
}

std::vector<Signal> applySchedule(Netlist& net, const BitHeap& heap,
                                  const CompressorSchedule& sched,
                                  const std::vector<Compressor>& lib) {
    int width = heap.width;
    Signal zero = net.constSig(false);
    std::vector<std::vector<Signal>> cols = heap.columns;

    for (const ScheduleStage& stage : sched.stages) {
        // Compressors consume from the front of each column, so order the
        // columns by arrival depth: early bits get compressed, late ones
        // (a Booth array output, say) ride toward the final adder instead of
        // stacking more levels on an already long path.
        std::vector<int> depths = signalDepths(net);
        for (auto& col : cols)
            std::stable_sort(col.begin(), col.end(),
                             [&](Signal a, Signal b) { return depths[a] < depths[b]; });
        std::vector<std::size_t> head(width, 0);
        std::vector<std::vector<Signal>> extra(width);
        for (const CompressorOp& op : stage.ops) {
            const Compressor& comp = lib.at(op.comp);
            std::vector<std::vector<Signal>> inputs(op.taken.size());
            for (std::size_t j = 0; j < op.taken.size(); ++j) {
                int w = op.column + int(j);
                if (w >= width || cols[w].size() - head[w] < std::size_t(op.taken[j]))
                    throw std::logic_error("schedule consumes bits the heap does not have");
                for (int t = 0; t < op.taken[j]; ++t) inputs[j].push_back(cols[w][head[w]++]);
            }
            auto outs = emitCompressor(net, comp, op.span, inputs);
            std::vector<int> counts = compressorOutCounts(comp, op.span, op.taken);
            std::vector<int> got(counts.size(), 0);
            for (auto& [rel, sig] : outs) {
                if (rel < int(counts.size())) ++got[rel];
                if (op.column + rel < width) extra[op.column + rel].push_back(sig);
            }
            if (got != counts)
                throw std::logic_error("compressor emitted a different shape than planned");
        }
        for (int w = 0; w < width; ++w) {
            cols[w].erase(cols[w].begin(), cols[w].begin() + head[w]);
            cols[w].insert(cols[w].end(), extra[w].begin(), extra[w].end());
        }
    }

    std::vector<Signal> product(width, zero);
    int maxH = 0, maxNonempty = -1;
    for (int w = 0; w < width; ++w) {
        maxH = std::max(maxH, int(cols[w].size()));
        if (!cols[w].empty()) maxNonempty = w;
    }
    if (maxH <= 1) {
        if (sched.finalAdderWidth != 0)
            throw std::logic_error("schedule expected a final adder the heap does not need");
        for (int w = 0; w < width; ++w)
            if (!cols[w].empty()) product[w] = cols[w][0];
        return product;
    }
    int W = maxNonempty + 1;
    if (W != sched.finalAdderWidth || maxH > (sched.ternaryFinal ? 3 : 2))
        throw std::logic_error("final heap shape does not match the schedule");

    auto at = [&](int w, std::size_t i) { return i < cols[w].size() ? cols[w][i] : zero; };
    auto chain = net.newChain();
    Signal carry = zero;
    if (!sched.ternaryFinal) {
        for (int w = 0; w < W; ++w) {
            Signal a = at(w, 0), b = at(w, 1);
            Signal sel = net.addLut({a, b}, 0b0110);
            auto [sum, cout] = net.addCarry(chain, sel, a, carry);
            product[w] = sum;
            carry = cout;
        }
        if (W < width) product[W] = carry;
    } else {
        Signal prevMaj = -1;
        for (int w = 0; w < W; ++w) {
            std::vector<Signal> in{at(w, 0), at(w, 1), at(w, 2)};
            if (prevMaj != -1) in.push_back(prevMaj);
            auto [o6, o5] = net.addLut2(in, xorMask(int(in.size())), majMask(int(in.size()), 3));
            Signal di = prevMaj != -1 ? prevMaj : zero;
            auto [sum, cout] = net.addCarry(chain, o6, di, carry);
            product[w] = sum;
            carry = cout;
            prevMaj = o5;
        }
        Signal fsel = net.addLut({prevMaj}, 0b10);
        auto [fs, fc] = net.addCarry(chain, fsel, zero, carry);
        if (W < width) product[W] = fs;
        if (W + 1 < width) product[W + 1] = fc;
    }
    return product;
}

} // namespace tilemul
