#include "tilemul/emit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tilemul {

namespace {

std::string hexWord(std::uint64_t v, int digits) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%0*llx", digits, (unsigned long long)v);
    return buf;
}

std::string signalRef(const Netlist& net, Signal s) {
    const SignalInfo& info = net.signals.at(std::size_t(s));
    switch (info.origin) {
    case SignalOrigin::Const0: return "1'b0";
    case SignalOrigin::Const1: return "1'b1";
    case SignalOrigin::InputX: return "X[" + std::to_string(info.node) + "]";
    case SignalOrigin::InputY: return "Y[" + std::to_string(info.node) + "]";
    case SignalOrigin::InputD: return "D[" + std::to_string(info.node) + "]";
    default: return "n" + std::to_string(s);
    }
}

bool isInternal(SignalOrigin o) {
    return o == SignalOrigin::LutOut || o == SignalOrigin::CarrySum ||
           o == SignalOrigin::CarryOut || o == SignalOrigin::DspOut;
}

} // namespace

std::string emitHdl(const Netlist& net, const std::string& moduleName) {
    if (net.product.empty() || net.xWidth < 1 || net.yWidth < 1)
        throw std::invalid_argument("netlist has no product port");
    std::ostringstream out;
    auto ref = [&](Signal s) { return signalRef(net, s); };

    out << "// " << moduleName << ": " << net.xWidth << "x" << net.yWidth
        << " multiplier netlist, " << net.luts.size() << " LUTs, "
        << net.cells.size() << " carry cells, " << net.dsps.size() << " DSP blocks.\n";
    out << "// Generic primitives, behavioral models at the end of the file.\n";
    out << "// AMD mapping: genlut6 -> LUT6, genlut6_2 -> LUT6_2 (fractured 5/6 LUT),\n";
    out << "// gencarry -> one CARRY8 stage (eight cells per block), gendsp -> DSP48E2\n";
    out << "// in A*B mode with registers bypassed.\n\n";

    out << "module " << moduleName << " (\n";
    out << "  input  [" << net.xWidth - 1 << ":0] X,\n";
    out << "  input  [" << net.yWidth - 1 << ":0] Y,\n";
    if (net.dWidth > 0) out << "  input  [" << net.dWidth - 1 << ":0] D,\n";
    out << "  output [" << net.product.size() - 1 << ":0] P\n";
    out << ");\n\n";

    int perLine = 0;
    for (Signal s = 0; s < Signal(net.signals.size()); ++s) {
        if (!isInternal(net.signals[s].origin)) continue;
        if (perLine == 0) out << "  wire ";
        out << "n" << s;
        if (++perLine == 10) {
            out << ";\n";
            perLine = 0;
        } else {
            out << ", ";
        }
    }
    if (perLine != 0) {
        out.seekp(-2, std::ios_base::cur);
        out << ";\n";
    }
    out << "\n";

    for (std::size_t i = 0; i < net.luts.size(); ++i) {
        const LutNode& lut = net.luts[i];
        auto pins = [&]() {
            for (int k = 0; k < 6; ++k) {
                out << ".I" << k << "(";
                out << (k < int(lut.inputs.size()) ? ref(lut.inputs[k]) : "1'b0");
                out << "), ";
            }
        };
        if (lut.numOutputs == 2) {
            out << "  genlut6_2 #(.INIT6(64'h" << hexWord(lut.mask[0], 16)
                << "), .INIT5(32'h" << hexWord(lut.mask[1] & 0xffffffffu, 8) << ")) l" << i
                << " (";
            pins();
            out << ".O6(" << ref(lut.out[0]) << "), .O5(" << ref(lut.out[1]) << "));\n";
        } else {
            out << "  genlut6 #(.INIT(64'h" << hexWord(lut.mask[0], 16) << ")) l" << i
                << " (";
            pins();
            out << ".O(" << ref(lut.out[0]) << "));\n";
        }
    }
    if (!net.luts.empty()) out << "\n";

    for (std::size_t i = 0; i < net.cells.size(); ++i) {
        const CarryCell& c = net.cells[i];
        out << "  gencarry c" << i << " (.S(" << ref(c.sel) << "), .DI(" << ref(c.di)
            << "), .CIN(" << ref(c.cin) << "), .SUM(" << ref(c.sum) << "), .COUT("
            << ref(c.cout) << ")); // chain " << c.chain << "\n";
    }
    if (!net.cells.empty()) out << "\n";

    for (std::size_t i = 0; i < net.dsps.size(); ++i) {
        const DspNode& d = net.dsps[i];
        out << "  gendsp #(.AW(" << d.a.size() << "), .BW(" << d.b.size() << "), .A_SIGNED("
            << int(d.aSigned) << "), .B_SIGNED(" << int(d.bSigned) << "), .OFFSET("
            << int(d.offsetBinary) << ")) d" << i << " (\n    .A({";
        for (int k = 23; k >= 0; --k) {
            out << (k < int(d.a.size()) ? ref(d.a[k]) : "1'b0");
            if (k) out << ", ";
        }
        out << "}),\n    .B({";
        for (int k = 16; k >= 0; --k) {
            out << (k < int(d.b.size()) ? ref(d.b[k]) : "1'b0");
            if (k) out << ", ";
        }
        out << "}),\n    .P({";
        for (int k = 40; k >= 0; --k) {
            out << ref(d.out[k]);
            if (k) out << ", ";
        }
        out << "}));\n";
    }
    if (!net.dsps.empty()) out << "\n";

    for (std::size_t w = 0; w < net.product.size(); ++w)
        out << "  assign P[" << w << "] = " << ref(net.product[w]) << ";\n";
    out << "endmodule\n\n";

    out << "module genlut6 #(parameter [63:0] INIT = 64'h0)\n"
           "  (input I0, I1, I2, I3, I4, I5, output O);\n"
           "  assign O = INIT[{I5, I4, I3, I2, I1, I0}];\n"
           "endmodule\n\n";
    out << "module genlut6_2 #(parameter [63:0] INIT6 = 64'h0, parameter [31:0] INIT5 = 32'h0)\n"
           "  (input I0, I1, I2, I3, I4, I5, output O6, output O5);\n"
           "  assign O6 = INIT6[{I5, I4, I3, I2, I1, I0}];\n"
           "  assign O5 = INIT5[{I4, I3, I2, I1, I0}];\n"
           "endmodule\n\n";
    out << "module gencarry (input S, DI, CIN, output SUM, COUT);\n"
           "  assign SUM = S ^ CIN;\n"
           "  assign COUT = S ? CIN : DI;\n"
           "endmodule\n\n";
    out << "module gendsp #(parameter AW = 24, parameter BW = 17, parameter A_SIGNED = 0,\n"
           "                parameter B_SIGNED = 0, parameter OFFSET = 0)\n"
           "  (input [23:0] A, input [16:0] B, output [40:0] P);\n"
           "  wire signed [41:0] av = A_SIGNED ? $signed(A[AW-1:0]) : $signed({1'b0, A[AW-1:0]});\n"
           "  wire signed [41:0] bv = B_SIGNED ? $signed(B[BW-1:0]) : $signed({1'b0, B[BW-1:0]});\n"
           "  wire signed [41:0] pv = av * bv;\n"
           "  assign P = {pv[40] ^ (OFFSET != 0), pv[39:0]};\n"
           "endmodule\n";
    return out.str();
}

namespace {

const char* familyFill(TileFamily family) {
    switch (family) {
    case TileFamily::Dsp24x17: return "#f4c7a1";
    case TileFamily::BoothArray: return "#b5d6a7";
    case TileFamily::Lut2xK: return "#a9c4e8";
    default: return "#d8d8e8"; // fixed table tiles
    }
}

std::string asciiRender(const std::vector<PlacedTile>& tiles, const Board& board) {
    static const char glyphs[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::vector<std::string> grid(board.wy, std::string(board.wx, '.'));
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const TileShape shape = catalogEntry(tiles[t].kind).shape;
        char g = glyphs[t % (sizeof glyphs - 1)];
        for (int j = 0; j < shape.height; ++j)
            for (int i = 0; i < shape.width; ++i) {
                int x = tiles[t].ax + i, y = tiles[t].ay + j;
                if (x >= board.wx || y >= board.wy)
                    throw std::invalid_argument("tile overhangs the board");
                grid[y][x] = g;
            }
    }
    std::ostringstream out;
    for (int j = board.wy - 1; j >= 0; --j) {
        for (int i = board.wx - 1; i >= 0; --i) out << grid[j][i];
        out << "\n";
    }
    out << "\n";
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const TileShape shape = catalogEntry(tiles[t].kind).shape;
        out << glyphs[t % (sizeof glyphs - 1)] << "  " << kindName(tiles[t].kind) << "  "
            << shape.width << "x" << shape.height << " at (" << tiles[t].ax << "," << tiles[t].ay
            << ")\n";
    }
    return out.str();
}

std::string svgRender(const std::vector<PlacedTile>& tiles, const Board& board) {
    const int S = 24, M = 10;
    int W = board.wx * S + 2 * M, H = board.wy * S + 2 * M;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << board.wx * S
        << "\" height=\"" << board.wy * S
        << "\" fill=\"#ffffff\" stroke=\"#404040\" stroke-width=\"1\"/>\n";
    for (const PlacedTile& t : tiles) {
        const TileShape shape = catalogEntry(t.kind).shape;
        int x = M + (board.wx - t.ax - shape.width) * S;
        int y = M + (board.wy - t.ay - shape.height) * S;
        int w = shape.width * S, h = shape.height * S;
        out << "<g class=\"tile\">";
        out << "<title>" << kindName(t.kind) << " at (" << t.ax << "," << t.ay
            << ")</title>";
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\""
            << h << "\" fill=\"" << familyFill(t.kind.family)
            << "\" stroke=\"#303030\" stroke-width=\"1\"/>";
        out << "<text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2 + 4
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
            << kindName(t.kind) << "</text>";
        out << "</g>\n";
    }
    // weight-zero corner marker, bottom right in this orientation
    out << "<text x=\"" << W - M << "\" y=\"" << H - 1
        << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"8\">(0,0)</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string renderTiling(const std::vector<PlacedTile>& tiles, const Board& board,
                         RenderFormat format) {
    if (board.wx < 1 || board.wy < 1) throw std::invalid_argument("degenerate board");
    return format == RenderFormat::ascii ? asciiRender(tiles, board)
                                         : svgRender(tiles, board);
}

} // namespace tilemul
