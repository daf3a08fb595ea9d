#include "upq/diagram.hpp"

#include <algorithm>

namespace upq {

namespace {

struct Style {
    int lind[3];   // left indent per row
    int rout[3];   // distance of the right edge from the right margin
    char lch, rch;
};

Style style_for(BlockShape s) {
    switch (s) {
        case BlockShape::Rectangle: return {{1, 1, 1}, {1, 1, 1}, '|', '|'};
        case BlockShape::ParallelogramDown: return {{0, 1, 2}, {2, 1, 0}, '\\', '\\'};
        case BlockShape::ParallelogramUp: return {{2, 1, 0}, {0, 1, 2}, '/', '/'};
        case BlockShape::TrapezoidWideTop: return {{0, 1, 2}, {0, 1, 2}, '\\', '/'};
        case BlockShape::TrapezoidWideBottom: return {{2, 1, 0}, {2, 1, 0}, '/', '\\'};
    }
    return {{1, 1, 1}, {1, 1, 1}, '|', '|'};
}

std::string repeat_cells(const std::string& g, int count) {
    std::string out;
    for (int i = 0; i < count; ++i) {
        if (!out.empty()) out += ' ';
        out += g;
    }
    return out;
}

}  // namespace

std::string render_diagram(const ThetaDatum& td) {
    const auto& blocks = td.datum.blocks;
    std::string rows[3];
    std::string header = "U(" + std::to_string(td.datum.sig.p) + "," +
                         std::to_string(td.datum.sig.q) + ")";

    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        Style st = style_for(b.shape);
        std::string g = b.gamma.str();

        std::string text[3];
        text[0] = repeat_cells(g, b.r);
        text[2] = repeat_cells(g, b.s);
        bool show_nu = false;
        for (const Rational& x : td.nus[bi])
            if (x != Rational(0)) show_nu = true;
        if (show_nu) {
            std::string nu = "nu=";
            for (size_t k = 0; k < td.nus[bi].size(); ++k) {
                if (k) nu += ',';
                nu += td.nus[bi][k].str();
            }
            text[1] = nu;
        }

        int inner = 0;
        for (int rI = 0; rI < 3; ++rI)
            inner = std::max(inner, int(text[rI].size()) + st.lind[rI] + st.rout[rI]);

        for (int rI = 0; rI < 3; ++rI) {
            std::string line(st.lind[rI], ' ');
            line += st.lch;
            line += ' ';
            std::string body = text[rI];
            int pad = inner - st.lind[rI] - st.rout[rI] - int(body.size());
            int lpad = pad / 2;
            line += std::string(lpad, ' ') + body + std::string(pad - lpad, ' ');
            line += ' ';
            line += st.rch;
            line += std::string(st.rout[rI], ' ');
            if (bi != 0) rows[rI] += "  ";
            rows[rI] += line;
        }
    }

    std::string out = header + "\n";
    for (int rI = 0; rI < 3; ++rI) {
        // trim trailing blanks for byte-stable output
        std::string& row = rows[rI];
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + "\n";
    }
    return out;
}

}  // namespace upq
