#include "upq/datum.hpp"

#include <algorithm>

namespace upq {

std::string shape_str(BlockShape s) {
    switch (s) {
        case BlockShape::Rectangle: return "rect";
        case BlockShape::ParallelogramDown: return "par_down";
        case BlockShape::ParallelogramUp: return "par_up";
        case BlockShape::TrapezoidWideTop: return "trap_top";
        case BlockShape::TrapezoidWideBottom: return "trap_bottom";
    }
    return "?";
}

BlockShape shape_parse(const std::string& s) {
    if (s == "rect") return BlockShape::Rectangle;
    if (s == "par_down") return BlockShape::ParallelogramDown;
    if (s == "par_up") return BlockShape::ParallelogramUp;
    if (s == "trap_top") return BlockShape::TrapezoidWideTop;
    if (s == "trap_bottom") return BlockShape::TrapezoidWideBottom;
    throw ValidationError("unknown block shape '" + s + "'");
}

bool shape_size_ok(const Block& b) {
    if (b.r < 0 || b.s < 0 || b.r + b.s < 1) return false;
    switch (b.shape) {
        case BlockShape::Rectangle:
        case BlockShape::ParallelogramDown:
        case BlockShape::ParallelogramUp:
            return b.r == b.s && b.r >= 1;
        case BlockShape::TrapezoidWideTop: return b.r == b.s + 1;
        case BlockShape::TrapezoidWideBottom: return b.s == b.r + 1;
    }
    return false;
}

bool parity_ok(const Block& b, int epsilon) {
    Rational shift = b.shape == BlockShape::Rectangle ? half(epsilon) : half(epsilon + 1);
    return (b.gamma + shift).is_integer();
}

std::vector<std::string> datum_violations(const LambdaDatum& d) {
    std::vector<std::string> out;
    try {
        d.sig.check();
    } catch (const ValidationError& e) {
        out.emplace_back(e.what());
        return out;
    }
    int rsum = 0, ssum = 0;
    for (const Block& b : d.blocks) {
        if (!shape_size_ok(b))
            out.push_back("block size (" + std::to_string(b.r) + "," + std::to_string(b.s) +
                          ") invalid for shape " + shape_str(b.shape));
        if (!parity_ok(b, d.sig.epsilon()))
            out.push_back("content parity violated at gamma=" + b.gamma.str());
        rsum += b.r;
        ssum += b.s;
    }
    for (size_t i = 1; i < d.blocks.size(); ++i) {
        if (!(d.blocks[i].gamma < d.blocks[i - 1].gamma)) {
            out.push_back(d.blocks[i].gamma == d.blocks[i - 1].gamma
                              ? "contents not distinct"
                              : "contents not strictly decreasing");
        }
    }
    if (rsum != d.sig.p) out.push_back("block r sizes sum to " + std::to_string(rsum) +
                                       ", expected p=" + std::to_string(d.sig.p));
    if (ssum != d.sig.q) out.push_back("block s sizes sum to " + std::to_string(ssum) +
                                       ", expected q=" + std::to_string(d.sig.q));
    return out;
}

void check_datum(const LambdaDatum& d) {
    auto v = datum_violations(d);
    if (!v.empty()) throw ValidationError("invalid datum: " + v.front());
}

KTypeWeight mu_from_datum(const LambdaDatum& d) {
    check_datum(d);
    const auto& bl = d.blocks;
    size_t nb = bl.size();

    // Coordinate counts before/after each block.
    std::vector<long long> before(nb), after(nb), lbefore(nb), lafter(nb), rbefore(nb), rafter(nb);
    long long cb = 0, lb = 0, rb = 0;
    for (size_t i = 0; i < nb; ++i) {
        before[i] = cb;
        lbefore[i] = lb;
        rbefore[i] = rb;
        cb += bl[i].coords();
        lb += bl[i].r;
        rb += bl[i].s;
    }
    long long ca = 0, la = 0, ra = 0;
    for (size_t i = nb; i-- > 0;) {
        after[i] = ca;
        lafter[i] = la;
        rafter[i] = ra;
        ca += bl[i].coords();
        la += bl[i].r;
        ra += bl[i].s;
    }

    KTypeWeight mu;
    for (size_t i = 0; i < nb; ++i) {
        const Block& b = bl[i];
        Rational rho_u = half(after[i] - before[i]);
        Rational base = b.gamma - rho_u;
        Rational top = base, bottom = base;
        if (b.shape == BlockShape::ParallelogramDown) {
            top += half(1);
            bottom -= half(1);
        } else if (b.shape == BlockShape::ParallelogramUp) {
            top -= half(1);
            bottom += half(1);
        }
        Rational lval = top + Rational(rafter[i] - rbefore[i]);
        Rational rval = bottom + Rational(lafter[i] - lbefore[i]);
        if ((b.r > 0 && !lval.is_integer()) || (b.s > 0 && !rval.is_integer()))
            throw ValidationError("datum does not yield an integral weight");
        for (int t = 0; t < b.r; ++t) mu.left.push_back(lval.as_integer());
        for (int t = 0; t < b.s; ++t) mu.right.push_back(rval.as_integer());
    }
    if (!mu.dominant()) throw ValidationError("datum does not yield a dominant weight");
    return mu;
}

LambdaDatum datum_from_lambda_a(const LambdaAResult& res, const KTypeWeight& mu,
                                const Signature& sig) {
    sig.check();
    LambdaDatum d;
    d.sig = sig;

    // Equal-value runs of the merged lambda_a, with per-side counts.
    size_t n = res.merged.size();
    std::vector<size_t> run_first_left;  // index into mu.left of first left coord, SIZE_MAX if none
    size_t li = 0, ri = 0;
    for (size_t i = 0; i < n;) {
        size_t j = i;
        Block b;
        b.gamma = res.merged[i];
        size_t first_left = SIZE_MAX;
        while (j < n && res.merged[j] == b.gamma) {
            if (res.side[j] == 0) {
                if (first_left == SIZE_MAX) first_left = li;
                ++b.r;
                ++li;
            } else {
                ++b.s;
                ++ri;
            }
            ++j;
        }
        if (b.r - b.s > 1 || b.s - b.r > 1)
            throw ValidationError("lambda_a level set with |r-s| > 1 at gamma=" + b.gamma.str());
        if (b.r == b.s + 1) b.shape = BlockShape::TrapezoidWideTop;
        else if (b.s == b.r + 1) b.shape = BlockShape::TrapezoidWideBottom;
        else if (parity_ok(Block{BlockShape::Rectangle, b.r, b.s, b.gamma}, sig.epsilon()))
            b.shape = BlockShape::Rectangle;
        else
            b.shape = BlockShape::ParallelogramDown;  // direction resolved below
        d.blocks.push_back(b);
        run_first_left.push_back(first_left);
        i = j;
    }

    // Down gives left coordinates one higher than Up; match against mu.
    KTypeWeight rec = mu_from_datum(d);
    bool changed = false;
    for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
        Block& b = d.blocks[bi];
        if (b.shape != BlockShape::ParallelogramDown) continue;
        long long got = rec.left[run_first_left[bi]];
        long long want = mu.left[run_first_left[bi]];
        if (got == want) continue;
        if (got == want + 1) {
            b.shape = BlockShape::ParallelogramUp;
            changed = true;
        } else {
            throw ValidationError("mu does not match either parallelogram pattern");
        }
    }
    if (changed) rec = mu_from_datum(d);
    if (!(rec == mu)) throw ValidationError("mu is inconsistent with its lambda_a datum");
    return d;
}

namespace {

void enumerate_rec(const Signature& sig, const std::vector<Rational>& contents, size_t ci,
                   int rleft, int sleft, LambdaDatum& cur, std::vector<LambdaDatum>& out) {
    if (rleft == 0 && sleft == 0) {
        out.push_back(cur);
        // fall through: no further block can be added (sizes exhausted,
        // and empty blocks are not allowed)
        return;
    }
    if (ci >= contents.size()) return;

    // Option 1: skip this content.
    enumerate_rec(sig, contents, ci + 1, rleft, sleft, cur, out);

    // Option 2: place a block here, every shape/size that still fits.
    static const BlockShape all_shapes[] = {
        BlockShape::Rectangle, BlockShape::ParallelogramDown, BlockShape::ParallelogramUp,
        BlockShape::TrapezoidWideTop, BlockShape::TrapezoidWideBottom};
    for (int r = 0; r <= rleft; ++r) {
        for (int ds = -1; ds <= 1; ++ds) {
            int s = r + ds;
            if (s < 0 || s > sleft || r + s < 1) continue;
            for (BlockShape sh : all_shapes) {
                Block b{sh, r, s, contents[ci]};
                if (!shape_size_ok(b) || !parity_ok(b, sig.epsilon())) continue;
                cur.blocks.push_back(b);
                enumerate_rec(sig, contents, ci + 1, rleft - r, sleft - s, cur, out);
                cur.blocks.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<LambdaDatum> enumerate_data(const Signature& sig, const Rational& content_bound,
                                        bool force) {
    sig.check();
    if (sig.n() > 8 && !force)
        throw GuardError("enumerate_data: p+q > 8 (pass force to override)");
    std::vector<LambdaDatum> out;
    if (content_bound < Rational(0)) return out;

    // Candidate contents: all of (1/2)Z within the bound, descending.
    std::vector<Rational> contents;
    long long hi = (content_bound * Rational(2)).floor_value();
    for (long long t = hi; t >= -hi; --t) contents.push_back(half(t));

    LambdaDatum cur;
    cur.sig = sig;
    enumerate_rec(sig, contents, 0, sig.p, sig.q, cur, out);
    return out;
}

LambdaDatum flip_datum(const LambdaDatum& d) {
    LambdaDatum f;
    f.sig = {d.sig.q, d.sig.p};
    f.blocks.reserve(d.blocks.size());
    for (const Block& b : d.blocks) {
        BlockShape sh = b.shape;
        switch (b.shape) {
            case BlockShape::ParallelogramDown: sh = BlockShape::ParallelogramUp; break;
            case BlockShape::ParallelogramUp: sh = BlockShape::ParallelogramDown; break;
            case BlockShape::TrapezoidWideTop: sh = BlockShape::TrapezoidWideBottom; break;
            case BlockShape::TrapezoidWideBottom: sh = BlockShape::TrapezoidWideTop; break;
            case BlockShape::Rectangle: break;
        }
        f.blocks.push_back(Block{sh, b.s, b.r, b.gamma});
    }
    return f;
}

KTypeWeight flip_weight(const KTypeWeight& mu) { return {mu.right, mu.left}; }

}  // namespace upq
