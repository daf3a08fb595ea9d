#include "upq/screening.hpp"

#include <algorithm>

#include "upq/dirac.hpp"

namespace upq {

std::string cert_kind_str(CertKind k) {
    switch (k) {
        case CertKind::CaseAParallelogram: return "case_a_parallelogram";
        case CertKind::CaseARectangle: return "case_a_rectangle";
        case CertKind::CaseBSemiSpherical: return "case_b_semi_spherical";
        case CertKind::Dirac: return "dirac";
    }
    return "?";
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::NoObstructionFound: return "NoObstructionFound";
        case Verdict::NonUnitaryByFPP: return "NonUnitaryByFPP";
        case Verdict::NonUnitaryBySRVHull: return "NonUnitaryBySRVHull";
        case Verdict::NonUnitaryByFundamentalGap: return "NonUnitaryByFundamentalGap";
        case Verdict::InducedInGoodRange: return "InducedInGoodRange";
    }
    return "?";
}

FppResult fpp_gap_check(const InfChar& lam) {
    FppResult res;
    res.max_gap = Rational(0);
    for (size_t i = 1; i < lam.coords.size(); ++i) {
        Rational gap = lam.coords[i - 1] - lam.coords[i];
        if (res.max_gap < gap) res.max_gap = gap;
    }
    res.pass = !(Rational(1) < res.max_gap);
    return res;
}

bool hull_check(const RatVec& lam, const RatVec& center) {
    if (lam.size() != center.size()) throw ValidationError("hull_check: length mismatch");
    if (vec_sum(lam) != vec_sum(center)) return false;
    size_t n = lam.size();
    RatVec diff(n);
    for (size_t i = 0; i < n; ++i) diff[i] = lam[i] - center[i];
    diff = sorted_desc(std::move(diff));
    RatVec r = rho(int(n));
    Rational pd, pr;
    for (size_t k = 0; k < n; ++k) {
        pd += diff[k];
        pr += r[k];
        if (pr < pd) return false;
    }
    return true;
}

FundamentalPartition fundamental_partition(const LambdaDatum& d) {
    check_datum(d);
    FundamentalPartition fp;
    int nb = int(d.blocks.size());
    int start = 0;
    for (int i = 1; i < nb; ++i) {
        if (Rational(1) < d.blocks[i - 1].gamma - d.blocks[i].gamma) {
            fp.groups.emplace_back(start, i - 1);
            start = i;
        }
    }
    if (nb > 0) fp.groups.emplace_back(start, nb - 1);
    return fp;
}

namespace {

// min / max of one block's character contribution
Rational block_min(const Block& b, const RatVec& nu) {
    return nu.empty() ? b.gamma : b.gamma - nu.front();
}
Rational block_max(const Block& b, const RatVec& nu) {
    return nu.empty() ? b.gamma : b.gamma + nu.front();
}

struct Offsets {
    std::vector<int> loff, roff;  // first left/right mu index per block
};

Offsets block_offsets(const LambdaDatum& d) {
    Offsets o;
    int l = 0, r = 0;
    for (const Block& b : d.blocks) {
        o.loff.push_back(l);
        o.roff.push_back(r);
        l += b.r;
        r += b.s;
    }
    return o;
}

}  // namespace

std::vector<Segment> segments_of_partition(const ThetaDatum& td,
                                           const std::vector<BlockRange>& parts) {
    check_theta(td);
    int expect = 0;
    std::vector<Segment> out;
    for (const BlockRange& pr : parts) {
        if (pr.first != expect || pr.second < pr.first || pr.second >= int(td.datum.blocks.size()))
            throw ValidationError("segments_of_partition: ranges do not partition the blocks");
        expect = pr.second + 1;
        Segment s{block_max(td.datum.blocks[pr.first], td.nus[pr.first]),
                  block_min(td.datum.blocks[pr.first], td.nus[pr.first])};
        for (int i = pr.first + 1; i <= pr.second; ++i) {
            Rational mx = block_max(td.datum.blocks[i], td.nus[i]);
            Rational mn = block_min(td.datum.blocks[i], td.nus[i]);
            if (s.e < mx) s.e = mx;
            if (mn < s.b) s.b = mn;
        }
        out.push_back(s);
    }
    if (expect != int(td.datum.blocks.size()))
        throw ValidationError("segments_of_partition: ranges do not cover the blocks");
    return out;
}

std::vector<int> good_range_cuts(const ThetaDatum& td) {
    check_theta(td);
    int nb = int(td.datum.blocks.size());
    std::vector<int> cuts;
    if (nb < 2) return cuts;

    std::vector<Rational> pre_min(nb), suf_max(nb);
    for (int i = 0; i < nb; ++i) {
        Rational mn = block_min(td.datum.blocks[i], td.nus[i]);
        pre_min[i] = i == 0 ? mn : (mn < pre_min[i - 1] ? mn : pre_min[i - 1]);
    }
    for (int i = nb - 1; i >= 0; --i) {
        Rational mx = block_max(td.datum.blocks[i], td.nus[i]);
        suf_max[i] = i == nb - 1 ? mx : (suf_max[i + 1] < mx ? mx : suf_max[i + 1]);
    }
    for (int c = 1; c < nb; ++c)
        if (suf_max[c] < pre_min[c - 1]) cuts.push_back(c);
    return cuts;
}

bool interlaced(const std::vector<Segment>& segs) {
    if (segs.empty()) throw ValidationError("interlaced: empty segment list");
    size_t n = segs.size();
    std::vector<char> seen(n, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t visited = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < n; ++j) {
            if (seen[j]) continue;
            bool meet = !(segs[i].e < segs[j].b) && !(segs[j].e < segs[i].b);
            if (meet) {
                seen[j] = 1;
                ++visited;
                stack.push_back(j);
            }
        }
    }
    return visited == n;
}

bool bottom_layer(const LambdaDatum& d, const BlockRange& range, Level level) {
    check_datum(d);
    int nb = int(d.blocks.size());
    if (range.first < 0 || range.second < range.first || range.second >= nb)
        throw ValidationError("bottom_layer: bad block range");
    if (level == Level::PFull) throw ValidationError("bottom_layer: level must be p_plus or p_minus");

    KTypeWeight mu = mu_from_datum(d);
    Offsets off = block_offsets(d);
    int R = 0, S = 0;
    for (int i = range.first; i <= range.second; ++i) {
        R += d.blocks[i].r;
        S += d.blocks[i].s;
    }
    int fl = off.loff[range.first], fr = off.roff[range.first];
    int p = d.sig.p, q = d.sig.q;

    // Positional neighbour comparisons; a boundary index is vacuously fine.
    auto sep_left = [&](int at) { return at == 0 || at == p || mu.left[at - 1] > mu.left[at]; };
    auto sep_right = [&](int at) { return at == 0 || at == q || mu.right[at - 1] > mu.right[at]; };

    if (level == Level::PPlus) return sep_left(fl) && sep_right(fr + S);
    return sep_left(fl + R) && sep_right(fr);
}

std::vector<int> lambda_large_blocks(const ThetaDatum& td) {
    check_theta(td);
    const auto& bl = td.datum.blocks;
    std::vector<int> out;
    for (size_t i = 0; i < bl.size(); ++i) {
        if (td.nus[i].empty()) continue;
        Rational top = bl[i].gamma + td.nus[i].front();
        bool large = true;
        for (size_t j = 0; j < bl.size() && large; ++j) {
            if (!(bl[j].gamma < top)) large = false;          // every content, own included
            if (j != i && large && !(block_max(bl[j], td.nus[j]) < top)) large = false;
        }
        if (large) out.push_back(int(i));
    }
    return out;
}

namespace {

bool all_nonzero_nu(const RatVec& nu) {
    if (nu.empty()) return false;
    for (const Rational& x : nu)
        if (x == Rational(0)) return false;
    return true;
}

// A parallelogram with all nonzero nu names the same module in either
// direction, so it counts as an upright shape; only wide-bottom
// trapezoids and rigid up-parallelograms need the U(p,q) <-> U(q,p) flip.
bool needs_group_flip(const ThetaDatum& td, int idx) {
    const Block& b = td.datum.blocks[idx];
    if (b.shape == BlockShape::TrapezoidWideBottom) return true;
    return b.shape == BlockShape::ParallelogramUp && !all_nonzero_nu(td.nus[idx]);
}

BlockRange component_direct(const ThetaDatum& td, int idx) {
    // Chain of constant mu left coordinates ending at the large block.
    KTypeWeight mu = mu_from_datum(td.datum);
    Offsets off = block_offsets(td.datum);
    long long a = mu.left[off.loff[idx]];
    int start = idx;
    while (start > 0 && td.datum.blocks[start - 1].r >= 1 &&
           mu.left[off.loff[start - 1]] == a)
        --start;
    return {start, idx};
}

}  // namespace

BlockRange semi_spherical_component(const ThetaDatum& td, int large_block) {
    check_theta(td);
    std::vector<int> large = lambda_large_blocks(td);
    if (std::find(large.begin(), large.end(), large_block) == large.end())
        throw ValidationError("semi_spherical_component: block is not lambda-large");
    if (needs_group_flip(td, large_block))
        return component_direct(flip_theta(td), large_block);
    if (td.datum.blocks[large_block].shape == BlockShape::ParallelogramUp) {
        // redirect to the down form of the same module for the chain walk
        ThetaDatum down = td;
        down.datum.blocks[large_block].shape = BlockShape::ParallelogramDown;
        return component_direct(down, large_block);
    }
    return component_direct(td, large_block);
}

namespace {

KTypeWeight shifted(const KTypeWeight& mu, int lpos, int ldelta, int rpos, int rdelta) {
    KTypeWeight w = mu;
    w.left[lpos] += ldelta;
    w.right[rpos] += rdelta;
    return w;
}

void push_unique(std::vector<Certificate>& certs, Certificate c) {
    for (const Certificate& e : certs)
        if (e.kind == c.kind && e.level == c.level && e.blocks == c.blocks &&
            e.witnesses == c.witnesses)
            return;
    certs.push_back(std::move(c));
}

// Indefinite pair for one parallelogram block carrying nu beyond the gap.
// The two directions name the same module, so whichever of the p- (down
// form) and p+ (up form) shifts stays dominant is used.
bool parallelogram_pair(const ThetaDatum& td, int bi, std::vector<Certificate>& certs) {
    Offsets off = block_offsets(td.datum);
    const Block& b = td.datum.blocks[bi];
    int fl = off.loff[bi], fr = off.roff[bi];

    LambdaDatum down = td.datum;
    down.blocks[bi].shape = BlockShape::ParallelogramDown;
    KTypeWeight mu_d = mu_from_datum(down);
    KTypeWeight comp = shifted(mu_d, fl + b.r - 1, -1, fr, +1);
    if (comp.dominant()) {
        push_unique(certs, {CertKind::CaseAParallelogram, Level::PMinus, {mu_d, comp}, {bi, bi}});
        return true;
    }
    LambdaDatum up = td.datum;
    up.blocks[bi].shape = BlockShape::ParallelogramUp;
    KTypeWeight mu_u = mu_from_datum(up);
    comp = shifted(mu_u, fl, +1, fr + b.s - 1, -1);
    if (comp.dominant()) {
        push_unique(certs, {CertKind::CaseAParallelogram, Level::PPlus, {mu_u, comp}, {bi, bi}});
        return true;
    }
    return false;
}

}  // namespace

std::vector<Certificate> certificate_case_a(const ThetaDatum& td) {
    check_theta(td);
    const auto& bl = td.datum.blocks;
    InfChar lam = assemble_inf_char(td);
    const RatVec& L = lam.coords;
    Offsets off = block_offsets(td.datum);
    KTypeWeight mu = mu_from_datum(td.datum);

    std::vector<Certificate> certs;
    for (size_t i = 0; i + 1 < L.size(); ++i) {
        if (!(Rational(1) < L[i] - L[i + 1])) continue;
        for (size_t bi = 0; bi < bl.size(); ++bi) {
            const Block& b = bl[bi];
            bool rect = b.shape == BlockShape::Rectangle;
            bool par = b.shape == BlockShape::ParallelogramDown ||
                       b.shape == BlockShape::ParallelogramUp;
            if (!rect && !par) continue;
            if (b.gamma < L[i + 1] || L[i] < b.gamma) continue;
            // nu must stride the whole gap
            Rational need = L[i] - b.gamma;
            if (need < b.gamma - L[i + 1]) need = b.gamma - L[i + 1];
            if (td.nus[bi].back() < need) continue;

            if (par) {
                parallelogram_pair(td, bi, certs);
                continue;
            }
            int fl = off.loff[bi], fr = off.roff[bi];
            KTypeWeight comp = shifted(mu, fl + b.r - 1, -1, fr, +1);
            if (comp.dominant()) {
                push_unique(certs, {CertKind::CaseARectangle, Level::PMinus, {mu, comp},
                                    {int(bi), int(bi)}});
                continue;
            }
            comp = shifted(mu, fl, +1, fr + b.s - 1, -1);
            if (comp.dominant()) {
                push_unique(certs, {CertKind::CaseARectangle, Level::PPlus, {mu, comp},
                                    {int(bi), int(bi)}});
                continue;
            }
            // Neither level passes only when the rectangle is wedged
            // between half-step neighbours; reduce to the parallelogram
            // neighbour strictly inside the gap.
            for (int nb : {int(bi) - 1, int(bi) + 1}) {
                if (nb < 0 || nb >= int(bl.size())) continue;
                const Block& nbb = bl[nb];
                if (nbb.shape != BlockShape::ParallelogramDown &&
                    nbb.shape != BlockShape::ParallelogramUp)
                    continue;
                if (!(L[i + 1] < nbb.gamma) || !(nbb.gamma < L[i])) continue;
                bool nonzero = !td.nus[nb].empty();
                for (const Rational& x : td.nus[nb])
                    if (x == Rational(0)) nonzero = false;
                if (nonzero && parallelogram_pair(td, nb, certs)) break;
            }
        }
    }
    return certs;
}

namespace {

// Dominant weights of LKT (x) p^+, i.e. mu + e_i - e_j over all positions.
std::vector<KTypeWeight> pplus_candidates(const ThetaDatum& td) {
    KTypeWeight mu = mu_from_datum(td.datum);
    std::vector<KTypeWeight> out;
    for (int li = 0; li < td.datum.sig.p; ++li) {
        for (int rj = 0; rj < td.datum.sig.q; ++rj) {
            KTypeWeight w = shifted(mu, li, +1, rj, -1);
            if (w.dominant() && std::find(out.begin(), out.end(), w) == out.end())
                out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

std::vector<Certificate> certificate_case_b(const ThetaDatum& td) {
    check_theta(td);

    // The gap hypothesis: some character coordinate sits more than one
    // above its successor and strictly above every content. Without it a
    // tall nu (the trivial representation, say) is not a case at all.
    InfChar lam = assemble_inf_char(td);
    Rational alpha = td.datum.blocks.empty() ? Rational(0) : td.datum.blocks.front().gamma;
    bool gap_above = false;
    for (size_t i = 0; i + 1 < lam.coords.size(); ++i)
        if (Rational(1) < lam.coords[i] - lam.coords[i + 1] && alpha < lam.coords[i])
            gap_above = true;

    std::vector<Certificate> certs;
    if (!gap_above) return certs;
    for (int i : lambda_large_blocks(td)) {
        BlockRange range = semi_spherical_component(td, i);
        if (needs_group_flip(td, i)) {
            std::vector<KTypeWeight> cands = pplus_candidates(flip_theta(td));
            for (KTypeWeight& w : cands) w = flip_weight(w);
            certs.push_back({CertKind::CaseBSemiSpherical, Level::PMinus, std::move(cands), range});
        } else {
            certs.push_back({CertKind::CaseBSemiSpherical, Level::PPlus, pplus_candidates(td), range});
        }
    }
    return certs;
}

ScreeningReport screen(const ThetaDatum& td, const ScreenOptions& opts) {
    check_theta(td);
    const Signature& sig = td.datum.sig;

    ScreeningReport rep;
    rep.inf_char = assemble_inf_char(td);
    rep.hermitian_ok = true;
    rep.notes.push_back("hermitian form exists: nu is stored as its symmetric nonnegative half");

    KTypeWeight mu = mu_from_datum(td.datum);
    rep.unitarily_small = is_unitarily_small(mu, sig);
    rep.fundamental = fundamental_partition(td.datum);
    rep.good_cuts = good_range_cuts(td);
    rep.fpp_applicable = rep.good_cuts.empty();

    FppResult fpp = fpp_gap_check(rep.inf_char);
    rep.fpp_pass = fpp.pass;
    rep.max_gap = fpp.max_gap;

    if (rep.fundamental.groups.size() <= 1) {
        Rational mean = vec_sum(rep.inf_char.coords) / Rational(sig.n());
        rep.lambda_u_center.assign(sig.n(), mean);
    } else {
        rep.lambda_u_center = compute_lambda_u(mu, sig);
    }
    rep.hull_pass = hull_check(rep.inf_char.coords, rep.lambda_u_center);

    rep.interlaced = interlaced(segments_of_partition(td, rep.fundamental.groups));

    rep.certificates = certificate_case_a(td);
    for (Certificate& c : certificate_case_b(td)) rep.certificates.push_back(std::move(c));

    if (opts.run_dirac) {
        if (sig.n() <= 20 || opts.force_dirac) {
            for (const LKTFamilyEntry& e : lkt_family(td)) {
                DiracResult dr = dirac_test(e.mu, rep.inf_char, sig, Level::PFull, opts.force_dirac);
                if (dr.violated) {
                    rep.dirac_violations.push_back({e.mu, Level::PFull, dr.best_norm_sq});
                    rep.certificates.push_back({CertKind::Dirac, Level::PFull, {e.mu}, {-1, -1}});
                }
            }
        } else {
            rep.notes.push_back("dirac test skipped: p+q exceeds the enumeration guard");
        }
    }

    if (!rep.good_cuts.empty()) {
        rep.verdict = Verdict::InducedInGoodRange;
        // Emit the parts split at every valid cut, for recursive screening.
        // Contents shift by the per-part rho(u) constant, which is what
        // makes each part a valid datum for its own sub-signature.
        std::vector<int> bounds{0};
        for (int c : rep.good_cuts) bounds.push_back(c);
        bounds.push_back(int(td.datum.blocks.size()));
        std::vector<long long> part_coords;
        for (size_t k = 0; k + 1 < bounds.size(); ++k) {
            long long cnt = 0;
            for (int i = bounds[k]; i < bounds[k + 1]; ++i) cnt += td.datum.blocks[i].coords();
            part_coords.push_back(cnt);
        }
        long long before = 0, total = 0;
        for (long long c : part_coords) total += c;
        for (size_t k = 0; k + 1 < bounds.size(); ++k) {
            long long after = total - before - part_coords[k];
            Rational shift = half(before - after);
            ThetaDatum part;
            int rs = 0, ss = 0;
            for (int i = bounds[k]; i < bounds[k + 1]; ++i) {
                Block b = td.datum.blocks[i];
                b.gamma += shift;
                part.datum.blocks.push_back(b);
                part.nus.push_back(td.nus[i]);
                rs += b.r;
                ss += b.s;
            }
            part.datum.sig = {rs, ss};
            rep.induced_inner.push_back(std::move(part));
            before += part_coords[k];
        }
    } else if (!rep.fpp_pass) {
        rep.verdict = Verdict::NonUnitaryByFPP;
    } else if (rep.unitarily_small && !rep.hull_pass) {
        rep.verdict = Verdict::NonUnitaryBySRVHull;
    } else if (rep.fundamental.groups.size() <= 1 && Rational(1) < rep.max_gap) {
        rep.verdict = Verdict::NonUnitaryByFundamentalGap;
    } else {
        rep.verdict = Verdict::NoObstructionFound;
    }
    return rep;
}

}  // namespace upq
