#include "upq/theta.hpp"

#include <algorithm>

namespace upq {

std::vector<std::string> validate(const ThetaDatum& td) {
    std::vector<std::string> out = datum_violations(td.datum);
    if (td.nus.size() != td.datum.blocks.size()) {
        out.push_back("nu vector count != block count");
        return out;
    }
    for (size_t i = 0; i < td.nus.size(); ++i) {
        const RatVec& nu = td.nus[i];
        if (int(nu.size()) != td.datum.blocks[i].k()) {
            out.push_back("nu length mismatch");
            continue;
        }
        if (!weakly_decreasing(nu)) out.push_back("nu not weakly decreasing at block " + std::to_string(i));
        if (!nu.empty() && nu.back() < Rational(0))
            out.push_back("negative nu entry at block " + std::to_string(i));
    }
    return out;
}

void check_theta(const ThetaDatum& td) {
    auto v = validate(td);
    if (!v.empty()) throw ValidationError("invalid theta datum: " + v.front());
}

RatVec block_contribution(const Block& b, const RatVec& nu) {
    RatVec out;
    out.reserve(b.coords());
    for (const Rational& x : nu) {
        out.push_back(b.gamma + x);
        out.push_back(b.gamma - x);
    }
    int unpaired = b.r > b.s ? b.r - b.s : b.s - b.r;
    for (int t = 0; t < unpaired; ++t) out.push_back(b.gamma);
    return out;
}

InfChar assemble_inf_char(const ThetaDatum& td) {
    check_theta(td);
    RatVec all;
    all.reserve(td.datum.sig.n());
    for (size_t i = 0; i < td.datum.blocks.size(); ++i) {
        RatVec c = block_contribution(td.datum.blocks[i], td.nus[i]);
        all.insert(all.end(), c.begin(), c.end());
    }
    return InfChar{sorted_desc(std::move(all))};
}

namespace {

bool is_parallelogram(BlockShape s) {
    return s == BlockShape::ParallelogramDown || s == BlockShape::ParallelogramUp;
}

BlockShape flipped_par(BlockShape s) {
    return s == BlockShape::ParallelogramDown ? BlockShape::ParallelogramUp
                                              : BlockShape::ParallelogramDown;
}

}  // namespace

std::vector<LKTFamilyEntry> lkt_family(const ThetaDatum& td) {
    check_theta(td);
    std::vector<int> flippable;
    for (size_t i = 0; i < td.datum.blocks.size(); ++i) {
        if (!is_parallelogram(td.datum.blocks[i].shape)) continue;
        const RatVec& nu = td.nus[i];
        bool all_nonzero = !nu.empty();
        for (const Rational& x : nu)
            if (x == Rational(0)) all_nonzero = false;
        if (all_nonzero) flippable.push_back(int(i));
    }

    std::vector<LKTFamilyEntry> fam;
    size_t count = size_t(1) << flippable.size();
    fam.reserve(count);
    for (size_t mask = 0; mask < count; ++mask) {
        LambdaDatum d = td.datum;
        LKTFamilyEntry e;
        int sign = 1;
        for (size_t bit = 0; bit < flippable.size(); ++bit) {
            if (!(mask >> bit & 1)) continue;
            int bi = flippable[bit];
            d.blocks[bi].shape = flipped_par(d.blocks[bi].shape);
            e.flip_mask.push_back(bi);
            if (d.blocks[bi].r % 2 != 0) sign = -sign;
        }
        e.mu = mu_from_datum(d);
        e.epsilon_sign = sign;
        fam.push_back(std::move(e));
    }
    return fam;
}

ThetaDatum flip_theta(const ThetaDatum& td) { return {flip_datum(td.datum), td.nus}; }

ThetaDatum trivial_theta(const Signature& sig) {
    sig.check();
    KTypeWeight zero{std::vector<long long>(sig.p, 0), std::vector<long long>(sig.q, 0)};
    LambdaAResult la = compute_lambda_a(zero, sig);
    LambdaDatum d = datum_from_lambda_a(la, zero, sig);

    // rho entries not already present as bare contents pair up, symmetric
    // about the unique block that carries continuous parameters.
    RatVec leftover = rho(sig.n());
    for (const Block& b : d.blocks) {
        int unpaired = b.r > b.s ? b.r - b.s : b.s - b.r;
        for (int t = 0; t < unpaired; ++t) {
            auto it = std::find(leftover.begin(), leftover.end(), b.gamma);
            if (it == leftover.end())
                throw ValidationError("trivial_theta: content missing from rho");
            leftover.erase(it);
        }
    }

    ThetaDatum td;
    td.datum = d;
    td.nus.assign(d.blocks.size(), RatVec());
    int carrier = -1;
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        if (d.blocks[i].k() >= 1) {
            if (carrier >= 0) throw ValidationError("trivial_theta: several nu carriers");
            carrier = int(i);
        }
    }
    if (carrier >= 0) {
        const Block& b = d.blocks[size_t(carrier)];
        leftover = sorted_desc(std::move(leftover));
        if (int(leftover.size()) != 2 * b.k())
            throw ValidationError("trivial_theta: leftover does not fill the carrier block");
        RatVec nu;
        for (int j = 0; j < b.k(); ++j) nu.push_back(leftover[j] - b.gamma);
        for (int j = 0; j < b.k(); ++j)
            if (leftover[2 * b.k() - 1 - j] != b.gamma - nu[j])
                throw ValidationError("trivial_theta: leftover is not symmetric");
        td.nus[size_t(carrier)] = std::move(nu);
    } else if (!leftover.empty()) {
        throw ValidationError("trivial_theta: no block can absorb the nu coordinates");
    }

    if (!(assemble_inf_char(td).coords == rho(sig.n())))
        throw ValidationError("trivial_theta: character is not rho");
    return td;
}

}  // namespace upq
