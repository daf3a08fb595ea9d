#include "upq/lambda_map.hpp"

namespace upq {

namespace {

struct Merged {
    RatVec values;
    std::vector<uint8_t> side;
    std::vector<std::pair<size_t, size_t>> ties;
};

// Stable descending merge of the two halves of mu + 2rho(k). On a cross
// tie the left entry goes first and the (left, right) index pair is
// recorded; within one side entries of mu + 2rho(k) are >= 2 apart, so
// cross ties are the only coincidences a dominant mu can produce.
Merged merge_weight(const KTypeWeight& mu, const Signature& sig) {
    RatVec tk = two_rho_k(sig);
    RatVec xs(sig.p), ys(sig.q);
    for (int i = 0; i < sig.p; ++i) xs[i] = Rational(mu.left[i]) + tk[i];
    for (int j = 0; j < sig.q; ++j) ys[j] = Rational(mu.right[j]) + tk[sig.p + j];

    Merged m;
    m.values.reserve(sig.n());
    size_t i = 0, j = 0;
    while (i < xs.size() || j < ys.size()) {
        if (j == ys.size() || (i < xs.size() && ys[j] < xs[i])) {
            m.values.push_back(xs[i]);
            m.side.push_back(0);
            ++i;
        } else if (i == xs.size() || xs[i] < ys[j]) {
            m.values.push_back(ys[j]);
            m.side.push_back(1);
            ++j;
        } else {
            m.ties.emplace_back(i, j);
            m.values.push_back(xs[i]);
            m.side.push_back(0);
            m.values.push_back(ys[j]);
            m.side.push_back(1);
            ++i;
            ++j;
        }
    }
    return m;
}

RatVec subtract_staggered(const RatVec& merged, int mult) {
    int n = int(merged.size());
    RatVec d(n);
    for (int i = 0; i < n; ++i) d[i] = merged[i] - half(mult * (n - 1 - 2 * i));
    return d;
}

void check_input(const KTypeWeight& mu, const Signature& sig) {
    sig.check();
    if (int(mu.left.size()) != sig.p || int(mu.right.size()) != sig.q)
        throw ValidationError("weight size does not match signature");
    if (!mu.dominant()) throw ValidationError("weight is not dominant");
}

}  // namespace

LambdaAResult compute_lambda_a(const KTypeWeight& mu, const Signature& sig) {
    check_input(mu, sig);
    Merged m = merge_weight(mu, sig);
    // Positional subtraction; the projection both realises the tie rule
    // (averaging a cross pair) and repairs anything residual.
    ProjectionResult proj = project_dominant(subtract_staggered(m.values, 1));

    LambdaAResult res;
    res.merged = proj.value;
    res.side = m.side;
    res.ties = m.ties;
    for (size_t k = 0; k < proj.value.size(); ++k)
        (m.side[k] == 0 ? res.left : res.right).push_back(proj.value[k]);
    return res;
}

RatVec compute_lambda_u(const KTypeWeight& mu, const Signature& sig) {
    check_input(mu, sig);
    Merged m = merge_weight(mu, sig);
    return project_dominant(subtract_staggered(m.values, 2)).value;
}

bool is_unitarily_small(const KTypeWeight& mu, const Signature& sig) {
    RatVec lu = compute_lambda_u(mu, sig);
    for (size_t i = 1; i < lu.size(); ++i)
        if (lu[i] != lu[0]) return false;
    return true;
}

}  // namespace upq
