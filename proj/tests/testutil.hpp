#pragma once

#include <random>

#include "upq/theta.hpp"

namespace upq::testutil {

inline RatVec rv(std::initializer_list<long long> xs) {
    RatVec v;
    for (long long x : xs) v.push_back(Rational(x));
    return v;
}

inline RatVec rvs(std::initializer_list<const char*> xs) {
    RatVec v;
    for (const char* x : xs) v.push_back(Rational::parse(x));
    return v;
}

inline KTypeWeight random_dominant(std::mt19937_64& rng, int p, int q, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    auto side = [&](int len) {
        std::vector<long long> v(len);
        for (auto& x : v) x = dist(rng);
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    };
    return {side(p), side(q)};
}

inline Signature random_sig(std::mt19937_64& rng, int max_n, int min_n = 2) {
    std::uniform_int_distribution<int> nd(min_n, max_n);
    int n = nd(rng);
    std::uniform_int_distribution<int> pd(1, n - 1);
    int p = pd(rng);
    return {p, n - p};
}

// Random theta datum reachable from a random dominant weight, with nu
// entries from a small half-integer palette.
inline ThetaDatum random_theta(std::mt19937_64& rng, int max_n, bool small_nu = false) {
    Signature sig = random_sig(rng, max_n);
    KTypeWeight mu = random_dominant(rng, sig.p, sig.q);
    LambdaDatum d = datum_from_lambda_a(compute_lambda_a(mu, sig), mu, sig);
    RatVec palette;
    if (small_nu)
        palette = {Rational(0), half(1), Rational(1)};
    else
        palette = {Rational(0), half(1), Rational(1), half(3), Rational(2), half(7)};
    ThetaDatum td;
    td.datum = d;
    std::uniform_int_distribution<size_t> pd(0, palette.size() - 1);
    for (const Block& b : d.blocks) {
        RatVec nu;
        for (int j = 0; j < b.k(); ++j) nu.push_back(palette[pd(rng)]);
        td.nus.push_back(sorted_desc(std::move(nu)));
    }
    return td;
}

}  // namespace upq::testutil
