#include "upq/core.hpp"

#include <stdexcept>

namespace upq {

std::string level_str(Level l) {
    switch (l) {
        case Level::PPlus: return "p_plus";
        case Level::PMinus: return "p_minus";
        case Level::PFull: return "p_full";
    }
    return "?";
}

RatVec rho(int n) {
    if (n < 1) throw ValidationError("rho: n must be >= 1");
    RatVec v(n);
    for (int i = 0; i < n; ++i) v[i] = half(n - 1 - 2 * i);
    return v;
}

RatVec two_rho_k(const Signature& sig) {
    sig.check();
    RatVec v;
    v.reserve(sig.n());
    for (int i = 0; i < sig.p; ++i) v.push_back(Rational(sig.p - 1 - 2 * i));
    for (int j = 0; j < sig.q; ++j) v.push_back(Rational(sig.q - 1 - 2 * j));
    return v;
}

Rational lkt_norm_sq(const KTypeWeight& mu) {
    Signature sig = mu.sig();
    RatVec tk = two_rho_k(sig);
    Rational s;
    for (int i = 0; i < sig.p; ++i) {
        Rational x = Rational(mu.left[i]) + tk[i];
        s += x * x;
    }
    for (int j = 0; j < sig.q; ++j) {
        Rational y = Rational(mu.right[j]) + tk[sig.p + j];
        s += y * y;
    }
    return s;
}

bool majorizes(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ValidationError("majorizes: length mismatch");
    if (vec_sum(a) != vec_sum(b)) return false;
    RatVec sa = sorted_desc(a), sb = sorted_desc(b);
    Rational pa, pb;
    for (size_t i = 0; i < sa.size(); ++i) {
        pa += sa[i];
        pb += sb[i];
        if (pa < pb) return false;
    }
    return true;
}

}  // namespace upq
