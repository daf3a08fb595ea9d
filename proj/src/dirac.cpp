#include "upq/dirac.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace upq {

namespace {

void check_dirac_input(const KTypeWeight& mu, const InfChar& lam, const Signature& sig) {
    sig.check();
    if (int(mu.left.size()) != sig.p || int(mu.right.size()) != sig.q)
        throw ValidationError("dirac: weight size does not match signature");
    if (int(lam.coords.size()) != sig.n())
        throw ValidationError("dirac: infinitesimal character has wrong length");
    if (!mu.dominant()) throw ValidationError("dirac: weight is not dominant");
}

// ||{mu - rho(p)} + rho(k)||^2 for an explicit aligned rho(p).
Rational dirac_norm_sq(const KTypeWeight& mu, const RatVec& rho_p_left, const RatVec& rho_p_right,
                       const Signature& sig) {
    RatVec l(sig.p), r(sig.q);
    for (int i = 0; i < sig.p; ++i) l[i] = Rational(mu.left[i]) - rho_p_left[i];
    for (int j = 0; j < sig.q; ++j) r[j] = Rational(mu.right[j]) - rho_p_right[j];
    l = sorted_desc(std::move(l));
    r = sorted_desc(std::move(r));
    Rational s;
    for (int i = 0; i < sig.p; ++i) {
        Rational x = l[i] + half(sig.p - 1 - 2 * i);
        s += x * x;
    }
    for (int j = 0; j < sig.q; ++j) {
        Rational y = r[j] + half(sig.q - 1 - 2 * j);
        s += y * y;
    }
    return s;
}

bool advance_combination(std::vector<int>& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

unsigned long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Combination of given rank in lexicographic order (combinatorial number
// system), slots ascending.
std::vector<int> unrank_combination(int n, int k, unsigned long long rank) {
    std::vector<int> c(k);
    int slot = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            unsigned long long block = binom(n - slot - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++slot;
        }
        c[i] = slot++;
    }
    return c;
}

}  // namespace

unsigned long long dirac_choice_count(const Signature& sig) { return binom(sig.n(), sig.p); }

DiracResult dirac_scan_serial(const KTypeWeight& mu, const InfChar& lam, const Signature& sig) {
    check_dirac_input(mu, lam, sig);
    int n = sig.n(), p = sig.p, q = sig.q;
    RatVec rho_g = rho(n);
    RatVec tk = two_rho_k(sig);

    std::vector<int> slots(p);
    for (int i = 0; i < p; ++i) slots[i] = i;

    Rational best;
    bool first = true;
    do {
        RatVec rp_l(p), rp_r(q);
        std::vector<char> is_left(n, 0);
        for (int i = 0; i < p; ++i) {
            is_left[slots[i]] = 1;
            rp_l[i] = rho_g[slots[i]] - tk[i] / Rational(2);
        }
        int j = 0;
        for (int m = 0; m < n; ++m) {
            if (is_left[m]) continue;
            rp_r[j] = rho_g[m] - tk[p + j] / Rational(2);
            ++j;
        }
        Rational v = dirac_norm_sq(mu, rp_l, rp_r, sig);
        if (first || v < best) {
            best = v;
            first = false;
        }
    } while (advance_combination(slots, n));

    Rational target = vec_norm_sq(lam.coords);
    return {best < target, best};
}

DiracResult dirac_scan_parallel(const KTypeWeight& mu, const InfChar& lam, const Signature& sig) {
    check_dirac_input(mu, lam, sig);
    int n = sig.n(), p = sig.p, q = sig.q;

    // Everything in the scan lives in (1/2)Z; run it in doubled integers
    // and rescale once at the end.
    std::vector<long long> mu2l(p), mu2r(q), rk2l(p), rk2r(q), rg2(n);
    for (int i = 0; i < p; ++i) mu2l[i] = 2 * mu.left[i];
    for (int j = 0; j < q; ++j) mu2r[j] = 2 * mu.right[j];
    for (int i = 0; i < p; ++i) rk2l[i] = p - 1 - 2 * i;
    for (int j = 0; j < q; ++j) rk2r[j] = q - 1 - 2 * j;
    for (int m = 0; m < n; ++m) rg2[m] = n - 1 - 2 * m;

    unsigned long long total = binom(n, p);
    long long best4 = INT64_MAX;

#ifdef _OPENMP
#pragma omp parallel reduction(min : best4)
#endif
    {
        int nthreads = 1, tid = 0;
#ifdef _OPENMP
        nthreads = omp_get_num_threads();
        tid = omp_get_thread_num();
#endif
        unsigned long long lo = total * tid / nthreads;
        unsigned long long hi = total * (tid + 1) / nthreads;
        if (lo < hi) {
            std::vector<int> slots = unrank_combination(n, p, lo);
            std::vector<long long> vl(p), vr(q);
            std::vector<char> is_left(n);
            for (unsigned long long r = lo; r < hi; ++r) {
                std::fill(is_left.begin(), is_left.end(), 0);
                for (int i = 0; i < p; ++i) {
                    is_left[slots[i]] = 1;
                    vl[i] = mu2l[i] - rg2[slots[i]] + rk2l[i];
                }
                int j = 0;
                for (int m = 0; m < n; ++m) {
                    if (is_left[m]) continue;
                    vr[j] = mu2r[j] - rg2[m] + rk2r[j];
                    ++j;
                }
                std::sort(vl.begin(), vl.end(), std::greater<>());
                std::sort(vr.begin(), vr.end(), std::greater<>());
                long long norm4 = 0;
                for (int i = 0; i < p; ++i) {
                    long long x = vl[i] + rk2l[i];
                    norm4 += x * x;
                }
                for (int jj = 0; jj < q; ++jj) {
                    long long y = vr[jj] + rk2r[jj];
                    norm4 += y * y;
                }
                if (norm4 < best4) best4 = norm4;
                if (r + 1 < hi) advance_combination(slots, n);
            }
        }
    }

    Rational best = Rational(best4, 4);
    Rational target = vec_norm_sq(lam.coords);
    return {best < target, best};
}

DiracResult dirac_test(const KTypeWeight& mu, const InfChar& lam, const Signature& sig,
                       Level level, bool force) {
    check_dirac_input(mu, lam, sig);
    Rational target = vec_norm_sq(lam.coords);

    if (level == Level::PPlus || level == Level::PMinus) {
        int sgn = level == Level::PPlus ? 1 : -1;
        RatVec rp_l(sig.p, half(sgn * sig.q));
        RatVec rp_r(sig.q, half(-sgn * sig.p));
        Rational v = dirac_norm_sq(mu, rp_l, rp_r, sig);
        return {v < target, v};
    }

    if (sig.n() > 20 && !force)
        throw GuardError("dirac_test: p+q > 20 (pass force to override)");
#ifdef _OPENMP
    if (dirac_choice_count(sig) >= 4096) return dirac_scan_parallel(mu, lam, sig);
#endif
    return dirac_scan_serial(mu, lam, sig);
}

}  // namespace upq
