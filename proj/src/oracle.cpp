#include "upq/oracle.hpp"

namespace upq {
namespace oracle {

RatVec oracle_project(const RatVec& d) {
    size_t n = d.size();
    if (n == 0 || n > 8) throw GuardError("oracle_project: length must be in [1,8]");

    RatVec best;
    Rational best_dist;
    bool have = false;
    // Bit b of `cuts` set = a run boundary between positions b and b+1.
    for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        RatVec cand(n);
        size_t i = 0;
        bool feasible = true;
        Rational prev_mean;
        bool first_run = true;
        while (i < n) {
            size_t j = i;
            while (j + 1 < n && !(cuts >> j & 1)) ++j;
            Rational sum;
            for (size_t k = i; k <= j; ++k) sum += d[k];
            Rational mean = sum / Rational(static_cast<long long>(j - i + 1));
            if (!first_run && prev_mean < mean) {
                feasible = false;
                break;
            }
            for (size_t k = i; k <= j; ++k) cand[k] = mean;
            prev_mean = mean;
            first_run = false;
            i = j + 1;
        }
        if (!feasible) continue;
        Rational dist;
        for (size_t k = 0; k < n; ++k) {
            Rational diff = cand[k] - d[k];
            dist += diff * diff;
        }
        if (!have || dist < best_dist) {
            have = true;
            best_dist = dist;
            best = cand;
        }
    }
    return best;
}

bool oracle_hull(const RatVec& x, const RatVec& center) {
    if (x.size() != center.size()) throw ValidationError("oracle_hull: length mismatch");
    size_t n = x.size();
    if (n > 5) throw GuardError("oracle_hull: n must be <= 5");
    if (vec_sum(x) != vec_sum(center)) return false;

    RatVec diff(n);
    for (size_t i = 0; i < n; ++i) diff[i] = x[i] - center[i];
    RatVec r = rho(int(n));

    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Rational total;
        int sz = 0;
        for (size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                total += diff[i];
                ++sz;
            }
        }
        Rational bound;
        for (int k = 0; k < sz; ++k) bound += r[k];
        if (bound < total) return false;
    }
    return true;
}

std::vector<std::vector<BlockRange>> oracle_good_partitions(const ThetaDatum& td) {
    check_theta(td);
    int nb = int(td.datum.blocks.size());
    if (nb > 6) throw GuardError("oracle_good_partitions: at most 6 blocks");

    std::vector<std::vector<BlockRange>> out;
    for (unsigned cuts = 0; cuts < (1u << (nb - 1 < 0 ? 0 : nb - 1)); ++cuts) {
        std::vector<BlockRange> parts;
        int start = 0;
        for (int i = 0; i < nb; ++i) {
            if (i == nb - 1 || (cuts >> i & 1)) {
                parts.emplace_back(start, i);
                start = i + 1;
            }
        }
        std::vector<Segment> segs = segments_of_partition(td, parts);
        bool chain = true;
        for (size_t k = 0; k + 1 < segs.size(); ++k)
            if (!(segs[k + 1].e < segs[k].b)) chain = false;
        if (chain) out.push_back(std::move(parts));
    }
    return out;
}

}  // namespace oracle
}  // namespace upq
