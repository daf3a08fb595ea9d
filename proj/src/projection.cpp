#include "upq/projection.hpp"

namespace upq {

namespace {

struct Pool {
    Rational sum;
    long long count = 0;
    size_t begin = 0;

    Rational mean() const { return sum / Rational(count); }
};

}  // namespace

ProjectionResult project_dominant(const RatVec& d) {
    std::vector<Pool> pools;
    pools.reserve(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        pools.push_back({d[i], 1, i});
        // Merge backwards while the tail pool exceeds its predecessor.
        while (pools.size() >= 2) {
            Pool& prev = pools[pools.size() - 2];
            Pool& last = pools.back();
            if (prev.mean() < last.mean()) {
                prev.sum += last.sum;
                prev.count += last.count;
                pools.pop_back();
            } else {
                break;
            }
        }
    }

    ProjectionResult res;
    res.value.reserve(d.size());
    for (const Pool& p : pools) {
        Rational m = p.mean();
        for (long long k = 0; k < p.count; ++k) res.value.push_back(m);
        res.level_sets.emplace_back(p.begin, p.begin + size_t(p.count));
    }
    return res;
}

}  // namespace upq
