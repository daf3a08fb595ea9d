#pragma once

#include "upq/screening.hpp"

namespace upq {
namespace oracle {

// Deterministic budgets for the brute-force fuzz drivers.
struct OracleBudget {
    int max_n = 5;
    int max_samples = 2000;
    unsigned long long rng_seed = 0x5eed;
};

// Exhaustive search over all ordered partitions of the index range into
// consecutive runs, each run set to its mean; returns the feasible
// candidate minimizing squared distance. Length <= 8.
RatVec oracle_project(const RatVec& d);

// Permutohedron membership of x - center by subset sums: every subset
// total is bounded by the sum of the largest |S| rho entries. n <= 5.
bool oracle_hull(const RatVec& x, const RatVec& center);

// Every ordered consecutive partition whose segments satisfy the strict
// chain e_1 >= b_1 > e_2 >= b_2 > ... At most 6 blocks.
std::vector<std::vector<BlockRange>> oracle_good_partitions(const ThetaDatum& td);

}  // namespace oracle
}  // namespace upq
