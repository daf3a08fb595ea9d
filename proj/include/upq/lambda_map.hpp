#pragma once

#include <cstdint>
#include <utility>

#include "upq/core.hpp"
#include "upq/projection.hpp"

namespace upq {

// lambda_a of a K-type, in aligned and in merged sorted form.
// side[i] tells which factor the i-th merged coordinate came from, and
// ties lists the (left index, right index) pairs that were averaged.
struct LambdaAResult {
    RatVec left;
    RatVec right;
    RatVec merged;               // weakly decreasing
    std::vector<uint8_t> side;   // 0 = left, 1 = right, per merged position
    std::vector<std::pair<size_t, size_t>> ties;
};

// Merge mu + 2rho(k) into one weakly decreasing sequence, subtract the
// staggered rho, project, and split back to (left | right).
LambdaAResult compute_lambda_a(const KTypeWeight& mu, const Signature& sig);

// Same pipeline with the doubled staggered vector; returns the merged
// weakly decreasing lambda_u.
RatVec compute_lambda_u(const KTypeWeight& mu, const Signature& sig);

// lambda_u is a single constant level set.
bool is_unitarily_small(const KTypeWeight& mu, const Signature& sig);

}  // namespace upq
