#pragma once

#include "upq/rational.hpp"
#include "upq/types.hpp"

namespace upq {

// ((n-1)/2, (n-3)/2, ..., -(n-1)/2): strictly decreasing, sums to zero.
RatVec rho(int n);

// (p-1, p-3, ..., 1-p | q-1, q-3, ..., 1-q) in aligned (left | right) order.
RatVec two_rho_k(const Signature& sig);

// Squared length of mu + 2rho(k); the lowest-K-type ordering compares these.
Rational lkt_norm_sq(const KTypeWeight& mu);

// sum(a) == sum(b) and every prefix sum of sorted-descending b is bounded by
// the matching prefix sum of sorted-descending a.
bool majorizes(const RatVec& a, const RatVec& b);

}  // namespace upq
