#pragma once

#include <cstddef>
#include <utility>

#include "upq/rational.hpp"

namespace upq {

// Euclidean projection of a vector onto the weakly-decreasing cone.
// level_sets are the pooled runs, half-open [begin, end) index ranges;
// concatenated they cover the whole index range, and the projected value on
// each run is the mean of the input over that run.
struct ProjectionResult {
    RatVec value;
    std::vector<std::pair<size_t, size_t>> level_sets;
};

// Pool-adjacent-violators. Each maximal violating run collapses to its mean;
// the result is the unique closest weakly-decreasing vector.
ProjectionResult project_dominant(const RatVec& d);

}  // namespace upq
