#pragma once

#include <string>

#include "upq/lambda_map.hpp"

namespace upq {

// Block pictures have r top cells (the U(p) row) and s bottom cells.
// ParallelogramDown has its bottom row shifted right of the top row,
// ParallelogramUp is the mirror image.
enum class BlockShape {
    Rectangle,
    ParallelogramDown,
    ParallelogramUp,
    TrapezoidWideTop,     // r = s + 1
    TrapezoidWideBottom,  // s = r + 1
};

std::string shape_str(BlockShape s);
BlockShape shape_parse(const std::string& s);

struct Block {
    BlockShape shape = BlockShape::Rectangle;
    int r = 0;
    int s = 0;
    Rational gamma;

    int k() const { return r < s ? r : s; }   // number of nu coordinates
    int coords() const { return r + s; }

    friend bool operator==(const Block&, const Block&) = default;
};

// Content parity depends on epsilon = (p+q) mod 2: rectangles need
// gamma + eps/2 integral, parallelograms and trapezoids gamma + (eps+1)/2.
bool shape_size_ok(const Block& b);
bool parity_ok(const Block& b, int epsilon);

// Ordered blocks with strictly decreasing distinct contents,
// sum r = p and sum s = q.
struct LambdaDatum {
    Signature sig;
    std::vector<Block> blocks;

    friend bool operator==(const LambdaDatum&, const LambdaDatum&) = default;
};

std::vector<std::string> datum_violations(const LambdaDatum& d);
void check_datum(const LambdaDatum& d);  // throws ValidationError

// Group the equal-content runs of lambda_a into blocks; parallelogram
// direction is pinned by comparing mu against the two reconstruction
// patterns (they differ by one unit on the left coordinates).
LambdaDatum datum_from_lambda_a(const LambdaAResult& res, const KTypeWeight& mu,
                                const Signature& sig);

// Inverse direction: subtract rho(u) from each content, apply the
// parallelogram half-step, add 2rho(u cap p). Both correction vectors are
// computed positionally from block sizes alone.
KTypeWeight mu_from_datum(const LambdaDatum& d);

// All valid data with |gamma| <= content_bound, in a fixed DFS order
// (contents descending). Guarded at p+q <= 8 unless forced.
std::vector<LambdaDatum> enumerate_data(const Signature& sig, const Rational& content_bound,
                                        bool force = false);

// The same datum viewed in U(q,p): rows swapped, shapes mirrored.
LambdaDatum flip_datum(const LambdaDatum& d);
KTypeWeight flip_weight(const KTypeWeight& mu);

}  // namespace upq
