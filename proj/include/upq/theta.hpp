#pragma once

#include <optional>

#include "upq/datum.hpp"

namespace upq {

// Continuous parameters: one weakly decreasing nonnegative vector of
// length min(r,s) per block. Only the nonnegative half is stored; the
// symmetric listing (nu_1, ..., nu_k, -nu_k, ..., -nu_1) is derived, which
// makes the invariant-Hermitian-form condition structural.
struct ThetaDatum {
    LambdaDatum datum;
    std::vector<RatVec> nus;

    friend bool operator==(const ThetaDatum&, const ThetaDatum&) = default;
};

std::vector<std::string> validate(const ThetaDatum& td);
void check_theta(const ThetaDatum& td);

// Infinitesimal character in sorted canonical form.
struct InfChar {
    RatVec coords;  // weakly decreasing

    friend bool operator==(const InfChar&, const InfChar&) = default;
};

// Per block: {gamma + nu_j, gamma - nu_j} plus gamma repeated |r-s| times;
// sorted descending over the whole datum.
InfChar assemble_inf_char(const ThetaDatum& td);

RatVec block_contribution(const Block& b, const RatVec& nu);

// One lowest K-type per admissible parallelogram flip pattern.
// epsilon_sign is relative to the unflipped entry; flipping one block of
// size (r,r) multiplies it by (-1)^r. Absent when not computed.
struct LKTFamilyEntry {
    KTypeWeight mu;
    std::vector<int> flip_mask;  // indices of flipped parallelogram blocks
    std::optional<int> epsilon_sign;
};

// All 2^k flips over parallelogram blocks whose nu entries are all nonzero
// (zero-nu parallelograms are distinct limits of discrete series and stay
// fixed). The unflipped datum comes first.
std::vector<LKTFamilyEntry> lkt_family(const ThetaDatum& td);

ThetaDatum flip_theta(const ThetaDatum& td);

// Datum of the trivial representation: the zero weight's blocks with the
// nu coordinates that make the character equal to rho(p+q).
ThetaDatum trivial_theta(const Signature& sig);

}  // namespace upq
