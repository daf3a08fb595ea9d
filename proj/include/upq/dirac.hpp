#pragma once

#include "upq/screening.hpp"

namespace upq {

struct DiracResult {
    bool violated = false;
    Rational best_norm_sq;
};

// Parthasarathy test. For PFull the scan ranges over all C(p+q, p)
// positive systems containing Delta+(k); each is an interleaving of the
// left and right coordinate slots. For PPlus/PMinus the half-sum is the
// fixed vector +/- (q/2,...,q/2 | -p/2,...,-p/2). violated means some
// choice gives a norm strictly below ||Lambda||^2.
DiracResult dirac_test(const KTypeWeight& mu, const InfChar& lam, const Signature& sig,
                       Level level, bool force = false);

// Reference single-thread scan, kept independent of the parallel kernel.
DiracResult dirac_scan_serial(const KTypeWeight& mu, const InfChar& lam, const Signature& sig);

// OpenMP scan over unranked combination blocks; identical result.
DiracResult dirac_scan_parallel(const KTypeWeight& mu, const InfChar& lam, const Signature& sig);

// Number of interleavings C(p+q, p).
unsigned long long dirac_choice_count(const Signature& sig);

}  // namespace upq
