#pragma once

#include <json.hpp>

#include "upq/screening.hpp"

namespace upq {

// Insertion-ordered JSON everywhere so that identical inputs always
// serialize to identical bytes.
using ojson = nlohmann::ordered_json;

ojson rat_json(const Rational& r);           // "a/b", "/1" omitted
Rational rat_from_json(const ojson& j);      // accepts "a/b" strings or integers

ojson weight_json(const KTypeWeight& mu);
KTypeWeight weight_from_json(const ojson& j);

ojson block_json(const Block& b);
Block block_from_json(const ojson& j);

ojson datum_json(const LambdaDatum& d);
LambdaDatum datum_from_json(const ojson& j);

ojson theta_json(const ThetaDatum& td);
ThetaDatum theta_from_json(const ojson& j);

ojson ratvec_json(const RatVec& v);
RatVec ratvec_from_json(const ojson& j);

ojson report_json(const ScreeningReport& rep);

// Screening request: either {"theta_datum": ...} or
// {"p":, "q":, "mu": {...}, "nu": [[...], ...]} with nu matched to the
// derived blocks that take continuous parameters, in content order.
ThetaDatum request_from_json(const ojson& j);

// Build a ThetaDatum from a weight plus per-block nu vectors. nus are
// assigned to the blocks with min(r,s) >= 1 in content order; an empty
// list means all-zero parameters.
ThetaDatum theta_from_mu(const Signature& sig, const KTypeWeight& mu,
                         const std::vector<RatVec>& nus);

}  // namespace upq
