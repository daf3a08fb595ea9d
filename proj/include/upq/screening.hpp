#pragma once

#include "upq/theta.hpp"

namespace upq {

// Closed interval [b, e] spanned by one part of a partitioned
// infinitesimal character: e = largest coordinate, b = smallest.
struct Segment {
    Rational e;
    Rational b;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// Inclusive block index ranges.
using BlockRange = std::pair<int, int>;

// Maximal runs of blocks whose consecutive content gaps are <= 1.
struct FundamentalPartition {
    std::vector<BlockRange> groups;

    friend bool operator==(const FundamentalPartition&, const FundamentalPartition&) = default;
};

enum class CertKind { CaseAParallelogram, CaseARectangle, CaseBSemiSpherical, Dirac };

std::string cert_kind_str(CertKind k);

// K-types at which the Hermitian form is certified indefinite.
struct Certificate {
    CertKind kind = CertKind::Dirac;
    Level level = Level::PFull;
    std::vector<KTypeWeight> witnesses;
    BlockRange blocks{-1, -1};  // {-1,-1} when not tied to blocks
};

struct DiracViolation {
    KTypeWeight mu;
    Level level = Level::PFull;
    Rational best_norm_sq;
};

enum class Verdict {
    NoObstructionFound,
    NonUnitaryByFPP,
    NonUnitaryBySRVHull,
    NonUnitaryByFundamentalGap,
    InducedInGoodRange,
};

std::string verdict_str(Verdict v);

struct ScreeningReport {
    InfChar inf_char;
    bool hermitian_ok = false;
    bool unitarily_small = false;
    bool fpp_applicable = false;
    bool fpp_pass = false;
    Rational max_gap;
    bool hull_pass = false;
    RatVec lambda_u_center;
    std::vector<int> good_cuts;
    FundamentalPartition fundamental;
    bool interlaced = false;
    std::vector<DiracViolation> dirac_violations;
    std::vector<Certificate> certificates;
    Verdict verdict = Verdict::NoObstructionFound;
    std::vector<std::string> notes;
    std::vector<ThetaDatum> induced_inner;  // parts at the valid cuts
};

struct FppResult {
    bool pass = false;
    Rational max_gap;
};

// Every consecutive difference of the sorted character is <= 1.
FppResult fpp_gap_check(const InfChar& lam);

// lam lies in center + conv(W . rho): sums agree and the sorted difference
// vector is majorized by rho. Matches the subset-sum permutohedron test.
bool hull_check(const RatVec& lam, const RatVec& center);

FundamentalPartition fundamental_partition(const LambdaDatum& d);

std::vector<Segment> segments_of_partition(const ThetaDatum& td,
                                           const std::vector<BlockRange>& parts);

// Cut c splits blocks [0,c) | [c,end). Valid iff min of the left part's
// character exceeds the max of the right part's. Empty = fully supported.
std::vector<int> good_range_cuts(const ThetaDatum& td);

// Interval-intersection graph on the segments is connected.
bool interlaced(const std::vector<Segment>& segs);

// Can one box move across the given block union without leaving the
// dominant cone: PPlus raises the union's first left coordinate and lowers
// its last right one, PMinus mirrors. Absent neighbors never obstruct.
bool bottom_layer(const LambdaDatum& d, const BlockRange& range, Level level);

// Blocks whose top nu coordinate strictly exceeds every other character
// contribution and every content.
std::vector<int> lambda_large_blocks(const ThetaDatum& td);

// Longest admissible chain of blocks ending at the given lambda-large
// block; equivalently the run of constant mu coordinates through it (left
// coordinates for the upright shapes, right for the mirrored ones).
BlockRange semi_spherical_component(const ThetaDatum& td, int large_block);

// Witness pairs at >1 gaps bracketing a rectangle/parallelogram whose nu
// coordinates stride the gap.
std::vector<Certificate> certificate_case_a(const ThetaDatum& td);

// Candidate sets LKT (x) p^{+/-} over the semi-spherical component of each
// lambda-large block.
std::vector<Certificate> certificate_case_b(const ThetaDatum& td);

struct ScreenOptions {
    bool run_dirac = true;
    bool force_dirac = false;  // lift the p+q guard
};

ScreeningReport screen(const ThetaDatum& td, const ScreenOptions& opts = {});

}  // namespace upq
