#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace upq;
using namespace upq::testutil;

namespace {

ThetaDatum gapped_u54() {
    ThetaDatum td;
    td.datum.sig = {5, 4};
    td.datum.blocks = {{BlockShape::ParallelogramUp, 1, 1, Rational(1)},
                       {BlockShape::Rectangle, 1, 1, half(1)},
                       {BlockShape::TrapezoidWideTop, 2, 1, Rational(0)},
                       {BlockShape::Rectangle, 1, 1, half(-1)}};
    td.nus = {{Rational(0)}, {half(1)}, {Rational(0)}, {half(7)}};
    return td;
}

}  // namespace

TEST_CASE("character assembly golden cases") {
    CHECK(assemble_inf_char(gapped_u54()).coords ==
          rv({3, 1, 1, 1, 0, 0, 0, 0, -4}));

    ThetaDatum triv62;
    triv62.datum.sig = {6, 2};
    triv62.datum.blocks = {{BlockShape::TrapezoidWideTop, 1, 0, half(3)},
                           {BlockShape::TrapezoidWideTop, 1, 0, half(1)},
                           {BlockShape::Rectangle, 2, 2, Rational(0)},
                           {BlockShape::TrapezoidWideTop, 1, 0, half(-1)},
                           {BlockShape::TrapezoidWideTop, 1, 0, half(-3)}};
    triv62.nus = {{}, {}, {half(7), half(5)}, {}, {}};
    CHECK(assemble_inf_char(triv62).coords == rho(8));

    // all-zero nu: contents with multiplicity r+s
    ThetaDatum z;
    z.datum.sig = {2, 1};
    z.datum.blocks = {{BlockShape::TrapezoidWideTop, 2, 1, Rational(1)}};
    z.nus = {{Rational(0)}};
    CHECK(assemble_inf_char(z).coords == rv({1, 1, 1}));
}

TEST_CASE("trivial_theta matches the recorded small-group data") {
    ThetaDatum t52 = trivial_theta({5, 2});
    CHECK(t52.datum.blocks.size() == 3);
    CHECK(t52.datum.blocks[1].gamma == Rational(0));
    CHECK(t52.nus[1] == rv({3, 2}));
    CHECK(assemble_inf_char(t52).coords == rho(7));

    for (int p = 1; p <= 6; ++p)
        for (int q = 0; q <= 3; ++q)
            if (p + q >= 1) CHECK(assemble_inf_char(trivial_theta({p, q})).coords == rho(p + q));
}

TEST_CASE("validation reports nu problems as data") {
    ThetaDatum td = gapped_u54();
    CHECK(validate(td).empty());

    td.nus[3] = {half(7), half(5)};  // rectangle of size (1,1) takes one entry
    auto v = validate(td);
    CHECK(std::find(v.begin(), v.end(), "nu length mismatch") != v.end());

    td = gapped_u54();
    td.datum.blocks[1].gamma = Rational(1);  // duplicate content
    v = validate(td);
    bool found = false;
    for (const auto& s : v)
        if (s == "contents not distinct") found = true;
    CHECK(found);

    td = gapped_u54();
    td.nus[1] = {half(-1)};
    CHECK(!validate(td).empty());
}

TEST_CASE("lkt family of the U(1,1) parallelogram") {
    for (long long k : {0LL, 3LL}) {
        ThetaDatum td;
        td.datum.sig = {1, 1};
        td.datum.blocks = {{BlockShape::ParallelogramDown, 1, 1, half(2 * k + 1)}};

        td.nus = {{Rational(1)}};
        auto fam = lkt_family(td);
        REQUIRE(fam.size() == 2);
        CHECK(fam[0].mu == KTypeWeight{{k + 1}, {k}});
        CHECK(fam[1].mu == KTypeWeight{{k}, {k + 1}});
        CHECK(fam[0].epsilon_sign.value() == 1);
        CHECK(fam[1].epsilon_sign.value() == -1);  // r = 1 is odd

        td.nus = {{Rational(0)}};
        fam = lkt_family(td);
        REQUIRE(fam.size() == 1);
        CHECK(fam[0].mu == KTypeWeight{{k + 1}, {k}});
    }
}

TEST_CASE("family without parallelograms is a singleton") {
    ThetaDatum td;
    td.datum.sig = {2, 1};
    td.datum.blocks = {{BlockShape::TrapezoidWideTop, 2, 1, Rational(0)}};
    td.nus = {{half(3)}};
    auto fam = lkt_family(td);
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].flip_mask.empty());
}

TEST_CASE("family size and flip invariance of the character") {
    std::mt19937_64 rng(606);
    for (int it = 0; it < 500; ++it) {
        ThetaDatum td = random_theta(rng, 7);
        size_t k = 0;
        for (size_t i = 0; i < td.datum.blocks.size(); ++i) {
            BlockShape s = td.datum.blocks[i].shape;
            if (s != BlockShape::ParallelogramDown && s != BlockShape::ParallelogramUp) continue;
            bool nz = !td.nus[i].empty();
            for (const Rational& x : td.nus[i])
                if (x == Rational(0)) nz = false;
            if (nz) ++k;
        }
        auto fam = lkt_family(td);
        CHECK(fam.size() == (size_t(1) << k));
        InfChar lam = assemble_inf_char(td);
        for (const auto& e : fam) {
            ThetaDatum g = td;
            for (int bi : e.flip_mask)
                g.datum.blocks[bi].shape = g.datum.blocks[bi].shape == BlockShape::ParallelogramDown
                                               ? BlockShape::ParallelogramUp
                                               : BlockShape::ParallelogramDown;
            CHECK(assemble_inf_char(g) == lam);
        }
    }
}

TEST_CASE("epsilon signs differ across an odd flip, agree across an even one") {
    ThetaDatum odd;
    odd.datum.sig = {2, 2};
    odd.datum.blocks = {{BlockShape::ParallelogramDown, 1, 1, half(3)},
                        {BlockShape::ParallelogramDown, 1, 1, half(-1)}};
    odd.nus = {{Rational(1)}, {Rational(2)}};
    auto fam = lkt_family(odd);
    REQUIRE(fam.size() == 4);
    for (const auto& e : fam) {
        int expect = e.flip_mask.size() % 2 == 0 ? 1 : -1;
        CHECK(e.epsilon_sign.value() == expect);
    }

    ThetaDatum even;
    even.datum.sig = {2, 2};
    even.datum.blocks = {{BlockShape::ParallelogramDown, 2, 2, half(1)}};
    even.nus = {{Rational(2), Rational(1)}};
    fam = lkt_family(even);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].epsilon_sign.value() == fam[1].epsilon_sign.value());
}

TEST_CASE("character restricted to zero nu equals the lambda_a multiset") {
    std::mt19937_64 rng(8080);
    for (int it = 0; it < 200; ++it) {
        ThetaDatum td = random_theta(rng, 7);
        ThetaDatum zeroed = td;
        for (auto& nu : zeroed.nus) std::fill(nu.begin(), nu.end(), Rational(0));
        KTypeWeight mu = mu_from_datum(td.datum);
        RatVec la = compute_lambda_a(mu, td.datum.sig).merged;
        CHECK(assemble_inf_char(zeroed).coords == la);
    }
}
