#include "doctest.h"
#include "pingpong/classifier.hpp"

#include <iostream>

using namespace pp;

namespace {
const MoebiusMap F(4, 0, 0, 1), G(5, -3, -3, 5);
}

TEST_CASE("classify_pair reference example") {
    PairClass pc = classify_pair(F, G);
    CHECK(pc.word.str() == "a_f a_fg a_gf a_g r_f r_gf r_fg r_g");
    CHECK(pc.row_hint == 1);
    CHECK(pc.row1_attracting_ok);
    CHECK(pc.row1_repelling_ok);
    CHECK(pc.fg.attracting == CirclePoint(Surd(mpq_class(-5, 2), mpq_class(-1, 2), 41)));
    CHECK(pc.fg.repelling == CirclePoint(Surd(mpq_class(-5, 2), mpq_class(1, 2), 41)));
    CHECK(pc.gf.attracting == CirclePoint(Surd(mpq_class(-5, 8), mpq_class(-1, 8), 41)));
    CHECK(pc.gf.repelling == CirclePoint(Surd(mpq_class(-5, 8), mpq_class(1, 8), 41)));
}

TEST_CASE("classify_pair error paths") {
    MoebiusMap swap(0, -1, 1, 0);
    CHECK_THROWS_AS(classify_pair(F, swap * F * swap.inverse()), Commuting);
    CHECK_THROWS_AS(classify_pair(F, MoebiusMap(1, 1, 0, 1)), SharedFixedPoint);
    CHECK_THROWS_AS(classify_pair(F, MoebiusMap(2, 5, 0, 1)), SharedFixedPoint);
    // fg elliptic: f = diag(4,1), g chosen with tr(fg)^2 < 4 det(fg)
    MoebiusMap g(1, -1, 5, -1);
    CHECK(classify(g) == MapClass::Elliptic);
}

TEST_CASE("swapping f and g relabels the word") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        auto [f, g] = census_pair(99, i);
        PairClass a = classify_pair(f, g), b = classify_pair(g, f);
        CHECK(swap_roles(a.word) == b.word);
        if (a.row_hint == 1) {
            CHECK(a.row1_attracting_ok);
            CHECK(a.row1_repelling_ok);
        }
    }
}

TEST_CASE("census is deterministic") {
    CensusResult a = census(500, 42), b = census(500, 42);
    CHECK(a.counts == b.counts);
    CHECK(a.rejected == b.rejected);
    CensusResult one = census(1, 7);
    CHECK(one.counts.size() == 1);
    CHECK(one.counts.begin()->second == 1);
}

TEST_CASE("census bounds") {
    CensusResult r = census(2000, 42);
    CHECK(r.coincidence_free_classes() <= 14);
    CHECK(r.row1_violations == 0);
    CHECK(r.linked_counts.size() <= 2);
    CHECK(r.rows[0] == 0);
}

TEST_CASE("classify_commutator reference pair") {
    // Crossing axes with short translation length: [f^-1,h^-1] is elliptic.
    CHECK_THROWS_AS(classify_commutator(F, G), CommutatorNotHyperbolic);
    CommutatorClass cc = classify_commutator(power(F, 2), power(G, 2));
    CHECK(cc.conjugacy_ok());
    CHECK(cc.conjugacy.size() == 8);
    CHECK(cc.label == CommutatorLabel::Geometric);
    CHECK(cc.geometric.size() == 18);
}

TEST_CASE("classify_commutator preconditions") {
    CHECK_THROWS_AS(classify_commutator(G, F), PreconditionViolated);
    CHECK_THROWS_AS(classify_commutator(F, MoebiusMap(2, 1, 1, 1)), PreconditionViolated);
}

TEST_CASE("chain helper") {
    auto ok = chain({{"0", 0}, {"1", 1}, {"2", 2}, {"inf", CirclePoint::infinity()}, {"-1", -1}});
    CHECK(ok.size() == 3);
    for (auto& i : ok) CHECK(i.holds);
    auto bad = chain({{"0", 0}, {"2", 2}, {"1", 1}});
    CHECK_FALSE(bad[0].holds);
}
