#include "doctest.h"
#include "pingpong/moebius.hpp"

#include <random>

using namespace pp;

namespace {
const CirclePoint INF = CirclePoint::infinity();
const MoebiusMap F(4, 0, 0, 1), G(5, -3, -3, 5);
}  // namespace

TEST_CASE("canonical scaling") {
    MoebiusMap m(-2, 0, 0, -4);
    CHECK(m == MoebiusMap(1, 0, 0, 2));
    CHECK_THROWS(MoebiusMap(1, 2, 2, 4));
}

TEST_CASE("apply examples") {
    CHECK(apply(F, 1) == CirclePoint(4));
    CHECK(apply(F, INF) == INF);
    CHECK(apply(G, 0) == CirclePoint::rational(-3, 5));
    CHECK(apply(G, INF) == CirclePoint::rational(-5, 3));
    CHECK(apply(G, CirclePoint::rational(5, 3)) == INF);
    CHECK(apply(G, CirclePoint::rational(-1, 2)) == CirclePoint::rational(-11, 13));
    CHECK(apply(G, CirclePoint::rational(1, 2)) == CirclePoint::rational(-1, 7));
}

TEST_CASE("classify examples") {
    CHECK(classify(F) == MapClass::Hyperbolic);
    CHECK(classify(MoebiusMap(1, 1, 0, 1)) == MapClass::Parabolic);
    CHECK(classify(MoebiusMap(0, -1, 1, 0)) == MapClass::Elliptic);
    CHECK(classify(MoebiusMap(3, 0, 0, 3)) == MapClass::Identity);
}

TEST_CASE("fixed pair examples") {
    FixedPair f = fixed_pair(F);
    CHECK(f.attracting == INF);
    CHECK(f.repelling == CirclePoint(0));
    FixedPair g = fixed_pair(G);
    CHECK(g.attracting == CirclePoint(-1));
    CHECK(g.repelling == CirclePoint(1));
    FixedPair h = fixed_pair(MoebiusMap(1, 1, 1, 2));
    CHECK(h.attracting == CirclePoint(Surd(mpq_class(-1, 2), mpq_class(1, 2), 5)));
    CHECK(h.repelling == CirclePoint(Surd(mpq_class(-1, 2), mpq_class(-1, 2), 5)));
    CHECK_THROWS_AS(fixed_pair(MoebiusMap(1, 1, 0, 1)), NotHyperbolic);
}

TEST_CASE("shares_fixed_point and commutes examples") {
    CHECK(shares_fixed_point(MoebiusMap(2, 0, 0, 1), MoebiusMap(3, 0, 0, 1)));
    CHECK(shares_fixed_point(MoebiusMap(2, 0, 0, 1), MoebiusMap(1, 1, 0, 1)));
    CHECK_FALSE(shares_fixed_point(F, G));
    CHECK(commutes(G, power(G, 3)));
    CHECK_FALSE(commutes(F, G));
    CHECK(commutes(MoebiusMap(2, 0, 0, 1), MoebiusMap(3, 0, 0, 1)));
}

namespace {
MoebiusMap random_hyperbolic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e(-9, 9);
    for (;;) {
        long a = e(rng), b = e(rng), c = e(rng), d = e(rng);
        if (a * d - b * c <= 0) continue;
        MoebiusMap m(a, b, c, d);
        if (classify(m) == MapClass::Hyperbolic) return m;
    }
}
}  // namespace

TEST_CASE("fixed pair properties") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        MoebiusMap g = random_hyperbolic(rng);
        FixedPair fp = fixed_pair(g);
        CHECK(fp.attracting != fp.repelling);
        CHECK(apply(g, fp.attracting) == fp.attracting);
        CHECK(apply(g, fp.repelling) == fp.repelling);
        CHECK(fixed_pair(g.inverse()) == fp.swapped());
    }
}

TEST_CASE("iterates converge to the attracting point") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> e(-9, 9);
    for (int i = 0; i < 60; ++i) {
        MoebiusMap g = random_hyperbolic(rng);
        FixedPair fp = fixed_pair(g);
        CirclePoint x = e(rng);
        if (x == fp.attracting || x == fp.repelling) continue;
        MoebiusMap g8 = power(g, 8);
        // The arc from x to a(g) that avoids r(g) is nested under forward iteration.
        CirclePoint y = x;
        for (int k = 0; k < 8; ++k) {
            CirclePoint z = apply(g8, y);
            int side = circular_order(fp.repelling, y, fp.attracting);
            CHECK(circular_order(fp.repelling, z, fp.attracting) == side);
            CHECK(circular_order(y, z, fp.attracting) == side);
            y = z;
        }
    }
}

TEST_CASE("shared fixed points imply equal fixed sets for hyperbolic pairs") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        MoebiusMap g = random_hyperbolic(rng), h = random_hyperbolic(rng);
        FixedPair a = fixed_pair(g), b = fixed_pair(h);
        bool share = a.attracting == b.attracting || a.attracting == b.repelling || a.repelling == b.attracting ||
                     a.repelling == b.repelling;
        CHECK(shares_fixed_point(g, h) == share);
        if (commutes(g, h)) {
            CHECK(share);
            CHECK((a == b || a == b.swapped()));
        }
    }
}

TEST_CASE("maps preserve circular order") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> e(-30, 30);
    for (int i = 0; i < 2000; ++i) {
        MoebiusMap g = random_hyperbolic(rng);
        CirclePoint x = CirclePoint::rational(e(rng), 7), y = CirclePoint::rational(e(rng), 5), z = INF;
        CHECK(circular_order(apply(g, x), apply(g, y), apply(g, z)) == circular_order(x, y, z));
    }
}
