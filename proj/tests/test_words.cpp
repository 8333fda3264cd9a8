#include "doctest.h"
#include "pingpong/words.hpp"

#include <random>
#include <set>

using namespace pp;

namespace {

const Presentation TWO_CYCLIC = {{"H", {"h"}}, {"K", {"f"}}};
const Presentation ONE_RANK2 = {{"H", {"h1", "h2"}}};
const Presentation TWO_RANK2 = {{"H", {"h1", "h2"}}, {"K", {"f1", "f2"}}};
const Presentation MIXED = {{"H", {"h1", "h2"}}, {"K", {"f"}}, {"L", {"g"}}};

NormalWord W(const Presentation& p, const std::string& s) { return parse_word(s, p); }

// Independent oracle: reduce letter sequences by collecting per-factor exponent blocks.
std::vector<std::vector<long>> reduce_letters(const std::vector<std::pair<int, int>>& letters, const Presentation& pres) {
    // letter = (global generator index, +-1); output = flat blocks [factor, e_0..e_{rank-1}]
    std::vector<int> factor_of, slot_of;
    for (std::size_t f = 0; f < pres.size(); ++f)
        for (int i = 0; i < pres[f].rank(); ++i) {
            factor_of.push_back(static_cast<int>(f));
            slot_of.push_back(i);
        }
    std::vector<std::vector<long>> stack;
    for (auto [g, s] : letters) {
        int f = factor_of[g];
        if (!stack.empty() && stack.back()[0] == f) {
            stack.back()[1 + slot_of[g]] += s;
            bool zero = true;
            for (std::size_t k = 1; k < stack.back().size(); ++k) zero = zero && stack.back()[k] == 0;
            if (zero) stack.pop_back();
        } else {
            std::vector<long> b(1 + pres[f].rank(), 0);
            b[0] = f;
            b[1 + slot_of[g]] = s;
            stack.push_back(b);
        }
    }
    return stack;
}

std::size_t brute_force_count(const Presentation& pres, int radius) {
    int ngen = 0;
    for (auto& f : pres) ngen += f.rank();
    std::set<std::vector<std::vector<long>>> seen;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int)> rec = [&](int left) {
        auto r = reduce_letters(cur, pres);
        if (!r.empty()) seen.insert(r);
        if (left == 0) return;
        for (int g = 0; g < ngen; ++g)
            for (int s : {-1, 1}) {
                cur.push_back({g, s});
                rec(left - 1);
                cur.pop_back();
            }
    };
    rec(radius);
    return seen.size();
}

}  // namespace

TEST_CASE("multiply examples") {
    CHECK(multiply(W(TWO_CYCLIC, "h"), W(TWO_CYCLIC, "h^-1")).empty());
    CHECK(multiply(W(TWO_CYCLIC, "h f"), W(TWO_CYCLIC, "f^-1 h^2")) == W(TWO_CYCLIC, "h^3"));
    NormalWord u = syllable_word(0, {1, 1}), v = syllable_word(0, {-1, 0});
    CHECK(multiply(u, v) == syllable_word(0, {0, 1}));
}

TEST_CASE("word printing and parsing round-trip") {
    NormalWord w = W(TWO_RANK2, "h1^2 h2^-1 f1 f2^3 h1^-1");
    CHECK(to_string(w, TWO_RANK2) == "h1^2 h2^-1 f1 f2^3 h1^-1");
    CHECK(w.syllables.size() == 3);
    CHECK(w.length() == 8);
    CHECK(W(TWO_RANK2, "1").empty());
    CHECK_THROWS(W(TWO_RANK2, "z"));
    CHECK_THROWS(W(TWO_RANK2, "h1^x"));
}

TEST_CASE("ball counts") {
    CHECK(ball(TWO_CYCLIC, 1).size() == 4);
    CHECK(ball(TWO_CYCLIC, 2).size() == 16);
    CHECK(ball(ONE_RANK2, 2).size() == 12);
    CHECK_THROWS(ball(TWO_CYCLIC, 0));
}

TEST_CASE("ball matches brute force enumeration") {
    for (int r = 1; r <= 4; ++r) {
        CHECK(ball(TWO_CYCLIC, r).size() == brute_force_count(TWO_CYCLIC, r));
        CHECK(ball(ONE_RANK2, r).size() == brute_force_count(ONE_RANK2, r));
        CHECK(ball(TWO_RANK2, r).size() == brute_force_count(TWO_RANK2, r));
        CHECK(ball(MIXED, r).size() == brute_force_count(MIXED, r));
    }
}

TEST_CASE("ball order is (length, lex) and duplicate free") {
    auto b = ball(TWO_RANK2, 4);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    CHECK(b.front().length() == 1);
    CHECK(b.back().length() == 4);
}

TEST_CASE("group laws on random words") {
    std::mt19937_64 rng(21);
    auto b = ball(MIXED, 4);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        NormalWord x = b[pick(rng)], y = b[pick(rng)], z = b[pick(rng)];
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        CHECK(multiply(x, NormalWord{}) == x);
        CHECK(multiply(invert(x), x).empty());
    }
}

namespace {
const MoebiusMap F(4, 0, 0, 1), G(5, -3, -3, 5);
}

TEST_CASE("evaluate") {
    Assignment a = {{"h", F}, {"f", G}};
    CHECK(evaluate(NormalWord{}, TWO_CYCLIC, a) == MoebiusMap::identity());
    CHECK(evaluate(W(TWO_CYCLIC, "h"), TWO_CYCLIC, a) == F);
    CHECK(evaluate(W(TWO_CYCLIC, "f h f^-1 h^-1"), TWO_CYCLIC, a) == commutator(G, F));
    // G F = [[20,-3],[-12,5]]; times adj(G) = [[91,45],[-45,-11]]; times adj(F) = diag(1,4)
    CHECK(evaluate(W(TWO_CYCLIC, "f h f^-1 h^-1"), TWO_CYCLIC, a) == MoebiusMap(91, 180, -45, -44));
    Assignment bad = {{"h1", F}, {"h2", G}};
    CHECK_THROWS_AS(evaluate(W(ONE_RANK2, "h1"), ONE_RANK2, bad), FactorNotAbelian);
    CHECK_THROWS(evaluate(W(TWO_CYCLIC, "h"), TWO_CYCLIC, Assignment{}));
}

TEST_CASE("evaluate is a homomorphism") {
    Assignment a = {{"h1", F}, {"h2", power(F, 3)}, {"f", G}, {"g", MoebiusMap(2, 1, 1, 1)}};
    std::mt19937_64 rng(8);
    auto b = ball(MIXED, 3);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        NormalWord x = b[pick(rng)], y = b[pick(rng)];
        CHECK(evaluate(multiply(x, y), MIXED, a) == evaluate(x, MIXED, a) * evaluate(y, MIXED, a));
    }
}

TEST_CASE("certify_hyperbolic_like") {
    Presentation cyc = {{"H", {"h"}}};
    CHECK(certify_hyperbolic_like(cyc, {{"h", F}}, 8).certified);

    HLCertificate rot = certify_hyperbolic_like(TWO_CYCLIC, {{"h", F}, {"f", MoebiusMap(0, -1, 1, 0)}}, 1);
    CHECK_FALSE(rot.certified);
    CHECK(to_string(rot.witness, TWO_CYCLIC) == "f^-1");
    CHECK(rot.witness_class == MapClass::Elliptic);

    HLCertificate ref = certify_hyperbolic_like(TWO_CYCLIC, {{"h", F}, {"f", G}}, 6);
    CHECK_FALSE(ref.certified);
    CHECK(to_string(ref.witness, TWO_CYCLIC) == "h^-1 f^-1 h f");
    CHECK(ref.witness_class == MapClass::Elliptic);

    // Certification is monotone in the radius.
    Assignment sq = {{"h", power(F, 2)}, {"f", power(G, 2)}};
    HLCertificate c4 = certify_hyperbolic_like(TWO_CYCLIC, sq, 4);
    CHECK(c4.certified);
    for (int r = 1; r < 4; ++r) CHECK(certify_hyperbolic_like(TWO_CYCLIC, sq, r).certified);
}
