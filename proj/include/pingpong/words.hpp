#pragma once

#include "pingpong/moebius.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

struct FactorSpec {
    std::string id;
    std::vector<std::string> generators;  // rank = generators.size()
    int rank() const { return static_cast<int>(generators.size()); }
};

using Presentation = std::vector<FactorSpec>;

struct Syllable {
    int factor;               // index into the presentation
    std::vector<long> exps;   // nonzero vector of length rank
    long mass() const;
    bool operator==(const Syllable& o) const { return factor == o.factor && exps == o.exps; }
    bool operator<(const Syllable& o) const { return factor != o.factor ? factor < o.factor : exps < o.exps; }
};

// Reduced word in the free product: adjacent syllables lie in different factors.
struct NormalWord {
    std::vector<Syllable> syllables;
    bool empty() const { return syllables.empty(); }
    long length() const;  // total l1 exponent mass
    bool operator==(const NormalWord& o) const { return syllables == o.syllables; }
    bool operator!=(const NormalWord& o) const { return !(*this == o); }
    // Order by (length, lexicographic).
    bool operator<(const NormalWord& o) const;
};

NormalWord syllable_word(int factor, std::vector<long> exps);
NormalWord generator_word(const Presentation& pres, const std::string& gen, long exp = 1);
NormalWord multiply(const NormalWord& u, const NormalWord& v);
NormalWord invert(const NormalWord& w);

std::string to_string(const NormalWord& w, const Presentation& pres);
// Tokens "gen" or "gen^k" separated by spaces; "1" or "" is the identity.
NormalWord parse_word(const std::string& text, const Presentation& pres);

// All nontrivial words of length <= radius, ordered by (length, lexicographic).
std::vector<NormalWord> ball(const Presentation& pres, int radius);
// Words of one factor only: nonzero exponent vectors with l1 norm <= radius.
std::vector<NormalWord> factor_ball(const Presentation& pres, int factor, int radius);

struct FactorNotAbelian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Assignment = std::map<std::string, MoebiusMap>;

MoebiusMap evaluate(const NormalWord& w, const Presentation& pres, const Assignment& assignment);

struct HLCertificate {
    int radius = 0;
    bool certified = false;
    NormalWord witness;
    MapClass witness_class = MapClass::Hyperbolic;
    long words_checked = 0;
};

HLCertificate certify_hyperbolic_like(const Presentation& pres, const Assignment& assignment, int radius);

} // namespace pp
