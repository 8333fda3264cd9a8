#pragma once

#include "pingpong/moebius.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

enum class PointLabel { a_f, r_f, a_g, r_g, a_fg, r_fg, a_gf, r_gf };
const char* to_string(PointLabel l);

// Cyclic counterclockwise sequence of coincidence classes, rotated to start at the class of a_f.
struct EightPointWord {
    std::vector<std::vector<PointLabel>> classes;
    bool coincidence_free() const { return classes.size() == 8; }
    std::string str() const;
    bool operator==(const EightPointWord& o) const { return classes == o.classes; }
    bool operator<(const EightPointWord& o) const { return classes < o.classes; }
};

// The word obtained by exchanging the roles of f and g.
EightPointWord swap_roles(const EightPointWord& w);

struct PairClass {
    EightPointWord word;
    int row_hint = 0;  // 1, 2, 3, or 0 for unknown
    FixedPair f, g, fg, gf;
    // Row-1 containments; meaningful only when row_hint == 1.
    bool row1_attracting_ok = false;
    bool row1_repelling_ok = false;
};

struct CompositionNotHyperbolic : std::domain_error {
    using std::domain_error::domain_error;
};
struct SharedFixedPoint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Commuting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

PairClass classify_pair(const MoebiusMap& f, const MoebiusMap& g);

enum class CommutatorLabel { Geometric, NG1, NG2, NG3, NG4, Unmatched };
const char* to_string(CommutatorLabel l);

struct Inequality {
    std::string text;
    bool holds;
};

struct CommutatorClass {
    CommutatorLabel label = CommutatorLabel::Unmatched;
    // Commutators [f^-1,h^-1], [h,f^-1], [f,h], [h^-1,f] in this order.
    std::array<MoebiusMap, 4> commutators;
    std::array<FixedPair, 4> fixed;
    std::vector<Inequality> conjugacy;        // matrix identities and fixed-pair transport
    std::vector<Inequality> geometric;        // the cyclic 20-point chain
    std::array<std::vector<Inequality>, 4> nongeometric;  // chains I..IV with containments
    bool conjugacy_ok() const;
};

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CommutatorNotHyperbolic : std::domain_error {
    using std::domain_error::domain_error;
};

// p = r(h), pbar = a(h), q = r(f), qbar = a(f) must satisfy p < q < pbar < qbar.
CommutatorClass classify_commutator(const MoebiusMap& h, const MoebiusMap& f);

// Ordered-chain check: consecutive terms of x must be in counterclockwise cyclic order.
std::vector<Inequality> chain(const std::vector<std::pair<std::string, CirclePoint>>& x);

struct CensusResult {
    std::map<std::string, long> counts;         // keyed by EightPointWord::str()
    std::map<std::string, long> linked_counts;  // pairs with linked fixed pairs
    std::array<long, 4> rows{};                 // index = row_hint
    long samples = 0;
    long rejected = 0;
    long row1_pairs = 0;
    long row1_violations = 0;
    long coincidence_free_classes() const;
};

// Sample i draws from its own stream seeded by (seed, i), so the result does not depend on threading.
CensusResult census(long sample_count, std::uint64_t seed);

// One census draw: a valid pair for stream (seed, index).
std::pair<MoebiusMap, MoebiusMap> census_pair(std::uint64_t seed, std::uint64_t index, long* rejected = nullptr);

} // namespace pp
