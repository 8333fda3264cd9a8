#pragma once

#include "pingpong/circle.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pp {

// x -> (ax+b)/(cx+d) with integer entries and ad - bc > 0, stored in canonical scaling.
class MoebiusMap {
public:
    MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
    MoebiusMap(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d);

    static MoebiusMap identity() { return {}; }

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }
    mpz_class det() const { return a_ * d_ - b_ * c_; }
    mpz_class trace() const { return a_ + d_; }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }
    friend MoebiusMap operator*(const MoebiusMap& x, const MoebiusMap& y);

    bool operator==(const MoebiusMap& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const MoebiusMap& o) const { return !(*this == o); }
    bool is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

    std::string str() const;

private:
    mpz_class a_, b_, c_, d_;
};

MoebiusMap power(const MoebiusMap& g, long n);

CirclePoint apply(const MoebiusMap& g, const CirclePoint& x);

enum class MapClass { Identity, Elliptic, Parabolic, Hyperbolic };
const char* to_string(MapClass c);
MapClass classify(const MoebiusMap& g);

struct FixedPair {
    CirclePoint attracting, repelling;
    FixedPair swapped() const { return {repelling, attracting}; }
    bool operator==(const FixedPair& o) const { return attracting == o.attracting && repelling == o.repelling; }
};

struct NotHyperbolic : std::domain_error {
    using std::domain_error::domain_error;
};

FixedPair fixed_pair(const MoebiusMap& g);

// Commutator g h g^-1 h^-1.
MoebiusMap commutator(const MoebiusMap& g, const MoebiusMap& h);
bool shares_fixed_point(const MoebiusMap& g, const MoebiusMap& h);
bool commutes(const MoebiusMap& g, const MoebiusMap& h);

} // namespace pp
