#pragma once

#include "pingpong/surd.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

// Point of the projective line RP^1. Counterclockwise is increasing real value,
// with infinity between +inf and -inf.
class CirclePoint {
public:
    CirclePoint() = default;
    CirclePoint(const Surd& x) : x_(x) {}
    CirclePoint(long v) : x_(v) {}
    static CirclePoint infinity() {
        CirclePoint p;
        p.inf_ = true;
        return p;
    }
    static CirclePoint rational(long num, long den) { return CirclePoint(Surd(mpq_class(num, den))); }

    bool is_inf() const { return inf_; }
    const Surd& value() const;

    bool operator==(const CirclePoint& o) const { return inf_ == o.inf_ && (inf_ || x_ == o.x_); }
    bool operator!=(const CirclePoint& o) const { return !(*this == o); }

    std::string str() const { return inf_ ? "inf" : x_.str(); }
    double approx() const;

private:
    bool inf_ = false;
    Surd x_;
};

// Linear order on RP^1 cut just after infinity (infinity is the maximum). -1, 0, +1.
int line_compare(const CirclePoint& x, const CirclePoint& y);

int circular_order(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

struct DegeneratePoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool linked(const CirclePoint& a1, const CirclePoint& a2, const CirclePoint& b1, const CirclePoint& b2);

// Open arc from lo counterclockwise to hi.
struct Arc {
    CirclePoint lo, hi;
    Arc() = default;
    Arc(CirclePoint l, CirclePoint h);
    bool contains(const CirclePoint& z) const { return circular_order(lo, z, hi) == 1; }
    // z in the closed arc [lo, hi].
    bool closure_contains(const CirclePoint& z) const { return z == lo || z == hi || contains(z); }
    bool subset_of(const Arc& o) const;
    bool intersects(const Arc& o) const;
    bool operator==(const Arc& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const Arc& o) const { return !(*this == o); }
    std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
};

struct OverlapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class ArcSet {
public:
    ArcSet() = default;
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool empty() const { return arcs_.empty(); }
    std::size_t size() const { return arcs_.size(); }
    bool operator==(const ArcSet& o) const { return arcs_ == o.arcs_; }
    bool operator!=(const ArcSet& o) const { return !(*this == o); }
    std::string str() const;

    friend ArcSet normalize(std::vector<Arc> arcs);

private:
    std::vector<Arc> arcs_;
};

ArcSet normalize(std::vector<Arc> arcs);
bool contains(const ArcSet& s, const CirclePoint& z);
bool closure_contains(const ArcSet& s, const CirclePoint& z);
bool subset(const ArcSet& a, const ArcSet& b);
bool disjoint(const ArcSet& a, const ArcSet& b);
ArcSet subtract_closure(const ArcSet& a, const ArcSet& b);
ArcSet set_union(const ArcSet& a, const ArcSet& b);
ArcSet intersection(const ArcSet& a, const ArcSet& b);
bool covers_circle_closure(const ArcSet& s);
// Closures of possibly overlapping arcs cover the circle.
bool closures_cover(const std::vector<Arc>& arcs);

// x strictly before y when walking counterclockwise from origin (origin itself first).
bool cyclic_less_from(const CirclePoint& origin, const CirclePoint& x, const CirclePoint& y);

struct ChainLink {
    std::string name;
    CirclePoint point;
    bool strict;  // relation to the next link (the last one closes onto the first)
};
// First failing clause of a cyclic chain such as "p < u_q <= v_p < ...", or empty when it holds.
std::string failing_clause(const std::vector<ChainLink>& chain);

// Cyclic sort starting from the point right after infinity; infinity itself sorts last.
void sort_cyclic(std::vector<CirclePoint>& pts);

} // namespace pp
