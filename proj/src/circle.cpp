#include "pingpong/circle.hpp"

#include <algorithm>
#include <cmath>

namespace pp {

const Surd& CirclePoint::value() const {
    if (inf_) throw std::logic_error("CirclePoint: infinity has no finite value");
    return x_;
}

double CirclePoint::approx() const { return inf_ ? HUGE_VAL : x_.approx(); }

int line_compare(const CirclePoint& x, const CirclePoint& y) {
    if (x.is_inf()) return y.is_inf() ? 0 : 1;
    if (y.is_inf()) return -1;
    return compare(x.value(), y.value());
}

int circular_order(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
    int xy = line_compare(x, y), yz = line_compare(y, z), zx = line_compare(z, x);
    if (xy == 0 || yz == 0 || zx == 0) return 0;
    // Cyclic rotations of an increasing triple are counterclockwise.
    if ((xy < 0 && yz < 0) || (yz < 0 && zx < 0) || (zx < 0 && xy < 0)) return 1;
    return -1;
}

bool linked(const CirclePoint& a1, const CirclePoint& a2, const CirclePoint& b1, const CirclePoint& b2) {
    const CirclePoint* pts[4] = {&a1, &a2, &b1, &b2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw DegeneratePoints("linked: coincident points");
    return circular_order(a1, b1, a2) != circular_order(a1, b2, a2);
}

Arc::Arc(CirclePoint l, CirclePoint h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo == hi) throw std::invalid_argument("Arc: endpoints coincide");
}

bool Arc::subset_of(const Arc& o) const {
    bool lo_ok = lo == o.lo || o.contains(lo);
    bool hi_ok = hi == o.hi || o.contains(hi);
    if (!lo_ok || !hi_ok) return false;
    if (lo == o.lo || hi == o.hi) return true;
    return circular_order(lo, hi, o.hi) == 1;
}

bool Arc::intersects(const Arc& o) const { return lo == o.lo || o.contains(lo) || contains(o.lo); }

namespace {

// Canonical arc order: the arc containing infinity first, then by lo with infinity lowest.
bool canonical_less(const Arc& x, const Arc& y) {
    bool xi = x.contains(CirclePoint::infinity()), yi = y.contains(CirclePoint::infinity());
    if (xi != yi) return xi;
    if (x.lo.is_inf() != y.lo.is_inf()) return x.lo.is_inf();
    if (x.lo.is_inf()) return false;
    return compare(x.lo.value(), y.lo.value()) < 0;
}

std::vector<CirclePoint> endpoints(const ArcSet& a, const ArcSet& b) {
    std::vector<CirclePoint> pts;
    for (const ArcSet* s : {&a, &b})
        for (const Arc& arc : s->arcs()) {
            pts.push_back(arc.lo);
            pts.push_back(arc.hi);
        }
    sort_cyclic(pts);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool holds_arc(const ArcSet& s, const Arc& e) {
    for (const Arc& a : s.arcs())
        if (e.subset_of(a)) return true;
    return false;
}

bool endpoint_of(const ArcSet& s, const CirclePoint& z) {
    for (const Arc& a : s.arcs())
        if (a.lo == z || a.hi == z) return true;
    return false;
}

// Rebuilds an open set from membership flags on the elementary decomposition given by pts.
template <class ArcPred, class PointPred>
ArcSet assemble(const std::vector<CirclePoint>& pts, ArcPred arc_in, PointPred pt_in) {
    std::size_t n = pts.size();
    if (n == 0) return {};
    // Element 2i is arc (pts[i], pts[i+1]); element 2i+1 is point pts[i+1].
    std::vector<bool> inc(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        inc[2 * i] = arc_in(Arc(pts[i], pts[(i + 1) % n]));
        inc[2 * i + 1] = pt_in(pts[(i + 1) % n]);
    }
    std::size_t start = 2 * n;
    for (std::size_t k = 0; k < 2 * n; ++k)
        if (!inc[k]) {
            start = k;
            break;
        }
    if (start == 2 * n) throw std::domain_error("ArcSet: result is the full circle");
    std::vector<Arc> out;
    bool open = false;
    std::size_t run_lo = 0;
    for (std::size_t t = 1; t <= 2 * n; ++t) {
        std::size_t k = (start + t) % (2 * n);
        if (inc[k] && !open) {
            if (k % 2 == 1) throw std::logic_error("ArcSet: isolated point in open set");
            open = true;
            run_lo = k / 2;
        } else if (!inc[k] && open) {
            open = false;
            // the run ended at the point element k (or the arc element before it)
            std::size_t hi_idx = (k % 2 == 1) ? (k / 2 + 1) % n : k / 2;
            if (pts[run_lo] == pts[hi_idx]) throw std::domain_error("ArcSet: result is a punctured circle");
            out.emplace_back(pts[run_lo], pts[hi_idx]);
        }
    }
    return normalize(std::move(out));
}

} // namespace

void sort_cyclic(std::vector<CirclePoint>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const CirclePoint& x, const CirclePoint& y) { return line_compare(x, y) < 0; });
}

ArcSet normalize(std::vector<Arc> arcs) {
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (arcs[i].intersects(arcs[j]))
                throw OverlapError("normalize: arcs " + arcs[i].str() + " and " + arcs[j].str() + " overlap");
    std::sort(arcs.begin(), arcs.end(), canonical_less);
    ArcSet s;
    s.arcs_ = std::move(arcs);
    return s;
}

std::string ArcSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < arcs_.size(); ++i) s += (i ? ", " : "") + arcs_[i].str();
    return s + "}";
}

bool contains(const ArcSet& s, const CirclePoint& z) {
    for (const Arc& a : s.arcs())
        if (a.contains(z)) return true;
    return false;
}

bool closure_contains(const ArcSet& s, const CirclePoint& z) {
    for (const Arc& a : s.arcs())
        if (a.closure_contains(z)) return true;
    return false;
}

bool subset(const ArcSet& a, const ArcSet& b) {
    for (const Arc& x : a.arcs())
        if (!holds_arc(b, x)) return false;
    return true;
}

bool disjoint(const ArcSet& a, const ArcSet& b) {
    for (const Arc& x : a.arcs())
        for (const Arc& y : b.arcs())
            if (x.intersects(y)) return false;
    return true;
}

ArcSet subtract_closure(const ArcSet& a, const ArcSet& b) {
    auto pts = endpoints(a, b);
    return assemble(
        pts, [&](const Arc& e) { return holds_arc(a, e) && !holds_arc(b, e); },
        [&](const CirclePoint& z) { return contains(a, z) && !contains(b, z) && !endpoint_of(b, z); });
}

ArcSet set_union(const ArcSet& a, const ArcSet& b) {
    auto pts = endpoints(a, b);
    return assemble(
        pts, [&](const Arc& e) { return holds_arc(a, e) || holds_arc(b, e); },
        [&](const CirclePoint& z) { return contains(a, z) || contains(b, z); });
}

ArcSet intersection(const ArcSet& a, const ArcSet& b) {
    auto pts = endpoints(a, b);
    return assemble(
        pts, [&](const Arc& e) { return holds_arc(a, e) && holds_arc(b, e); },
        [&](const CirclePoint& z) { return contains(a, z) && contains(b, z); });
}

bool covers_circle_closure(const ArcSet& s) {
    if (s.empty()) return false;
    auto pts = endpoints(s, ArcSet{});
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!holds_arc(s, Arc(pts[i], pts[(i + 1) % pts.size()]))) return false;
    return true;
}

bool closures_cover(const std::vector<Arc>& arcs) {
    if (arcs.empty()) return false;
    std::vector<CirclePoint> pts;
    for (const Arc& a : arcs) {
        pts.push_back(a.lo);
        pts.push_back(a.hi);
    }
    sort_cyclic(pts);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const CirclePoint& x = pts[i];
        const CirclePoint& y = pts[(i + 1) % pts.size()];
        Arc e(x, y);
        bool held = false;
        for (const Arc& a : arcs)
            if (e.subset_of(a)) held = true;
        if (!held) return false;
    }
    return true;
}

bool cyclic_less_from(const CirclePoint& origin, const CirclePoint& x, const CirclePoint& y) {
    if (x == y) return false;
    if (x == origin) return true;
    if (y == origin) return false;
    return circular_order(origin, x, y) == 1;
}

std::string failing_clause(const std::vector<ChainLink>& chain) {
    std::size_t n = chain.size();
    for (std::size_t i = 0; i < n; ++i) {
        const ChainLink& a = chain[i];
        const ChainLink& b = chain[(i + 1) % n];
        bool ok;
        if (i + 1 == n) ok = !a.strict || a.point != b.point;
        else if (a.strict) ok = cyclic_less_from(chain[0].point, a.point, b.point);
        else ok = a.point == b.point || cyclic_less_from(chain[0].point, a.point, b.point);
        if (!ok) return a.name + (a.strict ? " < " : " <= ") + b.name;
    }
    return {};
}

} // namespace pp
