#include "pingpong/classifier.hpp"

#include "pingpong/parallel.hpp"

#include <algorithm>
#include <random>

namespace pp {

const char* to_string(PointLabel l) {
    static const char* names[] = {"a_f", "r_f", "a_g", "r_g", "a_fg", "r_fg", "a_gf", "r_gf"};
    return names[static_cast<int>(l)];
}

std::string EightPointWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) s += " ";
        if (classes[i].size() > 1) s += "{";
        for (std::size_t j = 0; j < classes[i].size(); ++j) s += (j ? "=" : "") + std::string(to_string(classes[i][j]));
        if (classes[i].size() > 1) s += "}";
    }
    return s;
}

namespace {

EightPointWord canonical_word(std::vector<std::vector<PointLabel>> classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    auto it = std::find_if(classes.begin(), classes.end(), [](const std::vector<PointLabel>& c) {
        return std::find(c.begin(), c.end(), PointLabel::a_f) != c.end();
    });
    std::rotate(classes.begin(), it, classes.end());
    return {std::move(classes)};
}

PointLabel swap_label(PointLabel l) {
    switch (l) {
    case PointLabel::a_f: return PointLabel::a_g;
    case PointLabel::r_f: return PointLabel::r_g;
    case PointLabel::a_g: return PointLabel::a_f;
    case PointLabel::r_g: return PointLabel::r_f;
    case PointLabel::a_fg: return PointLabel::a_gf;
    case PointLabel::r_fg: return PointLabel::r_gf;
    case PointLabel::a_gf: return PointLabel::a_fg;
    case PointLabel::r_gf: return PointLabel::r_fg;
    }
    return l;
}

EightPointWord make_word(const std::array<CirclePoint, 8>& pts) {
    std::vector<int> idx(8);
    for (int i = 0; i < 8; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return line_compare(pts[x], pts[y]) < 0; });
    std::vector<std::vector<PointLabel>> classes;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k == 0 || pts[idx[k]] != pts[idx[k - 1]]) classes.emplace_back();
        classes.back().push_back(static_cast<PointLabel>(idx[k]));
    }
    return canonical_word(std::move(classes));
}

// Arc with endpoints x, y on the side that avoids both u and v, if any.
bool arc_avoiding(const CirclePoint& x, const CirclePoint& y, const CirclePoint& u, const CirclePoint& v, Arc* out) {
    Arc a(x, y), b(y, x);
    if (!a.contains(u) && !a.contains(v)) {
        *out = a;
        return true;
    }
    if (!b.contains(u) && !b.contains(v)) {
        *out = b;
        return true;
    }
    return false;
}

// Sub-arc of the arc i bounded by the interior point z and the endpoint e.
Arc sub_arc(const Arc& i, const CirclePoint& z, const CirclePoint& e) { return e == i.hi ? Arc(z, e) : Arc(e, z); }

} // namespace

EightPointWord swap_roles(const EightPointWord& w) {
    auto classes = w.classes;
    for (auto& c : classes)
        for (auto& l : c) l = swap_label(l);
    return canonical_word(std::move(classes));
}

PairClass classify_pair(const MoebiusMap& f, const MoebiusMap& g) {
    if (commutes(f, g)) throw Commuting("classify_pair: f and g commute");
    if (shares_fixed_point(f, g)) throw SharedFixedPoint("classify_pair: f and g share a fixed point");
    if (classify(f) != MapClass::Hyperbolic || classify(g) != MapClass::Hyperbolic)
        throw NotHyperbolic("classify_pair: f and g must be hyperbolic");
    MoebiusMap fg = f * g, gf = g * f;
    if (classify(fg) != MapClass::Hyperbolic)
        throw CompositionNotHyperbolic(std::string("classify_pair: fg is ") + to_string(classify(fg)));
    if (classify(gf) != MapClass::Hyperbolic)
        throw CompositionNotHyperbolic(std::string("classify_pair: gf is ") + to_string(classify(gf)));
    PairClass pc;
    pc.f = fixed_pair(f);
    pc.g = fixed_pair(g);
    pc.fg = fixed_pair(fg);
    pc.gf = fixed_pair(gf);
    pc.word = make_word({pc.f.attracting, pc.f.repelling, pc.g.attracting, pc.g.repelling, pc.fg.attracting,
                         pc.fg.repelling, pc.gf.attracting, pc.gf.repelling});

    const CirclePoint &af = pc.f.attracting, &rf = pc.f.repelling, &ag = pc.g.attracting, &rg = pc.g.repelling;
    Arc I, J;
    if (arc_avoiding(af, ag, rf, rg, &I)) {
        pc.row_hint = 1;
        pc.row1_attracting_ok = I.contains(pc.fg.attracting) && I.contains(pc.gf.attracting) &&
                                sub_arc(I, pc.fg.attracting, ag).contains(pc.gf.attracting);
        pc.row1_repelling_ok = arc_avoiding(rf, rg, af, ag, &J) && J.contains(pc.fg.repelling) &&
                               J.contains(pc.gf.repelling) &&
                               sub_arc(J, pc.fg.repelling, rf).contains(pc.gf.repelling);
    } else if (circular_order(af, rg, ag) == 1 && circular_order(ag, rf, af) == 1) {
        pc.row_hint = 2;
    } else if (circular_order(af, rf, ag) == 1 && circular_order(ag, rg, af) == 1) {
        pc.row_hint = 3;
    }
    return pc;
}

const char* to_string(CommutatorLabel l) {
    static const char* names[] = {"Geometric", "NG1", "NG2", "NG3", "NG4", "Unmatched"};
    return names[static_cast<int>(l)];
}

bool CommutatorClass::conjugacy_ok() const {
    return std::all_of(conjugacy.begin(), conjugacy.end(), [](const Inequality& i) { return i.holds; });
}

std::vector<Inequality> chain(const std::vector<std::pair<std::string, CirclePoint>>& x) {
    std::vector<Inequality> out;
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        out.push_back({x[i].first + " < " + x[i + 1].first + " (from " + x[0].first + ")",
                       circular_order(x[0].second, x[i].second, x[i + 1].second) == 1});
    return out;
}

namespace {

bool all_hold(const std::vector<Inequality>& v) {
    return std::all_of(v.begin(), v.end(), [](const Inequality& i) { return i.holds; });
}

void containment(std::vector<Inequality>& out, const std::string& name, const FixedPair& fp, const std::string& lo_name,
                 const CirclePoint& lo, const std::string& hi_name, const CirclePoint& hi) {
    bool ok = lo != hi && Arc(lo, hi).contains(fp.attracting) && Arc(lo, hi).contains(fp.repelling);
    out.push_back({"Fix" + name + " in (" + lo_name + ", " + hi_name + ")", ok});
}

} // namespace

CommutatorClass classify_commutator(const MoebiusMap& h, const MoebiusMap& f) {
    if (classify(h) != MapClass::Hyperbolic || classify(f) != MapClass::Hyperbolic)
        throw PreconditionViolated("classify_commutator: h and f must be hyperbolic");
    FixedPair fh = fixed_pair(h), ff = fixed_pair(f);
    CirclePoint p = fh.repelling, pb = fh.attracting, q = ff.repelling, qb = ff.attracting;
    if (p == q || p == qb || pb == q || pb == qb)
        throw PreconditionViolated("classify_commutator: h and f share a fixed point");
    if (!linked(p, pb, q, qb)) throw PreconditionViolated("classify_commutator: fixed pairs are unlinked");
    if (circular_order(p, q, pb) != 1)
        throw PreconditionViolated("classify_commutator: arrangement is not p < q < pbar < qbar");

    MoebiusMap hi = h.inverse(), fi = f.inverse();
    CommutatorClass cc;
    cc.commutators = {commutator(fi, hi), commutator(h, fi), commutator(f, h), commutator(hi, f)};
    for (int i = 0; i < 4; ++i) {
        if (classify(cc.commutators[i]) != MapClass::Hyperbolic)
            throw CommutatorNotHyperbolic("classify_commutator: commutator " + std::to_string(i + 1) + " is " +
                                          to_string(classify(cc.commutators[i])));
        cc.fixed[i] = fixed_pair(cc.commutators[i]);
    }
    const auto& C = cc.commutators;
    const auto& X = cc.fixed;
    auto transport = [&](const MoebiusMap& g, const std::string& gname, int src, int dst) {
        std::string s = std::to_string(src + 1), d = std::to_string(dst + 1);
        cc.conjugacy.push_back({gname + "[" + s + "]" + gname + "^-1 = [" + d + "]", g * C[src] * g.inverse() == C[dst]});
        cc.conjugacy.push_back({"Fix[" + d + "] = " + gname + "(Fix[" + s + "])",
                                apply(g, X[src].attracting) == X[dst].attracting &&
                                    apply(g, X[src].repelling) == X[dst].repelling});
    };
    transport(h, "h", 0, 1);
    transport(f, "f", 0, 3);
    transport(f, "f", 1, 2);
    transport(h, "h", 3, 2);

    auto A = [&](const MoebiusMap& g, const CirclePoint& x) { return apply(g, x); };
    using P = std::pair<std::string, CirclePoint>;
    cc.geometric = chain({
        {"p", p},
        {"h^-1(q)", A(hi, q)},
        {"r[1]", X[0].repelling},
        {"a[1]", X[0].attracting},
        {"f^-1(p)", A(fi, p)},
        {"q", q},
        {"f^-1(pbar)", A(fi, pb)},
        {"r[2]", X[1].repelling},
        {"a[2]", X[1].attracting},
        {"h(q)", A(h, q)},
        {"pbar", pb},
        {"h(qbar)", A(h, qb)},
        {"r[3]", X[2].repelling},
        {"a[3]", X[2].attracting},
        {"f(pbar)", A(f, pb)},
        {"qbar", qb},
        {"f(p)", A(f, p)},
        {"r[4]", X[3].repelling},
        {"a[4]", X[3].attracting},
        {"h^-1(qbar)", A(hi, qb)},
    });

    auto& n1 = cc.nongeometric[0];
    n1 = chain({P{"p", p}, P{"f^-1(p)", A(fi, p)}, P{"a[1]", X[0].attracting}, P{"r[1]", X[0].repelling},
                P{"h^-1(q)", A(hi, q)}, P{"q", q}});
    containment(n1, "[4]", X[3], "p", p, "fh^-1(q)", A(f * hi, q));
    containment(n1, "[2]", X[1], "hf^-1(p)", A(h * fi, p), "q", q);
    containment(n1, "[3]", X[2], "fhf^-1(p)", A(f * h * fi, p), "hfh^-1(q)", A(h * f * hi, q));

    auto& n2 = cc.nongeometric[1];
    n2 = chain({P{"q", q}, P{"h(q)", A(h, q)}, P{"a[2]", X[1].attracting}, P{"r[2]", X[1].repelling},
                P{"f^-1(pbar)", A(fi, pb)}, P{"pbar", pb}});
    containment(n2, "[3]", X[2], "fh(q)", A(f * h, q), "pbar", pb);
    containment(n2, "[1]", X[0], "q", q, "h^-1f^-1(pbar)", A(hi * fi, pb));
    containment(n2, "[4]", X[3], "h^-1fh(q)", A(hi * f * h, q), "fh^-1f^-1(pbar)", A(f * hi * fi, pb));

    auto& n3 = cc.nongeometric[2];
    n3 = chain({P{"pbar", pb}, P{"f(pbar)", A(f, pb)}, P{"a[3]", X[2].attracting}, P{"r[3]", X[2].repelling},
                P{"h(qbar)", A(h, qb)}, P{"qbar", qb}});
    containment(n3, "[2]", X[1], "pbar", pb, "f^-1h(qbar)", A(fi * h, qb));
    containment(n3, "[4]", X[3], "h^-1f(pbar)", A(hi * f, pb), "qbar", qb);
    containment(n3, "[1]", X[0], "f^-1h^-1f(pbar)", A(fi * hi * f, pb), "h^-1f^-1h(qbar)", A(hi * fi * h, qb));

    auto& n4 = cc.nongeometric[3];
    n4 = chain({P{"qbar", qb}, P{"h^-1(qbar)", A(hi, qb)}, P{"a[4]", X[3].attracting}, P{"r[4]", X[3].repelling},
                P{"f(p)", A(f, p)}, P{"p", p}});
    containment(n4, "[3]", X[2], "qbar", qb, "hf(p)", A(h * f, p));
    containment(n4, "[1]", X[0], "f^-1h^-1(qbar)", A(fi * hi, qb), "p", p);
    containment(n4, "[2]", X[1], "hf^-1h^-1(qbar)", A(h * fi * hi, qb), "f^-1hf(p)", A(fi * h * f, p));

    std::vector<CommutatorLabel> matches;
    if (all_hold(cc.geometric)) matches.push_back(CommutatorLabel::Geometric);
    for (int i = 0; i < 4; ++i)
        if (all_hold(cc.nongeometric[i])) matches.push_back(static_cast<CommutatorLabel>(i + 1));
    cc.label = matches.size() == 1 && cc.conjugacy_ok() ? matches[0] : CommutatorLabel::Unmatched;
    return cc;
}

long CensusResult::coincidence_free_classes() const {
    // Coincidence-free words have exactly eight space-separated tokens and no braces.
    long n = 0;
    for (const auto& [w, c] : counts)
        if (w.find('{') == std::string::npos) ++n;
    return n;
}

std::pair<MoebiusMap, MoebiusMap> census_pair(std::uint64_t seed, std::uint64_t index, long* rejected) {
    std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(ss);
    // Modulo reduction keeps the stream identical across standard library implementations.
    auto entry = [&]() { return static_cast<long>(rng() % 19) - 9; };
    auto draw = [&]() -> MoebiusMap {
        for (;;) {
            long a = entry(), b = entry(), c = entry(), d = entry();
            if (a * d - b * c > 0) {
                MoebiusMap m(a, b, c, d);
                if (classify(m) == MapClass::Hyperbolic) return m;
            }
            if (rejected) ++*rejected;
        }
    };
    for (;;) {
        MoebiusMap f = draw(), g = draw();
        if (!commutes(f, g) && !shares_fixed_point(f, g) && classify(f * g) == MapClass::Hyperbolic &&
            classify(g * f) == MapClass::Hyperbolic)
            return {f, g};
        if (rejected) ++*rejected;
    }
}

CensusResult census(long sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw std::invalid_argument("census: sample_count must be positive");
    struct Slot {
        PairClass pc;
        bool linked = false;
        long rejected = 0;
    };
    std::vector<Slot> slots(sample_count);
    parallel_for(sample_count, [&](std::size_t i) {
        auto [f, g] = census_pair(seed, i, &slots[i].rejected);
        slots[i].pc = classify_pair(f, g);
        const PairClass& pc = slots[i].pc;
        slots[i].linked = linked(pc.f.attracting, pc.f.repelling, pc.g.attracting, pc.g.repelling);
    });
    CensusResult r;
    r.samples = sample_count;
    for (const Slot& s : slots) {
        std::string key = s.pc.word.str();
        ++r.counts[key];
        if (s.linked) ++r.linked_counts[key];
        ++r.rows[s.pc.row_hint];
        r.rejected += s.rejected;
        if (s.pc.row_hint == 1) {
            ++r.row1_pairs;
            if (!s.pc.row1_attracting_ok || !s.pc.row1_repelling_ok) ++r.row1_violations;
        }
    }
    return r;
}

} // namespace pp
