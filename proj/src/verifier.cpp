#include "pingpong/verifier.hpp"

#include "pingpong/parallel.hpp"

#include <algorithm>
#include <set>

namespace pp {

const char* to_string(BuilderKind b) {
    switch (b) {
    case BuilderKind::None: return "none";
    case BuilderKind::Linked: return "linked";
    case BuilderKind::UnlinkedGeometric: return "unlinked-geometric";
    case BuilderKind::Parallel: return "parallel";
    }
    return "?";
}

const char* to_string(VerifyMode m) { return m == VerifyMode::Finite ? "finite" : "axis"; }

const char* to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::Verified: return "Verified";
    case VerifyStatus::Violated: return "Violated";
    case VerifyStatus::Inapplicable: return "Inapplicable";
    }
    return "?";
}

const char* to_string(UnlinkedLabel l) {
    switch (l) {
    case UnlinkedLabel::GeometricU: return "GeometricU";
    case UnlinkedLabel::NonGeometric1: return "NonGeometric1";
    case UnlinkedLabel::NonGeometric2: return "NonGeometric2";
    case UnlinkedLabel::Hexagonal: return "Hexagonal";
    }
    return "?";
}

namespace {

ArcSet single(const Arc& a) { return normalize({a}); }

ArcSet join(const Arc& a, const Arc& b) { return set_union(single(a), single(b)); }

std::vector<ChainLink> parallel_chain(const Arc& I1, const Arc& I2, const Arc& I3, const Arc& I4, const CirclePoint& p,
                                      const CirclePoint& qbar, const CirclePoint& q, const CirclePoint& pbar) {
    return {{"p", p, true},          {"u_1", I1.lo, false}, {"v_4", I4.hi, true},  {"qbar", qbar, true},
            {"u_2", I2.lo, false},   {"v_1", I1.hi, true},  {"u_3", I3.lo, false}, {"v_2", I2.hi, true},
            {"q", q, true},          {"u_4", I4.lo, false}, {"v_3", I3.hi, true},  {"pbar", pbar, true}};
}

const Arc& input(const Partition& part, const std::string& name) {
    for (const NamedArc& a : part.inputs)
        if (a.name == name) return a.arc;
    throw std::invalid_argument("partition has no input " + name);
}

const CirclePoint& point(const Partition& part, const std::string& name) {
    for (const auto& [n, x] : part.points)
        if (n == name) return x;
    throw std::invalid_argument("partition has no point " + name);
}

} // namespace

Partition make_partition(ArcSet U_H, ArcSet U_K) {
    if (U_H.empty() || U_K.empty()) throw std::invalid_argument("partition sets must be non-empty");
    if (!disjoint(U_H, U_K)) throw std::invalid_argument("partition sets must be disjoint");
    Partition part;
    part.U_H = std::move(U_H);
    part.U_K = std::move(U_K);
    return part;
}

Partition build_linked_partition(const Arc& I_p, const Arc& I_pbar, const Arc& I_q, const Arc& I_qbar,
                                 const CirclePoint& p, const CirclePoint& q, const CirclePoint& pbar,
                                 const CirclePoint& qbar) {
    if (!closures_cover({I_p, I_pbar, I_q, I_qbar}))
        throw CoverageFailure("closures of I_p, I_pbar, I_q, I_qbar do not cover the circle");
    for (auto [arc, x, name] : {std::tuple{&I_p, &p, "p"}, std::tuple{&I_pbar, &pbar, "pbar"},
                                std::tuple{&I_q, &q, "q"}, std::tuple{&I_qbar, &qbar, "qbar"}})
        if (!arc->contains(*x)) throw ChainViolation(std::string(name) + " is not in I_" + name);
    std::string bad = failing_clause({{"p", p, true},
                                      {"u_q", I_q.lo, false},
                                      {"v_p", I_p.hi, true},
                                      {"q", q, true},
                                      {"u_pbar", I_pbar.lo, false},
                                      {"v_q", I_q.hi, false},
                                      {"pbar", pbar, true},
                                      {"u_qbar", I_qbar.lo, false},
                                      {"v_pbar", I_pbar.hi, true},
                                      {"qbar", qbar, true},
                                      {"u_p", I_p.lo, false},
                                      {"v_qbar", I_qbar.hi, true}});
    if (!bad.empty()) throw ChainViolation("chain fails at " + bad);
    ArcSet P = join(I_p, I_pbar), Q = join(I_q, I_qbar);
    Partition part = make_partition(subtract_closure(P, Q), subtract_closure(Q, P));
    part.builder = BuilderKind::Linked;
    part.inputs = {{"I_p", I_p}, {"I_pbar", I_pbar}, {"I_q", I_q}, {"I_qbar", I_qbar}};
    part.points = {{"p", p}, {"q", q}, {"pbar", pbar}, {"qbar", qbar}};
    return part;
}

Partition build_unlinked_geometric(const Arc& R_p, const Arc& R_q) {
    if (!closures_cover({R_p, R_q})) throw CoverageFailure("closures of R_p and R_q do not cover the circle");
    Partition part = make_partition(subtract_closure(single(R_q), single(R_p)), subtract_closure(single(R_p), single(R_q)));
    part.builder = BuilderKind::UnlinkedGeometric;
    part.inputs = {{"R_p", R_p}, {"R_q", R_q}};
    return part;
}

Partition build_unlinked_parallel(const Arc& I1, const Arc& I2, const Arc& I3, const Arc& I4, const CirclePoint& p,
                                  const CirclePoint& qbar, const CirclePoint& q, const CirclePoint& pbar) {
    std::string bad = failing_clause(parallel_chain(I1, I2, I3, I4, p, qbar, q, pbar));
    if (!bad.empty()) throw ChainViolation("chain fails at " + bad);
    ArcSet even = join(I2, I4);
    Partition part = make_partition(even, subtract_closure(join(I1, I3), even));
    part.builder = BuilderKind::Parallel;
    part.inputs = {{"I_1", I1}, {"I_2", I2}, {"I_3", I3}, {"I_4", I4}};
    part.points = {{"p", p}, {"qbar", qbar}, {"q", q}, {"pbar", pbar}};
    return part;
}

Partition rebuild(const Partition& part) {
    switch (part.builder) {
    case BuilderKind::Linked:
        return build_linked_partition(input(part, "I_p"), input(part, "I_pbar"), input(part, "I_q"), input(part, "I_qbar"),
                                      point(part, "p"), point(part, "q"), point(part, "pbar"), point(part, "qbar"));
    case BuilderKind::UnlinkedGeometric: return build_unlinked_geometric(input(part, "R_p"), input(part, "R_q"));
    case BuilderKind::Parallel:
        return build_unlinked_parallel(input(part, "I_1"), input(part, "I_2"), input(part, "I_3"), input(part, "I_4"),
                                       point(part, "p"), point(part, "qbar"), point(part, "q"), point(part, "pbar"));
    case BuilderKind::None: break;
    }
    throw std::invalid_argument("partition was not produced by a builder");
}

// ---- Moebius mode ----

Arc image_arc(const MoebiusMap& g, const Arc& a) { return Arc(apply(g, a.lo), apply(g, a.hi)); }

namespace {

const ArcSet& own_set(const Partition& part, int factor) { return factor == kH ? part.U_H : part.U_K; }
const ArcSet& other_set(const Partition& part, int factor) { return factor == kH ? part.U_K : part.U_H; }

bool arc_in(const Arc& a, const ArcSet& s) {
    for (const Arc& b : s.arcs())
        if (a.subset_of(b)) return true;
    return false;
}

} // namespace

VerifyReport verify_factor(const Partition& part, int factor, const Presentation& pres, const Assignment& assignment,
                           int radius) {
    if (radius < 1) throw std::invalid_argument("verify: radius must be >= 1");
    VerifyReport r;
    r.radius = radius;
    const ArcSet& target = own_set(part, factor);
    for (const NormalWord& w : factor_ball(pres, factor, radius)) {
        MoebiusMap g = evaluate(w, pres, assignment);
        for (const Arc& a : other_set(part, factor).arcs()) {
            ++r.checks;
            Arc img = image_arc(g, a);
            if (!arc_in(img, target)) {
                r.status = VerifyStatus::Violated;
                r.witness_word = to_string(w, pres);
                r.witness_arc = a.str();
                r.image_arc = img.str();
                return r;
            }
        }
    }
    return r;
}

VerifyReport verify_finite(const Partition& part, const Presentation& pres, const Assignment& assignment, int radius) {
    if (pres.size() != 2) throw std::invalid_argument("verify: presentation must have two factors");
    VerifyReport r = verify_factor(part, kH, pres, assignment, radius);
    if (r.status != VerifyStatus::Verified) return r;
    VerifyReport k = verify_factor(part, kK, pres, assignment, radius);
    k.checks += r.checks;
    return k;
}

// ---- model mode ----

namespace {

enum class Fit { Inside, Outside, Partial };

Fit slot_fit(const Slot& s, const ArcSet& set) {
    if (s.is_atom) return contains(set, s.point) ? Fit::Inside : Fit::Outside;
    bool meets = false;
    for (const Arc& a : set.arcs()) {
        if (s.arc.subset_of(a)) return Fit::Inside;
        if (s.arc.intersects(a)) meets = true;
    }
    return meets ? Fit::Partial : Fit::Outside;
}

std::string slot_str(const Slot& s) { return s.is_atom ? "[" + s.point.str() + "]" : s.arc.str(); }

int atom_owner(Base b) { return b == Base::P || b == Base::Pbar ? kH : kK; }

// Slots of the model lying in `set`; a slot straddling its boundary makes the partition incompatible.
std::vector<int> slots_in(const ModelConfig& m, const ArcSet& set) {
    std::vector<int> out;
    for (std::size_t i = 0; i < m.slots.size(); ++i) {
        Fit f = slot_fit(m.slots[i], set);
        if (f == Fit::Partial)
            throw ActionMismatch("slot " + slot_str(m.slots[i]) + " straddles the boundary of " + set.str());
        if (f == Fit::Inside) out.push_back(static_cast<int>(i));
    }
    return out;
}

void violate(VerifyReport& r, std::string word, const Slot& from, const std::string& image) {
    r.status = VerifyStatus::Violated;
    r.witness_word = std::move(word);
    r.witness_arc = slot_str(from);
    r.image_arc = image;
}

bool model_factor_finite(VerifyReport& r, const Partition& part, const ModelConfig& m, int X, int radius) {
    const ArcSet& target = own_set(part, X);
    auto words = factor_ball(m.pres, X, radius);
    for (int id : slots_in(m, other_set(part, X))) {
        const Slot& s = m.slots[id];
        if (s.is_atom && atom_owner(s.atom) == X) {
            violate(r, to_string(words.front(), m.pres), s, slot_str(s));
            return false;
        }
        for (const NormalWord& w : words) {
            const auto& exps = w.syllables.front().exps;
            std::vector<int> imgs;
            if (!s.is_atom && s.factor == X) imgs = image_region_slots(m, X, s.side, s.index, exps);
            else imgs = {image_region_slot(m, X, s.seed_of[X], exps)};
            for (int t : imgs) {
                ++r.checks;
                Fit f = slot_fit(m.slots[t], target);
                if (f == Fit::Partial)
                    throw ActionMismatch("image slot " + slot_str(m.slots[t]) + " straddles the boundary of " + target.str());
                if (f == Fit::Outside) {
                    violate(r, to_string(w, m.pres), s, slot_str(m.slots[t]));
                    return false;
                }
            }
        }
    }
    return true;
}

bool model_samples_finite(VerifyReport& r, const Partition& part, const ModelConfig& m, int radius, int depth) {
    std::vector<VirtualPoint> pts;
    for (Base b : {Base::P, Base::Pbar, Base::Q, Base::Qbar, Base::G_p, Base::G_pbar, Base::G_q, Base::G_qbar})
        pts.push_back(atom(b));
    if (depth >= 1) {
        std::set<std::pair<std::string, int>> seen;
        std::vector<VirtualPoint> more;
        for (const NormalWord& w : ball(m.pres, depth))
            for (Base b : {Base::P, Base::Pbar, Base::Q, Base::Qbar, Base::G_p, Base::G_pbar, Base::G_q, Base::G_qbar}) {
                VirtualPoint x = canonical({w, b});
                if (x.word.empty()) continue;
                if (seen.insert({to_string(x.word, m.pres), static_cast<int>(b)}).second) more.push_back(x);
            }
        pts.insert(pts.end(), more.begin(), more.end());
    }
    std::array<std::vector<NormalWord>, 2> words{factor_ball(m.pres, kH, radius), factor_ball(m.pres, kK, radius)};
    struct Outcome {
        long checks = 0;
        bool bad = false;
        std::string word, image;
    };
    std::vector<Outcome> out(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        const VirtualPoint& x = pts[i];
        for (int X : {kH, kK}) {
            int in = membership(m, x, other_set(part, X));
            if (in == 0) continue;
            if (in < 0) throw ActionMismatch("sample point " + to_string(m, x) + " is not resolved by the partition");
            for (const NormalWord& w : words[X]) {
                ++out[i].checks;
                VirtualPoint y = act(m, w, x);
                int got = membership(m, y, own_set(part, X));
                if (got < 0) throw ActionMismatch("image point " + to_string(m, y) + " is not resolved by the partition");
                if (got == 0) {
                    out[i] = {out[i].checks, true, to_string(w, m.pres), to_string(m, y)};
                    return;
                }
            }
        }
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        r.checks += out[i].checks;
        if (out[i].bad && r.status == VerifyStatus::Verified) {
            r.status = VerifyStatus::Violated;
            r.witness_word = out[i].word;
            r.witness_arc = to_string(m, pts[i]);
            r.image_arc = out[i].image;
        }
    }
    return r.status == VerifyStatus::Verified;
}

} // namespace

VerifyReport verify_finite(const Partition& part, const ModelConfig& m, int radius, int depth) {
    if (radius < 1) throw std::invalid_argument("verify: radius must be >= 1");
    VerifyReport r;
    r.radius = radius;
    for (int X : {kH, kK})
        if (!model_factor_finite(r, part, m, X, radius)) return r;
    model_samples_finite(r, part, m, radius, depth);
    return r;
}

VerifyReport verify_axis(const Partition& part, const ModelConfig& m) {
    VerifyReport r;
    r.mode = VerifyMode::Axis;
    auto inapplicable = [&](std::string why) {
        r.status = VerifyStatus::Inapplicable;
        r.reason = std::move(why);
        return r;
    };
    if (part.builder == BuilderKind::None) return inapplicable("partition was not produced by a builder");
    // gap-system membership: every builder input is a seed gap of the right stabilizer and vice versa
    std::size_t seeds = m.seeds[kH].size() + m.seeds[kK].size();
    if (seeds != part.inputs.size()) return inapplicable("builder inputs do not match the model's seed gaps");
    for (const NamedArc& in : part.inputs) {
        bool found = false;
        for (int f : {kH, kK}) {
            int g = m.seed_index(f, in.name);
            if (g >= 0 && m.seeds[f][g].arc == in.arc) found = true;
        }
        if (!found) return inapplicable("input " + in.name + " " + in.arc.str() + " is not a seed gap of the model");
    }
    for (const auto& [name, x] : part.points) {
        bool ok = (name == "p" && x == m.layout.p) || (name == "pbar" && x == m.layout.pbar) ||
                  (name == "q" && x == m.layout.q) || (name == "qbar" && x == m.layout.qbar);
        if (!ok) return inapplicable("point " + name + " does not match the model");
    }
    try {
        if (!(rebuild(part) == part)) return inapplicable("partition differs from the builder output");
    } catch (const std::invalid_argument& e) {
        return inapplicable(std::string("builder chain fails: ") + e.what());
    }
    std::array<std::vector<int>, 2> in;
    try {
        in = {slots_in(m, part.U_K), slots_in(m, part.U_H)};
    } catch (const ActionMismatch& e) {
        return inapplicable(e.what());
    }
    // Dense translations carry a slot on a side into every region of that side.
    for (int X : {kH, kK}) {
        const ArcSet& target = own_set(part, X);
        std::array<bool, 2> side_used{false, false};
        const Slot* from[2] = {nullptr, nullptr};
        for (int id : in[X]) {
            const Slot& s = m.slots[id];
            ++r.checks;
            if (s.is_atom && atom_owner(s.atom) == X) {
                r.status = VerifyStatus::Violated;
                r.witness_word = m.pres[X].generators.front();
                r.witness_arc = slot_str(s);
                r.image_arc = slot_str(s);
                r.reason = "a fixed point of the factor lies in the other factor's set";
                return r;
            }
            Side sd = (!s.is_atom && s.factor == X) ? s.side : m.seeds[X][s.seed_of[X]].side;
            int k = sd == Side::Right ? 0 : 1;
            side_used[k] = true;
            if (!from[k]) from[k] = &s;
        }
        for (int k = 0; k < 2; ++k) {
            if (!side_used[k]) continue;
            for (int t : side_region_slots(m, X, k == 0 ? Side::Right : Side::Left)) {
                ++r.checks;
                if (slot_fit(m.slots[t], target) != Fit::Inside) {
                    r.status = VerifyStatus::Violated;
                    r.witness_word = m.pres[X].id + "_+ u " + m.pres[X].id + "_-";
                    r.witness_arc = slot_str(*from[k]);
                    r.image_arc = slot_str(m.slots[t]);
                    r.reason = "orbit of a slot reaches a region outside the factor's set";
                    return r;
                }
            }
        }
    }
    return r;
}

std::vector<Containment> linked_proof_containments(const ModelConfig& m, const std::vector<long>& h,
                                                   const std::vector<long>& f) {
    if (m.arrangement != Arrangement::Linked) throw std::invalid_argument("linked_proof_containments: linked model required");
    if (m.lambda[kH].value(h).sign() <= 0 || m.lambda[kK].value(f).sign() <= 0)
        throw std::invalid_argument("linked_proof_containments: h and f must translate positively");
    auto seed = [&](int X, const char* name) {
        int g = m.seed_index(X, name);
        if (g < 0) throw std::invalid_argument(std::string("linked model has no seed ") + name);
        return g;
    };
    int iq = seed(kH, "I_q"), iqb = seed(kH, "I_qbar"), ip = seed(kK, "I_p"), ipb = seed(kK, "I_pbar");
    ArcSet Q = join(m.seeds[kH][iq].arc, m.seeds[kH][iqb].arc);
    ArcSet P = join(m.seeds[kK][ip].arc, m.seeds[kK][ipb].arc);
    auto neg = [](std::vector<long> e) {
        for (long& x : e) x = -x;
        return e;
    };
    auto check = [&](std::string name, int X, std::vector<int> gaps, const std::vector<long>& exps, const ArcSet& target) {
        bool ok = true;
        for (int g : gaps) ok = ok && arc_in(m.slots[image_region_slot(m, X, g, exps)].arc, target);
        return Containment{std::move(name), ok};
    };
    return {check("h^-1(I_q u I_qbar) in I_p \\ cl(I_q u I_qbar)", kH, {iq, iqb}, neg(h),
                  subtract_closure(single(m.seeds[kK][ip].arc), Q)),
            check("h(I_q u I_qbar) in I_pbar \\ cl(I_q u I_qbar)", kH, {iq, iqb}, h,
                  subtract_closure(single(m.seeds[kK][ipb].arc), Q)),
            check("f^-1(I_p u I_pbar) in I_q \\ cl(I_p u I_pbar)", kK, {ip, ipb}, neg(f),
                  subtract_closure(single(m.seeds[kH][iq].arc), P)),
            check("f(I_p u I_pbar) in I_qbar \\ cl(I_p u I_pbar)", kK, {ip, ipb}, f,
                  subtract_closure(single(m.seeds[kH][iqb].arc), P))};
}

// ---- unlinked configurations ----

namespace {

const Arc* find_gap(const std::vector<Arc>& gaps, const Arc& inner) {
    for (const Arc& g : gaps)
        if (inner.subset_of(g)) return &g;
    return nullptr;
}

const Arc* find_gap_containing(const std::vector<Arc>& gaps, const CirclePoint& x) {
    for (const Arc& g : gaps)
        if (g.contains(x)) return &g;
    return nullptr;
}

void validate_gaps(const std::vector<Arc>& gaps, const Arc& side, const CirclePoint& x0, const CirclePoint& x1,
                   const std::string& what) {
    for (const Arc& g : gaps) {
        if (!g.subset_of(side)) throw InconsistentGapData(what + " " + g.str() + " is not inside " + side.str());
        if (g.lo == x0 || g.lo == x1 || g.hi == x0 || g.hi == x1)
            throw InconsistentGapData(what + " " + g.str() + " abuts its own fixed point");
    }
    try {
        normalize(gaps);
    } catch (const OverlapError&) {
        throw InconsistentGapData(what + "s overlap");
    }
}

// A missing gap means the data contradict the structure of gaps around unlinked points.
const Arc& need(const Arc* g, const std::string& what) {
    if (!g) throw InconsistentGapData("no " + what);
    return *g;
}

// The arc (a, b), or nothing when the endpoints coincide.
std::optional<Arc> between(const CirclePoint& a, const CirclePoint& b) {
    if (a == b) return std::nullopt;
    return Arc(a, b);
}

bool within(const std::optional<Arc>& piece, const Arc& g) { return !piece || piece->subset_of(g); }

const Arc* find_flank(const std::vector<Arc>& gaps, const CirclePoint& left_end, const CirclePoint& right_end,
                      const Arc& R1, const Arc& R2) {
    // gap (a, b) with (b, right_end) in R1 and (left_end, a) in R2
    for (const Arc& g : gaps)
        if (within(between(g.hi, right_end), R1) && within(between(left_end, g.lo), R2)) return &g;
    return nullptr;
}

std::vector<ChainLink> hexagon_chain(const UnlinkedGapData& d, const std::array<Arc, 6>& I) {
    return {{"p", d.p, true},        {"u_1", I[0].lo, false}, {"v_6", I[5].hi, true},  {"qbar", d.qbar, true},
            {"u_2", I[1].lo, false}, {"v_1", I[0].hi, true},  {"u_3", I[2].lo, false}, {"v_2", I[1].hi, true},
            {"q", d.q, true},        {"u_4", I[3].lo, false}, {"v_3", I[2].hi, true},  {"pbar", d.pbar, true},
            {"u_5", I[4].lo, false}, {"v_4", I[3].hi, true},  {"u_6", I[5].lo, false}, {"v_5", I[4].hi, true}};
}

} // namespace

UnlinkedConfig classify_unlinked_config(const UnlinkedGapData& d) {
    if (!failing_clause({{"p", d.p, true}, {"qbar", d.qbar, true}, {"q", d.q, true}, {"pbar", d.pbar, true}}).empty())
        throw InconsistentGapData("points are not ordered p < qbar < q < pbar");
    Arc Rp_side(d.p, d.pbar), Lp_side(d.pbar, d.p), Rq_side(d.q, d.qbar), Lq_side(d.qbar, d.q);
    validate_gaps(d.right_p, Rp_side, d.p, d.pbar, "right gap of p");
    validate_gaps(d.left_p, Lp_side, d.p, d.pbar, "left gap of p");
    validate_gaps(d.right_q, Rq_side, d.q, d.qbar, "right gap of q");
    validate_gaps(d.left_q, Lq_side, d.q, d.qbar, "left gap of q");

    UnlinkedConfig cfg;
    if (const Arc* Rp = find_gap(d.right_p, Lq_side)) {
        const Arc& R1 = need(find_gap(d.right_q, Arc(d.p, Rp->lo)), "right gap of q contains (p, u)");
        const Arc& R2 = need(find_gap(d.right_q, Arc(Rp->hi, d.pbar)), "right gap of q contains (v, pbar)");
        if (R1 == R2) {
            if (!closures_cover({*Rp, R1})) throw InconsistentGapData("closures of R_p and R_1 do not cover the circle");
            cfg.label = UnlinkedLabel::GeometricU;
            cfg.intervals = {{"R_p", *Rp}, {"R_q", R1}};
            cfg.reason = "one right gap of q covers the complement of R_p";
            return cfg;
        }
        const Arc& Lp = need(find_flank(d.left_p, d.pbar, d.p, R1, R2), "left gap of p flanked by R_1 and R_2");
        cfg.label = UnlinkedLabel::NonGeometric2;
        cfg.intervals = {{"R_p", *Rp}, {"R_1", R1}, {"R_2", R2}, {"L_p", Lp}};
        cfg.reason = "right gap of p contains L(q) and the flanking right gaps of q differ";
        return cfg;
    }
    if (const Arc* Rq = find_gap(d.right_q, Lp_side)) {
        const Arc& R1 = need(find_gap(d.right_p, Arc(Rq->hi, d.qbar)), "right gap of p contains (y, qbar)");
        const Arc& R2 = need(find_gap(d.right_p, Arc(d.q, Rq->lo)), "right gap of p contains (q, x)");
        if (R1 == R2) {
            if (!closures_cover({R1, *Rq})) throw InconsistentGapData("closures of R_p and R_q do not cover the circle");
            cfg.label = UnlinkedLabel::GeometricU;
            cfg.intervals = {{"R_p", R1}, {"R_q", *Rq}};
            cfg.reason = "one right gap of p covers the complement of R_q";
            return cfg;
        }
        const Arc& Lq = need(find_flank(d.left_q, d.qbar, d.q, R2, R1), "left gap of q flanked by the right gaps of p");
        std::string bad = failing_clause(parallel_chain(R1, Lq, R2, *Rq, d.p, d.qbar, d.q, d.pbar));
        if (!bad.empty()) throw InconsistentGapData("four-gap chain fails at " + bad);
        cfg.label = UnlinkedLabel::NonGeometric1;
        cfg.intervals = {{"I_1", R1}, {"I_2", Lq}, {"I_3", R2}, {"I_4", *Rq}};
        cfg.reason = "right gap of q contains L(p) and the flanking right gaps of p differ";
        return cfg;
    }
    // Both left sides meet the other core: the six-gap layout.
    const Arc& I1 = need(find_gap_containing(d.right_p, d.qbar), "right gap of p contains qbar");
    const Arc& I3 = need(find_gap_containing(d.right_p, d.q), "right gap of p contains q");
    const Arc& I4 = need(find_gap_containing(d.right_q, d.pbar), "right gap of q contains pbar");
    const Arc& I6 = need(find_gap_containing(d.right_q, d.p), "right gap of q contains p");
    const Arc& I2 = need(find_flank(d.left_q, d.qbar, d.q, I3, I1), "left gap of q flanked by the right gaps of p");
    const Arc& I5 = need(find_flank(d.left_p, d.pbar, d.p, I6, I4), "left gap of p flanked by the right gaps of q");
    std::array<Arc, 6> I{I1, I2, I3, I4, I5, I6};
    std::string bad = failing_clause(hexagon_chain(d, I));
    if (!bad.empty()) throw InconsistentGapData("six-gap chain fails at " + bad);
    cfg.label = UnlinkedLabel::Hexagonal;
    for (int i = 0; i < 6; ++i) cfg.intervals["I_" + std::to_string(i + 1)] = I[i];
    ModelConfig hex = build_hexagon_model(TranslationGroup(), TranslationGroup(), {d.p, d.qbar, d.q, d.pbar, I}, true);
    cfg.witness = hexagon_witness(hex);
    cfg.reason = cfg.witness->holds
                     ? "rejected: fh maps both I_1 and I_5 into themselves, so it attracts into two disjoint closures"
                     : "rejected: both left sides meet the other core";
    return cfg;
}

HexagonWitness hexagon_witness(const ModelConfig& m) {
    if (m.arrangement != Arrangement::Hexagon) throw std::invalid_argument("hexagon_witness: hexagon model required");
    auto gap = [&](int X, const char* name) {
        int g = m.seed_index(X, name);
        if (g < 0) throw std::invalid_argument(std::string("hexagon model has no seed ") + name);
        return g;
    };
    int i1 = gap(kH, "I_1"), i5 = gap(kH, "I_5"), i2 = gap(kK, "I_2"), i4 = gap(kK, "I_4");
    const Arc &I1 = m.seeds[kH][i1].arc, &I5 = m.seeds[kH][i5].arc, &I2 = m.seeds[kK][i2].arc,
              &I4 = m.seeds[kK][i4].arc;
    auto lands = [&](int X, int g, const std::vector<long>& e, const Arc& target) {
        return m.slots[image_region_slot(m, X, g, e)].arc.subset_of(target);
    };
    // smallest positive translation sending the first gap into the second
    auto search = [&](int X, int g, const Arc& target) -> std::optional<std::vector<long>> {
        for (long r = 1; r <= 8; ++r)
            for (long a = -r; a <= r; ++a)
                for (long b : {r - std::labs(a), -(r - std::labs(a))}) {
                    std::vector<long> e{a, b};
                    if (m.lambda[X].value(e).sign() > 0 && lands(X, g, e, target)) return e;
                }
        return std::nullopt;
    };
    HexagonWitness w;
    auto he = search(kH, i1, I2);
    auto fe = search(kK, i4, I5);
    if (!he || !fe) return w;
    w.h = syllable_word(kH, *he);
    w.f = syllable_word(kK, *fe);
    auto record = [&](std::string text, bool ok) {
        w.containments.push_back(text + (ok ? "" : " FAILS"));
        return ok;
    };
    bool ok = record("h(I_1) in I_2", lands(kH, i1, *he, I2));
    ok &= record("f(I_2) in I_1", lands(kK, i2, *fe, I1));
    ok &= record("h(I_5) in I_4", lands(kH, i5, *he, I4));
    ok &= record("f(I_4) in I_5", lands(kK, i4, *fe, I5));
    NormalWord fh = multiply(w.f, w.h);
    w.x1 = atom(Base::Qbar);
    w.x5 = act(m, w.f, atom(Base::Pbar));
    w.fh_x1 = act(m, fh, w.x1);
    w.fh_x5 = act(m, fh, w.x5);
    ok &= record("fh(I_1) in I_1", membership(m, w.x1, single(I1)) == 1 && membership(m, w.fh_x1, single(I1)) == 1);
    ok &= record("fh(I_5) in I_5", membership(m, w.x5, single(I5)) == 1 && membership(m, w.fh_x5, single(I5)) == 1);
    w.closures_disjoint = !I1.intersects(I5) && !I1.closure_contains(I5.lo) && !I1.closure_contains(I5.hi) &&
                          !I5.closure_contains(I1.lo) && !I5.closure_contains(I1.hi);
    w.holds = ok && w.closures_disjoint;
    return w;
}

Partition partition_for(const UnlinkedConfig& cfg, const UnlinkedGapData& d) {
    auto at = [&](const char* k) { return cfg.intervals.at(k); };
    switch (cfg.label) {
    case UnlinkedLabel::GeometricU: return build_unlinked_geometric(at("R_p"), at("R_q"));
    case UnlinkedLabel::NonGeometric1:
        return build_unlinked_parallel(at("I_1"), at("I_2"), at("I_3"), at("I_4"), d.p, d.qbar, d.q, d.pbar);
    case UnlinkedLabel::NonGeometric2: {
        // The mirror of the four-gap layout: gaps of q around p and pbar, gaps of p around q, qbar.
        ArcSet J = join(at("R_1"), at("R_2"));
        return make_partition(J, subtract_closure(join(at("R_p"), at("L_p")), J));
    }
    case UnlinkedLabel::Hexagonal: break;
    }
    throw InconsistentGapData("six-gap configurations have no ping-pong partition");
}

SameOrbitResult same_orbit_constraint(const UnlinkedGapData& data, const std::optional<MoebiusMap>& g) {
    if (!g) throw std::invalid_argument("same_orbit_constraint: a witness g with g(p) in {q, qbar} is required");
    CirclePoint gp = apply(*g, data.p);
    if (gp != data.q && gp != data.qbar)
        throw std::invalid_argument("same_orbit_constraint: g(p) = " + gp.str() + " is neither q nor qbar");
    SameOrbitResult r;
    r.config = classify_unlinked_config(data);
    r.holds = r.config.label == UnlinkedLabel::GeometricU;
    if (!r.holds)
        r.report = std::string("COUNTEREXAMPLE: points in one orbit (g = ") + g->str() + ", g(p) = " + gp.str() +
                   ") classify as " + to_string(r.config.label) + ": " + r.config.reason;
    return r;
}

// ---- free product certificates ----

namespace {

std::string forward(const VerifyReport& r) {
    if (r.status == VerifyStatus::Inapplicable) return "inapplicable: " + r.reason;
    return "word " + r.witness_word + " maps " + r.witness_arc + " to " + r.image_arc;
}

} // namespace

FreeProductCertificate free_product_certificate(const VerifyReport& report, const HLCertificate& hl,
                                                const Presentation& pres, const Assignment& assignment,
                                                const Partition&) {
    FreeProductCertificate c;
    if (report.status != VerifyStatus::Verified) {
        c.reason = "partition report is not Verified";
        c.forwarded = forward(report);
        return c;
    }
    if (!hl.certified) {
        c.reason = "group is not certified hyperbolic-like";
        c.forwarded = to_string(hl.witness, pres) + " is " + to_string(hl.witness_class);
        return c;
    }
    c.radius = report.mode == VerifyMode::Axis ? hl.radius : std::min(report.radius, hl.radius);
    auto words = ball(pres, c.radius);
    std::vector<char> trivial(words.size());
    parallel_for(words.size(), [&](std::size_t i) { trivial[i] = evaluate(words[i], pres, assignment).is_identity(); });
    for (std::size_t i = 0; i < words.size(); ++i) {
        ++c.words_checked;
        if (trivial[i]) {
            ++c.trivial_words;
            continue;
        }
        const auto& s = words[i].syllables;
        if (s.front().factor == s.back().factor) ++c.direct_witnesses;
        else ++c.conjugated_witnesses;
    }
    c.issued = c.trivial_words == 0;
    if (!c.issued) c.reason = "a nontrivial word acts trivially";
    return c;
}

FreeProductCertificate free_product_certificate(const VerifyReport& report, const ModelConfig& m,
                                                const Partition& part, int radius) {
    FreeProductCertificate c;
    if (report.status != VerifyStatus::Verified) {
        c.reason = "partition report is not Verified";
        c.forwarded = forward(report);
        return c;
    }
    c.radius = radius;
    // a base point inside each set, moved by nothing of the other factor's fixed atoms
    std::array<std::optional<VirtualPoint>, 2> base;
    for (int X : {kH, kK})
        for (Base b : {Base::P, Base::Pbar, Base::Q, Base::Qbar})
            if (!base[X] && membership(m, atom(b), own_set(part, X)) == 1) base[X] = atom(b);
    if (!base[kH] || !base[kK]) {
        c.reason = "no atom of the model lies in both partition sets";
        return c;
    }
    auto words = ball(m.pres, radius);
    // 0 = no witness, 1 = direct, 2 = conjugated
    std::vector<char> kind(words.size());
    parallel_for(words.size(), [&](std::size_t i) {
        NormalWord w = words[i];
        char k = 1;
        int first = w.syllables.front().factor, last = w.syllables.back().factor;
        if (first != last) {
            // t w t^-1 with t in the factor of the first syllable starts and ends there
            std::vector<long> e{1, 0};
            if (w.syllables.front().exps == std::vector<long>{-1, 0}) e = {0, 1};
            NormalWord t = syllable_word(first, e);
            w = multiply(multiply(t, w), invert(t));
            k = 2;
            last = w.syllables.back().factor;
        }
        const VirtualPoint& x = *base[1 - last];
        VirtualPoint y = act(m, w, x);
        int X = w.syllables.front().factor;
        bool ok = y != x && membership(m, y, own_set(part, X)) == 1 && membership(m, x, own_set(part, X)) == 0;
        kind[i] = ok ? k : 0;
    });
    for (char k : kind) {
        ++c.words_checked;
        if (k == 0) ++c.trivial_words;
        else if (k == 1) ++c.direct_witnesses;
        else ++c.conjugated_witnesses;
    }
    c.issued = c.trivial_words == 0;
    if (!c.issued) c.reason = "some words have no ping-pong witness";
    return c;
}

} // namespace pp
