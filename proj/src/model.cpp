#include "pingpong/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace pp {

TranslationGroup::TranslationGroup(const Surd& tau1, const Surd& tau2) : t1_(tau1), t2_(tau2) {
    if (tau1.sign() <= 0 || tau2.sign() <= 0) throw std::invalid_argument("TranslationGroup: generators must be positive");
    if (!tau1.rational() && !tau2.rational() && tau1.d() != tau2.d())
        throw std::invalid_argument("TranslationGroup: generators must share a quadratic field");
}

namespace {

mpz_class radicand(const Surd& x, const Surd& y) { return x.rational() ? y.d() : x.d(); }

// Coefficient of sqrt(d) with d the group radicand.
mpq_class irr_part(const Surd& x) { return x.b(); }

} // namespace

bool TranslationGroup::dense() const { return t1_.a() * irr_part(t2_) - t2_.a() * irr_part(t1_) != 0; }

Surd TranslationGroup::value(const std::vector<long>& exps) const {
    if (exps.size() != 2) throw std::invalid_argument("TranslationGroup: exponent vector must have rank 2");
    return Surd(exps[0]) * t1_ + Surd(exps[1]) * t2_;
}

std::optional<std::array<mpz_class, 2>> TranslationGroup::coordinates(const Surd& x) const {
    if (!dense()) throw std::logic_error("TranslationGroup: coordinates need independent generators");
    mpz_class d = radicand(t1_, t2_);
    if (!x.rational() && x.d() != d) return std::nullopt;
    mpq_class det = t1_.a() * t2_.b() - t2_.a() * t1_.b();
    mpq_class m = (x.a() * t2_.b() - t2_.a() * x.b()) / det;
    mpq_class n = (t1_.a() * x.b() - x.a() * t1_.b()) / det;
    m.canonicalize();
    n.canonicalize();
    if (m.get_den() != 1 || n.get_den() != 1) return std::nullopt;
    return std::array<mpz_class, 2>{m.get_num(), n.get_num()};
}

bool TranslationGroup::contains(const Surd& x) const { return coordinates(x).has_value(); }

const char* to_string(Base b) {
    switch (b) {
    case Base::P: return "P";
    case Base::Pbar: return "Pbar";
    case Base::Q: return "Q";
    case Base::Qbar: return "Qbar";
    case Base::G_p: return "G_p";
    case Base::G_pbar: return "G_pbar";
    case Base::G_q: return "G_q";
    case Base::G_qbar: return "G_qbar";
    }
    return "?";
}

const char* to_string(Arrangement a) {
    switch (a) {
    case Arrangement::Linked: return "linked";
    case Arrangement::UnlinkedGeometric: return "unlinked-geometric";
    case Arrangement::Parallel: return "parallel";
    case Arrangement::Hexagon: return "hexagon";
    case Arrangement::Custom: return "custom";
    }
    return "?";
}

Presentation model_presentation() { return {{"H", {"h1", "h2"}}, {"K", {"f1", "f2"}}}; }

CirclePoint ModelConfig::fixed_point(int factor, bool companion) const {
    if (factor == kH) return companion ? layout.pbar : layout.p;
    return companion ? layout.qbar : layout.q;
}

CirclePoint ModelConfig::atom_point(Base b) const {
    switch (b) {
    case Base::P: return layout.p;
    case Base::Pbar: return layout.pbar;
    case Base::Q: return layout.q;
    case Base::Qbar: return layout.qbar;
    default: throw std::invalid_argument("atom_point: markers have no model coordinate");
    }
}

Arc ModelConfig::side_arc(int factor, Side side) const {
    CirclePoint x = fixed_point(factor, false), xb = fixed_point(factor, true);
    return side == Side::Right ? Arc(x, xb) : Arc(xb, x);
}

std::vector<int> ModelConfig::seeds_on(int factor, Side side) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < seeds[factor].size(); ++i)
        if (seeds[factor][i].side == side) out.push_back(static_cast<int>(i));
    return out;
}

int ModelConfig::region_slot(int factor, Side side, int index) const {
    const auto& v = region_slots_[factor][side == Side::Right ? 0 : 1];
    if (index < 0 || index >= static_cast<int>(v.size())) throw std::out_of_range("region_slot: no such region");
    return v[index];
}

int ModelConfig::atom_slot(Base b) const {
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].is_atom && slots[i].atom == b) return static_cast<int>(i);
    throw std::invalid_argument("atom_slot: markers live in regions");
}

int ModelConfig::seed_index(int factor, const std::string& name) const {
    for (std::size_t i = 0; i < seeds[factor].size(); ++i)
        if (seeds[factor][i].name == name) return static_cast<int>(i);
    return -1;
}

int ModelConfig::chart_sign(int factor, long num, long k) const {
    if (num == 0 && k == 0) return 0;
    const TranslationGroup& g = lambda[factor];
    double a = static_cast<double>(num) * g.tau1().approx();
    double b = static_cast<double>(chart_den[factor]) * static_cast<double>(k) * g.tau2().approx();
    double v = a + b;
    if (std::fabs(v) > 1e-9 * (std::fabs(a) + std::fabs(b))) return v > 0 ? 1 : -1;
    return (Surd(num) * g.tau1() + Surd(chart_den[factor]) * Surd(k) * g.tau2()).sign();
}

Surd ModelConfig::chart_value(int factor, long num, long k) const {
    return lambda[factor].tau1() * Surd(mpq_class(num, chart_den[factor])) + Surd(k) * lambda[factor].tau2();
}

int ModelConfig::region_index(int factor, Side side, const Surd& chart) const {
    int idx = 0;
    for (const SeedGap& g : seeds[factor])
        if (g.side == side && compare(g.address, chart) < 0) ++idx;
    return idx;
}

namespace {

const char* factor_point(int f) { return f == kH ? "p" : "q"; }

void check_cosets(const TranslationGroup& lam, const std::vector<std::pair<std::string, Surd>>& addrs) {
    for (std::size_t i = 0; i < addrs.size(); ++i)
        for (std::size_t j = i + 1; j < addrs.size(); ++j)
            if (lam.contains(addrs[i].second - addrs[j].second))
                throw LayoutError("addresses of " + addrs[i].first + " and " + addrs[j].first +
                                  " lie in the same translation coset");
}

Arc region_arc(const CirclePoint& lo, const CirclePoint& hi, const std::string& what) {
    if (lo == hi) throw LayoutError("empty region " + what);
    return Arc(lo, hi);
}

} // namespace

ModelConfig build_model(const TranslationGroup& lp, const TranslationGroup& lq, const ModelLayout& layout,
                        Arrangement arrangement, bool unverified_ok) {
    if (!lp.dense()) throw NotDense("translation group of p is not dense: tau2/tau1 is rational");
    if (!lq.dense()) throw NotDense("translation group of q is not dense: tau2/tau1 is rational");
    bool geometric = arrangement == Arrangement::Linked || arrangement == Arrangement::UnlinkedGeometric;
    if (!geometric && !unverified_ok)
        throw LayoutError(std::string(to_string(arrangement)) + " layout requires the unverified-configuration flag");

    ModelConfig m;
    m.arrangement = arrangement;
    m.unverified = !geometric;
    m.pres = model_presentation();
    m.lambda = {lp, lq};
    m.layout = layout;
    std::vector<CirclePoint> base = {layout.p, layout.pbar, layout.q, layout.qbar};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (base[i] == base[j]) throw LayoutError("base points must be distinct");

    for (int f = 0; f < 2; ++f) {
        const auto& in = f == kH ? layout.gaps_p : layout.gaps_q;
        CirclePoint x0 = m.fixed_point(f, false);
        std::vector<Arc> arcs;
        for (const NamedArc& g : in) arcs.push_back(g.arc);
        try {
            normalize(arcs);
        } catch (const OverlapError&) {
            throw LayoutError(std::string("seed gaps of ") + factor_point(f) + " overlap");
        }
        std::vector<SeedGap> right, left;
        for (const NamedArc& g : in) {
            if (g.arc.subset_of(m.side_arc(f, Side::Right))) right.push_back({g.name, g.arc, Side::Right, Surd()});
            else if (g.arc.subset_of(m.side_arc(f, Side::Left))) left.push_back({g.name, g.arc, Side::Left, Surd()});
            else throw LayoutError("seed gap " + g.name + " is not inside one side of " + factor_point(f));
        }
        if (right.empty()) throw LayoutError(std::string("no seed gap on the right side of ") + factor_point(f));
        // chart order: away from x0, counterclockwise on the right and clockwise on the left
        std::sort(right.begin(), right.end(),
                  [&](const SeedGap& a, const SeedGap& b) { return cyclic_less_from(x0, a.arc.lo, b.arc.lo); });
        std::sort(left.begin(), left.end(),
                  [&](const SeedGap& a, const SeedGap& b) { return cyclic_less_from(x0, b.arc.lo, a.arc.lo); });
        const Surd& tau = m.lambda[f].tau1();
        long nr = static_cast<long>(right.size()), nl = static_cast<long>(left.size());
        long D = std::lcm(4 * (nr + 1), 4 * (nl + 1));
        m.chart_den[f] = D;
        std::vector<long> rnum, lnum;
        for (auto* side : {&right, &left}) {
            long n = static_cast<long>(side->size());
            for (long i = 0; i < n; ++i) {
                (*side)[i].address = tau * Surd(mpq_class(i + 1, n + 1));
                (side == &right ? rnum : lnum).push_back((i + 1) * (D / (n + 1)));
            }
        }
        long n = nr;
        m.marker_num[2 * f] = rnum.front() - D / (2 * (n + 1));
        m.marker_num[2 * f + 1] = rnum.back() + D / (4 * (n + 1));
        m.marker_chart[2 * f] = m.chart_value(f, m.marker_num[2 * f], 0);
        m.marker_chart[2 * f + 1] = m.chart_value(f, m.marker_num[2 * f + 1], 0);
        m.seed_num[f] = rnum;
        m.seed_num[f].insert(m.seed_num[f].end(), lnum.begin(), lnum.end());
        std::vector<std::pair<std::string, Surd>> raddr, laddr;
        for (const SeedGap& g : right) raddr.push_back({g.name, g.address});
        raddr.push_back({to_string(f == kH ? Base::G_p : Base::G_q), m.marker_chart[2 * f]});
        raddr.push_back({to_string(f == kH ? Base::G_pbar : Base::G_qbar), m.marker_chart[2 * f + 1]});
        for (const SeedGap& g : left) laddr.push_back({g.name, g.address});
        check_cosets(m.lambda[f], raddr);
        check_cosets(m.lambda[f], laddr);
        m.seeds[f] = right;
        m.seeds[f].insert(m.seeds[f].end(), left.begin(), left.end());
    }

    // slots: four atoms and the regions between consecutive seed gaps on each side
    std::vector<Slot> slots;
    for (Base b : {Base::P, Base::Pbar, Base::Q, Base::Qbar}) {
        Slot s;
        s.is_atom = true;
        s.atom = b;
        s.point = m.atom_point(b);
        slots.push_back(s);
    }
    for (int f = 0; f < 2; ++f) {
        CirclePoint x0 = m.fixed_point(f, false), xb = m.fixed_point(f, true);
        for (Side side : {Side::Right, Side::Left}) {
            auto ids = m.seeds_on(f, side);
            if (ids.empty()) continue;
            std::vector<Arc> arcs;
            std::string tag = std::string(factor_point(f)) + (side == Side::Right ? " right " : " left ");
            std::size_t k = ids.size();
            for (std::size_t i = 0; i <= k; ++i) {
                std::string what = tag + std::to_string(i);
                if (side == Side::Right) {
                    CirclePoint lo = i == 0 ? x0 : m.seeds[f][ids[i - 1]].arc.hi;
                    CirclePoint hi = i == k ? xb : m.seeds[f][ids[i]].arc.lo;
                    arcs.push_back(region_arc(lo, hi, what));
                } else {
                    CirclePoint lo = i == k ? xb : m.seeds[f][ids[i]].arc.hi;
                    CirclePoint hi = i == 0 ? x0 : m.seeds[f][ids[i - 1]].arc.lo;
                    arcs.push_back(region_arc(lo, hi, what));
                }
            }
            for (std::size_t i = 0; i <= k; ++i) {
                Slot s;
                s.is_atom = false;
                s.factor = f;
                s.side = side;
                s.index = static_cast<int>(i);
                s.arc = arcs[i];
                slots.push_back(s);
            }
        }
    }
    for (Slot& s : slots)
        for (int f = 0; f < 2; ++f)
            for (std::size_t g = 0; g < m.seeds[f].size(); ++g) {
                const Arc& a = m.seeds[f][g].arc;
                if (s.is_atom ? a.contains(s.point) : s.arc.subset_of(a)) s.seed_of[f] = static_cast<int>(g);
            }
    auto slot_name = [&](const Slot& s) {
        if (s.is_atom) return std::string(to_string(s.atom));
        return std::string("region ") + std::to_string(s.index) + " on the " + (s.side == Side::Right ? "right" : "left") +
               " of " + factor_point(s.factor);
    };
    for (const Slot& s : slots) {
        int owner = s.is_atom ? (s.atom == Base::P || s.atom == Base::Pbar ? kH : kK) : s.factor;
        int other = 1 - owner;
        if (s.seed_of[other] < 0)
            throw LayoutError(slot_name(s) + " does not lie in a seed gap of " + factor_point(other));
    }
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j) {
            const Slot &a = slots[i], &b = slots[j];
            bool clash = false;
            if (a.is_atom && b.is_atom) clash = false;
            else if (a.is_atom) clash = b.arc.contains(a.point);
            else if (b.is_atom) clash = a.arc.contains(b.point);
            else clash = a.arc.intersects(b.arc);
            if (clash) throw LayoutError(slot_name(a) + " meets " + slot_name(b));
        }
    const CirclePoint& origin = layout.p;
    std::sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
        const CirclePoint& x = a.is_atom ? a.point : a.arc.lo;
        const CirclePoint& y = b.is_atom ? b.point : b.arc.lo;
        if (x == y) return a.is_atom && !b.is_atom;
        return cyclic_less_from(origin, x, y);
    });
    m.slots = std::move(slots);
    for (int f = 0; f < 2; ++f) m.region_slots_[f].assign(2, {});
    for (int f = 0; f < 2; ++f)
        for (int sd = 0; sd < 2; ++sd) {
            Side side = sd == 0 ? Side::Right : Side::Left;
            auto ids = m.seeds_on(f, side);
            if (ids.empty()) continue;
            std::vector<int> v(ids.size() + 1, -1);
            for (std::size_t i = 0; i < m.slots.size(); ++i) {
                const Slot& s = m.slots[i];
                if (!s.is_atom && s.factor == f && s.side == side) v[s.index] = static_cast<int>(i);
            }
            m.region_slots_[f][sd] = v;
        }
    return m;
}

namespace {

void require_chain(const std::vector<ChainLink>& chain) {
    std::string bad = failing_clause(chain);
    if (!bad.empty()) throw SeedChainViolation("seed chain fails at " + bad);
}

void require_in(const Arc& a, const CirclePoint& x, const std::string& what) {
    if (!a.contains(x)) throw SeedChainViolation(what);
}

} // namespace

ModelConfig build_linked_model(const TranslationGroup& lp, const TranslationGroup& lq, const LinkedSeeds& s) {
    require_in(s.I_p, s.p, "p is not in I_p");
    require_in(s.I_pbar, s.pbar, "pbar is not in I_pbar");
    require_in(s.I_q, s.q, "q is not in I_q");
    require_in(s.I_qbar, s.qbar, "qbar is not in I_qbar");
    require_chain({{"p", s.p, true},
                   {"u_q", s.I_q.lo, false},
                   {"v_p", s.I_p.hi, true},
                   {"q", s.q, true},
                   {"u_pbar", s.I_pbar.lo, false},
                   {"v_q", s.I_q.hi, false},
                   {"pbar", s.pbar, true},
                   {"u_qbar", s.I_qbar.lo, false},
                   {"v_pbar", s.I_pbar.hi, true},
                   {"qbar", s.qbar, true},
                   {"u_p", s.I_p.lo, false},
                   {"v_qbar", s.I_qbar.hi, true}});
    ModelLayout layout{s.p, s.pbar, s.q, s.qbar, {{"I_q", s.I_q}, {"I_qbar", s.I_qbar}}, {{"I_p", s.I_p}, {"I_pbar", s.I_pbar}}};
    return build_model(lp, lq, layout, Arrangement::Linked, false);
}

LinkedSeeds symmetric_linked_seeds() {
    auto r = CirclePoint::rational;
    return {r(0, 1), r(1, 4), r(1, 2), r(3, 4),
            Arc(r(7, 8), r(1, 8)), Arc(r(3, 8), r(5, 8)), Arc(r(1, 8), r(3, 8)), Arc(r(5, 8), r(7, 8))};
}

ModelConfig build_unlinked_geometric_model(const TranslationGroup& lp, const TranslationGroup& lq, const CirclePoint& p,
                                           const CirclePoint& qbar, const CirclePoint& q, const CirclePoint& pbar,
                                           const Arc& R_p, const Arc& R_q) {
    require_chain({{"p", p, true}, {"qbar", qbar, true}, {"q", q, true}, {"pbar", pbar, true}});
    require_in(R_p, q, "R_p does not contain q");
    require_in(R_p, qbar, "R_p does not contain qbar");
    require_in(R_q, p, "R_q does not contain p");
    require_in(R_q, pbar, "R_q does not contain pbar");
    if (!closures_cover({R_p, R_q})) throw SeedChainViolation("closures of R_p and R_q do not cover the circle");
    ModelLayout layout{p, pbar, q, qbar, {{"R_p", R_p}}, {{"R_q", R_q}}};
    return build_model(lp, lq, layout, Arrangement::UnlinkedGeometric, false);
}

ModelConfig build_parallel_model(const TranslationGroup& lp, const TranslationGroup& lq, const ParallelSeeds& s,
                                 bool unverified_ok) {
    require_chain({{"p", s.p, true},
                   {"u_1", s.I1.lo, false},
                   {"v_4", s.I4.hi, true},
                   {"qbar", s.qbar, true},
                   {"u_2", s.I2.lo, false},
                   {"v_1", s.I1.hi, true},
                   {"u_3", s.I3.lo, false},
                   {"v_2", s.I2.hi, true},
                   {"q", s.q, true},
                   {"u_4", s.I4.lo, false},
                   {"v_3", s.I3.hi, true},
                   {"pbar", s.pbar, true}});
    ModelLayout layout{s.p, s.pbar, s.q, s.qbar, {{"I_1", s.I1}, {"I_3", s.I3}}, {{"I_2", s.I2}, {"I_4", s.I4}}};
    return build_model(lp, lq, layout, Arrangement::Parallel, unverified_ok);
}

ModelConfig build_hexagon_model(const TranslationGroup& lp, const TranslationGroup& lq, const HexagonSeeds& s,
                                bool unverified_ok) {
    const auto& I = s.I;
    require_chain({{"p", s.p, true},
                   {"u_1", I[0].lo, false},
                   {"v_6", I[5].hi, true},
                   {"qbar", s.qbar, true},
                   {"u_2", I[1].lo, false},
                   {"v_1", I[0].hi, true},
                   {"u_3", I[2].lo, false},
                   {"v_2", I[1].hi, true},
                   {"q", s.q, true},
                   {"u_4", I[3].lo, false},
                   {"v_3", I[2].hi, true},
                   {"pbar", s.pbar, true},
                   {"u_5", I[4].lo, false},
                   {"v_4", I[3].hi, true},
                   {"u_6", I[5].lo, false},
                   {"v_5", I[4].hi, true}});
    ModelLayout layout{s.p, s.pbar, s.q, s.qbar,
                       {{"I_1", I[0]}, {"I_3", I[2]}, {"I_5", I[4]}},
                       {{"I_2", I[1]}, {"I_4", I[3]}, {"I_6", I[5]}}};
    return build_model(lp, lq, layout, Arrangement::Hexagon, unverified_ok);
}

// ---- virtual points ----

VirtualPoint atom(Base b) { return {NormalWord{}, b}; }

namespace {

int fixer(Base b) {
    switch (b) {
    case Base::P:
    case Base::Pbar: return kH;
    case Base::Q:
    case Base::Qbar: return kK;
    default: return -1;
    }
}

bool is_marker(Base b) { return fixer(b) < 0; }
int marker_factor(Base b) { return b == Base::G_p || b == Base::G_pbar ? kH : kK; }
int marker_index(Base b) { return static_cast<int>(b) - static_cast<int>(Base::G_p); }

struct View {
    const NormalWord* w;
    std::size_t off;
    Base base;
    std::size_t size() const { return w->syllables.size() - off; }
    bool empty() const { return size() == 0; }
    const Syllable& first() const { return w->syllables[off]; }
};

const NormalWord& empty_word() {
    static const NormalWord w;
    return w;
}

struct FastLoc {
    int slot = 0;
    bool has_chart = false;
    long num = 0, k = 0;  // chart (num / den) * tau1 + k * tau2 of chart_factor
    int chart_factor = -1;
    Side side = Side::Right;
    bool core = false;
};

int fast_region(const ModelConfig& m, int f, Side side, long num, long k) {
    int idx = 0;
    for (std::size_t g = 0; g < m.seeds[f].size(); ++g)
        if (m.seeds[f][g].side == side && m.chart_sign(f, m.seed_num[f][g] - num, -k) < 0) ++idx;
    return idx;
}

long checked_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("model: chart coordinate overflow");
    return r;
}

long checked_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("model: chart coordinate overflow");
    return r;
}

FastLoc base_loc(const ModelConfig& m, Base b) {
    FastLoc st;
    if (is_marker(b)) {
        int f = marker_factor(b);
        st.has_chart = true;
        st.num = m.marker_num[marker_index(b)];
        st.chart_factor = f;
        st.core = true;
        st.slot = m.region_slot(f, Side::Right, fast_region(m, f, Side::Right, st.num, 0));
    } else {
        st.slot = m.atom_slot(b);
    }
    return st;
}

FastLoc step(const ModelConfig& m, const FastLoc& prev, const Syllable& s) {
    FastLoc st = prev;
    int f = s.factor;
    long dn = checked_mul(s.exps[0], m.chart_den[f]), dk = s.exps[1];
    if (st.core && st.chart_factor == f) {
        st.num = checked_add(st.num, dn);
        st.k = checked_add(st.k, dk);
    } else {
        int g = m.slots[st.slot].seed_of[f];
        if (g < 0) throw std::logic_error("model: point outside the seed gaps of the acting factor");
        st.num = checked_add(m.seed_num[f][g], dn);
        st.k = dk;
        st.side = m.seeds[f][g].side;
        st.chart_factor = f;
        st.core = false;
        st.has_chart = true;
    }
    st.slot = m.region_slot(f, st.side, fast_region(m, f, st.side, st.num, st.k));
    return st;
}

// Locations of every suffix: locs[k] is the location of syllables[k..] applied to the base.
struct Located {
    View v;
    std::vector<FastLoc> locs;
};

Located locate_all(const ModelConfig& m, const View& v) {
    const auto& syl = v.w->syllables;
    Located out{v, std::vector<FastLoc>(syl.size() + 1)};
    out.locs[syl.size()] = base_loc(m, v.base);
    for (std::size_t k = syl.size(); k-- > v.off;) out.locs[k] = step(m, out.locs[k + 1], syl[k]);
    return out;
}

// Linear key inside the slot; charts run clockwise on left sides.
int key_compare(const ModelConfig& m, const FastLoc& a, const FastLoc& b) {
    if (a.slot != b.slot) return a.slot < b.slot ? -1 : 1;
    if (!a.has_chart || !b.has_chart) return 0;
    int c = m.chart_sign(a.chart_factor, a.num - b.num, a.k - b.k);
    return a.side == Side::Right ? c : -c;
}

struct Cursor {
    const Located* p;
    std::size_t off;
    std::size_t size() const { return p->v.w->syllables.size() - off; }
    bool empty() const { return size() == 0; }
    const Syllable& first() const { return p->v.w->syllables[off]; }
    const FastLoc& loc() const { return p->locs[off]; }
    Cursor tail() const { return {p, off + 1}; }
};

bool same(const Cursor& a, const Cursor& b) {
    if (a.p->v.base != b.p->v.base || a.size() != b.size()) return false;
    const auto& x = a.p->v.w->syllables;
    const auto& y = b.p->v.w->syllables;
    return std::equal(x.begin() + a.off, x.end(), y.begin() + b.off);
}

int compare_cursors(const ModelConfig& m, Cursor x, Cursor y, Cursor z);

// Order of two points sharing a location: both are images of one syllable, compare the preimages.
int inner(const ModelConfig& m, const Cursor& a, const Cursor& b) {
    if (a.empty() || b.empty() || !(a.first() == b.first()))
        throw std::logic_error("model: distinct points share a location");
    Located ref = locate_all(m, View{&empty_word(), 0, a.first().factor == kH ? Base::P : Base::Q});
    return compare_cursors(m, a.tail(), b.tail(), Cursor{&ref, 0});
}

int compare_cursors(const ModelConfig& m, Cursor x, Cursor y, Cursor z) {
    if (same(x, y) || same(y, z) || same(x, z)) return 0;
    while (!x.empty() && !y.empty() && !z.empty() && x.first() == y.first() && y.first() == z.first()) {
        x = x.tail();
        y = y.tail();
        z = z.tail();
    }
    int xy = key_compare(m, x.loc(), y.loc()), yz = key_compare(m, y.loc(), z.loc()), zx = key_compare(m, z.loc(), x.loc());
    if (xy == 0) return inner(m, x, y);
    if (yz == 0) return inner(m, y, z);
    if (zx == 0) return inner(m, z, x);
    if ((xy < 0 && yz < 0) || (yz < 0 && zx < 0) || (zx < 0 && xy < 0)) return 1;
    return -1;
}

View view_of(const VirtualPoint& x) { return {&x.word, 0, x.base}; }

} // namespace

int image_region_slot(const ModelConfig& m, int factor, int seed, const std::vector<long>& exps) {
    const SeedGap& g = m.seeds[factor][seed];
    long num = checked_add(m.seed_num[factor][seed], checked_mul(exps[0], m.chart_den[factor]));
    return m.region_slot(factor, g.side, fast_region(m, factor, g.side, num, exps[1]));
}

std::vector<int> image_region_slots(const ModelConfig& m, int factor, Side side, int index,
                                    const std::vector<long>& exps) {
    auto ids = m.seeds_on(factor, side);
    int last = static_cast<int>(ids.size());
    long dn = checked_mul(exps[0], m.chart_den[factor]);
    int from = 0, to = last;
    if (index > 0) from = fast_region(m, factor, side, checked_add(m.seed_num[factor][ids[index - 1]], dn), exps[1]);
    if (index < last) to = fast_region(m, factor, side, checked_add(m.seed_num[factor][ids[index]], dn), exps[1]);
    std::vector<int> out;
    for (int i = from; i <= to; ++i) out.push_back(m.region_slot(factor, side, i));
    return out;
}

std::vector<int> side_region_slots(const ModelConfig& m, int factor, Side side) {
    return m.region_slots_[factor][side == Side::Right ? 0 : 1];
}

VirtualPoint canonical(const VirtualPoint& x) {
    VirtualPoint r = x;
    int f = fixer(r.base);
    if (f >= 0 && !r.word.empty() && r.word.syllables.back().factor == f) r.word.syllables.pop_back();
    return r;
}

VirtualPoint act(const ModelConfig&, const NormalWord& w, const VirtualPoint& x) {
    return canonical({multiply(w, x.word), x.base});
}

std::string to_string(const ModelConfig& m, const VirtualPoint& x) {
    if (x.word.empty()) return to_string(x.base);
    return to_string(x.word, m.pres) + " . " + to_string(x.base);
}

std::optional<Surd> marker_address(const ModelConfig& m, const VirtualPoint& x) {
    if (!is_marker(x.base)) return std::nullopt;
    int other = 1 - marker_factor(x.base);
    if (!x.word.empty() && x.word.syllables.back().factor == other)
        return m.lambda[other].value(x.word.syllables.back().exps);
    return Surd(0);
}

Loc locate(const ModelConfig& m, const VirtualPoint& x) {
    FastLoc st = base_loc(m, x.base);
    for (std::size_t k = x.word.syllables.size(); k-- > 0;) st = step(m, st, x.word.syllables[k]);
    Loc out;
    out.slot = st.slot;
    if (st.has_chart) out.chart = m.chart_value(st.chart_factor, st.num, st.k);
    out.chart_factor = st.chart_factor;
    out.side = st.side;
    out.core = st.core;
    return out;
}

int compare(const ModelConfig& m, const VirtualPoint& x, const VirtualPoint& y, const VirtualPoint& z) {
    Located a = locate_all(m, view_of(x)), b = locate_all(m, view_of(y)), c = locate_all(m, view_of(z));
    return compare_cursors(m, {&a, 0}, {&b, 0}, {&c, 0});
}

void sort_cyclic(const ModelConfig& m, std::vector<VirtualPoint>& pts) {
    if (pts.size() < 3) return;
    VirtualPoint r = pts.front();
    std::sort(pts.begin() + 1, pts.end(),
              [&](const VirtualPoint& a, const VirtualPoint& b) { return compare(m, r, a, b) == 1; });
}

int locate_slot(const ModelConfig& m, const VirtualPoint& x) {
    FastLoc st = base_loc(m, x.base);
    for (std::size_t k = x.word.syllables.size(); k-- > 0;) st = step(m, st, x.word.syllables[k]);
    return st.slot;
}

int membership(const ModelConfig& m, const VirtualPoint& x, const ArcSet& s) {
    const Slot& sl = m.slots[locate_slot(m, x)];
    if (sl.is_atom) return contains(s, sl.point) ? 1 : 0;
    bool meets = false;
    for (const Arc& a : s.arcs()) {
        if (sl.arc.subset_of(a)) return 1;
        if (sl.arc.intersects(a)) meets = true;
    }
    return meets ? -1 : 0;
}

GapSystemView gaps_and_core(const ModelConfig& m, char label, Side side) {
    int f;
    bool flip;
    switch (label) {
    case 'p': f = kH, flip = false; break;
    case 'P': f = kH, flip = true; break;
    case 'q': f = kK, flip = false; break;
    case 'Q': f = kK, flip = true; break;
    default: throw std::invalid_argument("gaps_and_core: label must be one of p, P, q, Q");
    }
    Side s = flip ? (side == Side::Right ? Side::Left : Side::Right) : side;
    GapSystemView v{f, s, {}};
    for (int i : m.seeds_on(f, s)) v.seeds.push_back(m.seeds[f][i]);
    return v;
}

GapInfo gap_info(const ModelConfig& m, int factor, const VirtualPoint& x) {
    Loc l = locate(m, x);
    const Slot& sl = m.slots[l.slot];
    GapInfo gi;
    if (sl.is_atom && fixer(sl.atom) == factor) {
        gi.in_core = true;
        return gi;
    }
    if (!sl.is_atom && sl.factor == factor) {
        gi.side = l.side;
        gi.address = *l.chart;
        if (l.core) gi.in_core = true;
        else gi.in_gap = true;
        return gi;
    }
    int g = sl.seed_of[factor];
    if (g < 0) throw std::logic_error("gap_info: slot outside the seed gaps");
    gi.in_gap = true;
    gi.seed = g;
    gi.side = m.seeds[factor][g].side;
    gi.address = m.seeds[factor][g].address;
    return gi;
}

NorthSouthReport north_south_audit(const ModelConfig& m, const NormalWord& w, const std::vector<VirtualPoint>& samples,
                                   int iterations) {
    NorthSouthReport rep;
    if (w.empty()) throw std::invalid_argument("north_south_audit: w must be nontrivial");
    if (iterations < 1) throw std::invalid_argument("north_south_audit: iterations must be positive");
    NormalWord wi = invert(w);
    std::vector<std::pair<VirtualPoint, bool>> tails;
    for (const VirtualPoint& x0 : samples) {
        VirtualPoint x = canonical(x0);
        if (act(m, w, x) == x) {
            ++rep.skipped_fixed;
            continue;
        }
        for (int dir = 0; dir < 2; ++dir) {
            const NormalWord& g = dir == 0 ? w : wi;
            std::vector<VirtualPoint> orbit{x};
            for (int k = 0; k < iterations; ++k) orbit.push_back(act(m, g, orbit.back()));
            std::size_t from = orbit.size() / 2;
            int sign = 0;
            for (std::size_t k = from; k + 2 < orbit.size(); ++k) {
                int c = compare(m, orbit[k], orbit[k + 1], orbit[k + 2]);
                if (c == 0 || (sign != 0 && c != sign)) {
                    rep.pass = false;
                    rep.failure = std::string(dir == 0 ? "forward" : "backward") + " orbit of " + to_string(m, x) +
                                  " is not monotone";
                    rep.witness = {orbit[k], orbit[k + 1], orbit[k + 2]};
                    return rep;
                }
                sign = c;
            }
            for (std::size_t k = from; k < orbit.size(); ++k) {
                tails.push_back({orbit[k], dir == 0});
                (dir == 0 ? rep.forward_tail : rep.backward_tail).push_back(orbit[k]);
            }
        }
    }
    std::vector<VirtualPoint> pts;
    std::vector<bool> fwd;
    for (const auto& [p, f] : tails) {
        bool dup = false;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p) {
                dup = true;
                if (fwd[i] != f) {
                    rep.pass = false;
                    rep.failure = "point " + to_string(m, p) + " lies in both tails";
                    rep.witness = {p, p, p};
                    return rep;
                }
            }
        if (!dup) {
            pts.push_back(p);
            fwd.push_back(f);
        }
    }
    if (pts.size() < 3) return rep;
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin() + 1, order.end(),
              [&](std::size_t a, std::size_t b) { return compare(m, pts[0], pts[a], pts[b]) == 1; });
    int changes = 0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (fwd[order[i]] != fwd[order[(i + 1) % order.size()]]) {
            ++changes;
            at = i;
        }
    if (changes > 2) {
        rep.pass = false;
        rep.failure = "forward and backward tails interleave";
        rep.witness = {pts[order[at]], pts[order[(at + 1) % order.size()]], pts[order[(at + 2) % order.size()]]};
    }
    return rep;
}

ChainAudit geometric_chain_audit(const ModelConfig& m, const NormalWord& h, const NormalWord& f, int iterations) {
    auto positive = [&](const NormalWord& w, int factor) {
        return w.syllables.size() == 1 && w.syllables[0].factor == factor &&
               m.lambda[factor].value(w.syllables[0].exps).sign() > 0;
    };
    if (!positive(h, kH) || !positive(f, kK))
        throw std::invalid_argument("geometric_chain_audit: need h in H and f in K with positive translation");
    NormalWord hi = invert(h), fi = invert(f);
    VirtualPoint P = atom(Base::P), Pb = atom(Base::Pbar), Q = atom(Base::Q), Qb = atom(Base::Qbar);
    std::vector<std::pair<std::string, VirtualPoint>> aux = {
        {"p", P},           {"h^-1(q)", act(m, hi, Q)}, {"f^-1(p)", act(m, fi, P)},    {"q", Q},
        {"f^-1(pbar)", act(m, fi, Pb)}, {"h(q)", act(m, h, Q)}, {"pbar", Pb}, {"h(qbar)", act(m, h, Qb)},
        {"f(pbar)", act(m, f, Pb)}, {"qbar", Qb},   {"f(p)", act(m, f, P)},       {"h^-1(qbar)", act(m, hi, Qb)}};
    ChainAudit out;
    for (std::size_t i = 1; i + 1 < aux.size(); ++i)
        if (compare(m, aux[0].second, aux[i].second, aux[i + 1].second) != 1) {
            out.pass = false;
            out.failures.push_back(aux[i].first + " < " + aux[i + 1].first);
        }
    struct Bracket {
        std::string name;
        NormalWord c;
        std::size_t lo, hi;
    };
    auto comm = [&](const NormalWord& a, const NormalWord& b) {
        return multiply(multiply(a, b), multiply(invert(a), invert(b)));
    };
    std::vector<Bracket> brackets = {{"[f^-1,h^-1]", comm(fi, hi), 1, 2},
                                     {"[h,f^-1]", comm(h, fi), 4, 5},
                                     {"[f,h]", comm(f, h), 7, 8},
                                     {"[h^-1,f]", comm(hi, f), 10, 11}};
    std::vector<VirtualPoint> samples;
    for (Base b : {Base::G_p, Base::G_pbar, Base::G_q, Base::G_qbar, Base::P, Base::Pbar, Base::Q, Base::Qbar})
        samples.push_back(atom(b));
    for (const Bracket& br : brackets) {
        NorthSouthReport ns = north_south_audit(m, br.c, samples, iterations);
        if (!ns.pass) {
            out.pass = false;
            out.failures.push_back(br.name + ": " + ns.failure);
            continue;
        }
        const VirtualPoint& lo = aux[br.lo].second;
        const VirtualPoint& hi2 = aux[br.hi].second;
        bool ok = true;
        for (const VirtualPoint& b : ns.backward_tail)
            for (const VirtualPoint& a : ns.forward_tail)
                if (compare(m, lo, b, a) != 1 || compare(m, b, a, hi2) != 1) ok = false;
        if (!ok) {
            out.pass = false;
            out.failures.push_back(br.name + ": fixed points outside (" + aux[br.lo].first + ", " + aux[br.hi].first +
                                   ") or in the wrong order");
        }
    }
    return out;
}

} // namespace pp
