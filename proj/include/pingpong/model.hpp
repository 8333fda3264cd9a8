#pragma once

#include "pingpong/circle.hpp"
#include "pingpong/words.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

// Lambda = Z*tau1 + Z*tau2 inside R, with tau1, tau2 > 0 in a common field Q(sqrt d).
class TranslationGroup {
public:
    TranslationGroup() : TranslationGroup(Surd(1), Surd(0, 1, 2)) {}
    TranslationGroup(const Surd& tau1, const Surd& tau2);

    const Surd& tau1() const { return t1_; }
    const Surd& tau2() const { return t2_; }
    // tau2 / tau1 irrational.
    bool dense() const;
    Surd value(const std::vector<long>& exps) const;
    bool contains(const Surd& x) const;
    // Integer coordinates of x when x is in the group.
    std::optional<std::array<mpz_class, 2>> coordinates(const Surd& x) const;

private:
    Surd t1_, t2_;
};

struct NotDense : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SeedChainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LayoutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Base { P, Pbar, Q, Qbar, G_p, G_pbar, G_q, G_qbar };
const char* to_string(Base b);

enum class Side { Right, Left };
enum class Arrangement { Linked, UnlinkedGeometric, Parallel, Hexagon, Custom };
const char* to_string(Arrangement a);

// Factor 0 is H (stabilizer of p), factor 1 is K (stabilizer of q).
constexpr int kH = 0;
constexpr int kK = 1;

struct NamedArc {
    std::string name;
    Arc arc;
};

struct SeedGap {
    std::string name;
    Arc arc;
    Side side;
    Surd address;  // chart value of the gap; images sit at address + lambda
};

struct Slot {
    bool is_atom;
    Base atom;        // when is_atom
    CirclePoint point;
    int factor = -1;  // region owner when !is_atom
    Side side = Side::Right;
    int index = 0;
    Arc arc;
    std::array<int, 2> seed_of{-1, -1};  // seed gap of each factor containing this slot
};

struct ModelLayout {
    CirclePoint p, pbar, q, qbar;
    std::vector<NamedArc> gaps_p;  // seed gaps of p (acted on by H)
    std::vector<NamedArc> gaps_q;  // seed gaps of q (acted on by K)
};

class ModelConfig {
public:
    Arrangement arrangement = Arrangement::Custom;
    bool unverified = false;
    Presentation pres;
    std::array<TranslationGroup, 2> lambda;
    ModelLayout layout;
    std::array<std::vector<SeedGap>, 2> seeds;  // per factor: right side by chart, then left side by chart
    std::vector<Slot> slots;                     // cyclic order starting at P
    std::array<Surd, 4> marker_chart;            // G_p, G_pbar, G_q, G_qbar

    CirclePoint fixed_point(int factor, bool companion) const;
    CirclePoint atom_point(Base b) const;
    Arc side_arc(int factor, Side side) const;
    std::vector<int> seeds_on(int factor, Side side) const;
    int region_slot(int factor, Side side, int index) const;
    int atom_slot(Base b) const;
    int seed_index(int factor, const std::string& name) const;
    // Region index on a side for a chart value.
    int region_index(int factor, Side side, const Surd& chart) const;

    std::array<std::vector<std::vector<int>>, 2> region_slots_;  // [factor][side] -> slot ids

    // Charts in integer form: (num / chart_den) * tau1 + k * tau2.
    std::array<long, 2> chart_den{1, 1};
    std::array<std::vector<long>, 2> seed_num;
    std::array<long, 4> marker_num{};
    // Sign of (num / chart_den) * tau1 + k * tau2.
    int chart_sign(int factor, long num, long k) const;
    Surd chart_value(int factor, long num, long k) const;
};

// Generic builder: validates the base table and assigns chart addresses i*tau1/(m+1).
ModelConfig build_model(const TranslationGroup& lp, const TranslationGroup& lq, const ModelLayout& layout,
                        Arrangement arrangement, bool unverified_ok);

struct LinkedSeeds {
    CirclePoint p, q, pbar, qbar;
    Arc I_p, I_pbar, I_q, I_qbar;
};
ModelConfig build_linked_model(const TranslationGroup& lp, const TranslationGroup& lq, const LinkedSeeds& s);
LinkedSeeds symmetric_linked_seeds();

ModelConfig build_unlinked_geometric_model(const TranslationGroup& lp, const TranslationGroup& lq, const CirclePoint& p,
                                           const CirclePoint& qbar, const CirclePoint& q, const CirclePoint& pbar,
                                           const Arc& R_p, const Arc& R_q);

struct ParallelSeeds {
    CirclePoint p, qbar, q, pbar;
    Arc I1, I2, I3, I4;
};
// Non-geometric layout; requires the unverified-configuration flag.
ModelConfig build_parallel_model(const TranslationGroup& lp, const TranslationGroup& lq, const ParallelSeeds& s,
                                 bool unverified_ok);

struct HexagonSeeds {
    CirclePoint p, qbar, q, pbar;
    std::array<Arc, 6> I;  // I[0] = I_1, ..., I[5] = I_6
};
ModelConfig build_hexagon_model(const TranslationGroup& lp, const TranslationGroup& lq, const HexagonSeeds& s,
                                bool unverified_ok);

struct VirtualPoint {
    NormalWord word;
    Base base = Base::P;
    bool operator==(const VirtualPoint& o) const { return base == o.base && word == o.word; }
    bool operator!=(const VirtualPoint& o) const { return !(*this == o); }
};

VirtualPoint atom(Base b);
VirtualPoint canonical(const VirtualPoint& x);
VirtualPoint act(const ModelConfig& m, const NormalWord& w, const VirtualPoint& x);
std::string to_string(const ModelConfig& m, const VirtualPoint& x);

// Marker address: lambda of the trailing syllable of the other factor (absorbed into the gap midpoint).
std::optional<Surd> marker_address(const ModelConfig& m, const VirtualPoint& x);

struct Loc {
    int slot;
    std::optional<Surd> chart;  // set for region slots
    int chart_factor = -1;
    Side side = Side::Right;
    bool core = false;  // chart is a core value of chart_factor rather than a gap address
};
Loc locate(const ModelConfig& m, const VirtualPoint& x);
int locate_slot(const ModelConfig& m, const VirtualPoint& x);

int compare(const ModelConfig& m, const VirtualPoint& x, const VirtualPoint& y, const VirtualPoint& z);

// Cyclic sort of distinct points starting from the first element.
void sort_cyclic(const ModelConfig& m, std::vector<VirtualPoint>& pts);

// +1 inside, 0 outside, -1 undecidable at slot resolution.
int membership(const ModelConfig& m, const VirtualPoint& x, const ArcSet& s);

struct GapInfo {
    bool in_core = false;
    bool in_gap = false;
    Side side = Side::Right;
    Surd address;      // gap address when in_gap, chart value when in core on a side
    int seed = -1;     // seed gap index when the point sits in a seed gap
};
// label: 'p', 'P' (pbar), 'q', 'Q' (qbar); the view is the given side of that point.
struct GapSystemView {
    int factor;
    Side side;
    std::vector<SeedGap> seeds;
};
GapSystemView gaps_and_core(const ModelConfig& m, char label, Side side);
GapInfo gap_info(const ModelConfig& m, int factor, const VirtualPoint& x);

struct NorthSouthReport {
    bool pass = true;
    std::string failure;
    std::array<VirtualPoint, 3> witness;
    std::vector<VirtualPoint> forward_tail, backward_tail;
    int skipped_fixed = 0;
};
NorthSouthReport north_south_audit(const ModelConfig& m, const NormalWord& w, const std::vector<VirtualPoint>& samples,
                                   int iterations);

// The chain of twelve auxiliary points and commutator clusters for one (h, f) pair of a linked model.
struct ChainAudit {
    bool pass = true;
    std::vector<std::string> failures;
};
ChainAudit geometric_chain_audit(const ModelConfig& m, const NormalWord& h, const NormalWord& f, int iterations = 12);

// Region slot holding the image of seed gap `seed` of `factor` under the syllable with exponents exps.
int image_region_slot(const ModelConfig& m, int factor, int seed, const std::vector<long>& exps);
// Region slots met by the image of region `index` on `side` of `factor`.
std::vector<int> image_region_slots(const ModelConfig& m, int factor, Side side, int index,
                                    const std::vector<long>& exps);
// All region slots on one side of a factor.
std::vector<int> side_region_slots(const ModelConfig& m, int factor, Side side);

// Two-factor presentation used by every model: H = <h1, h2>, K = <f1, f2>.
Presentation model_presentation();

} // namespace pp
