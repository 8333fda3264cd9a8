#pragma once

#include "pingpong/circle.hpp"
#include "pingpong/model.hpp"
#include "pingpong/words.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

struct ChainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CoverageFailure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ActionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentGapData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class BuilderKind { None, Linked, UnlinkedGeometric, Parallel };
const char* to_string(BuilderKind b);

// U_H belongs to the stabilizer of p (factor 0), U_K to that of q (factor 1).
struct Partition {
    ArcSet U_H, U_K;
    BuilderKind builder = BuilderKind::None;
    std::vector<NamedArc> inputs;
    std::vector<std::pair<std::string, CirclePoint>> points;
    bool operator==(const Partition& o) const { return U_H == o.U_H && U_K == o.U_K; }
};

// Checks non-empty and disjoint.
Partition make_partition(ArcSet U_H, ArcSet U_K);

Partition build_linked_partition(const Arc& I_p, const Arc& I_pbar, const Arc& I_q, const Arc& I_qbar,
                                 const CirclePoint& p, const CirclePoint& q, const CirclePoint& pbar,
                                 const CirclePoint& qbar);
Partition build_unlinked_geometric(const Arc& R_p, const Arc& R_q);
Partition build_unlinked_parallel(const Arc& I1, const Arc& I2, const Arc& I3, const Arc& I4, const CirclePoint& p,
                                  const CirclePoint& qbar, const CirclePoint& q, const CirclePoint& pbar);
// Rebuilds from the recorded inputs; throws when the partition is not builder-produced.
Partition rebuild(const Partition& part);

enum class VerifyMode { Finite, Axis };
enum class VerifyStatus { Verified, Violated, Inapplicable };
const char* to_string(VerifyMode m);
const char* to_string(VerifyStatus s);

struct VerifyReport {
    VerifyMode mode = VerifyMode::Finite;
    int radius = 0;
    VerifyStatus status = VerifyStatus::Verified;
    std::string witness_word;
    std::string witness_arc;
    std::string image_arc;
    std::string reason;
    long checks = 0;
};

// Image of an open arc under an orientation-preserving map.
Arc image_arc(const MoebiusMap& g, const Arc& a);

// One direction: nontrivial words of `factor` must map the other factor's set into this factor's set.
VerifyReport verify_factor(const Partition& part, int factor, const Presentation& pres, const Assignment& assignment,
                           int radius);
VerifyReport verify_finite(const Partition& part, const Presentation& pres, const Assignment& assignment, int radius);
// Model mode: exact on region slots, plus virtual sample points built from words of length <= depth.
VerifyReport verify_finite(const Partition& part, const ModelConfig& model, int radius, int depth = 4);
VerifyReport verify_axis(const Partition& part, const ModelConfig& model);

struct Containment {
    std::string name;
    bool holds = false;
};
// The four containments closing the linked ping-pong argument, for h in H_+(p) and f in H_+(q)
// given by exponent vectors with positive translation.
std::vector<Containment> linked_proof_containments(const ModelConfig& linked, const std::vector<long>& h,
                                                   const std::vector<long>& f);

struct UnlinkedGapData {
    CirclePoint p, qbar, q, pbar;
    std::vector<Arc> right_p, left_p, right_q, left_q;
};

enum class UnlinkedLabel { GeometricU, NonGeometric1, NonGeometric2, Hexagonal };
const char* to_string(UnlinkedLabel l);

struct HexagonWitness {
    NormalWord h, f;
    std::vector<std::string> containments;  // h(I_1) in I_2, f(I_2) in I_1, h(I_5) in I_4, f(I_4) in I_5
    VirtualPoint x1, fh_x1, x5, fh_x5;
    bool closures_disjoint = false;
    bool holds = false;
};

struct UnlinkedConfig {
    UnlinkedLabel label = UnlinkedLabel::Hexagonal;
    std::map<std::string, Arc> intervals;
    std::string reason;
    std::optional<HexagonWitness> witness;
};

UnlinkedConfig classify_unlinked_config(const UnlinkedGapData& data);
// The ping-pong partition for a geometric or first non-geometric configuration.
Partition partition_for(const UnlinkedConfig& cfg, const UnlinkedGapData& data);

// Looks for h in H_+(p), f in H_+(q) with fh fixing the closures of I_1 and I_5 setwise.
HexagonWitness hexagon_witness(const ModelConfig& hexagon);

struct SameOrbitResult {
    bool holds = false;
    UnlinkedConfig config;
    std::string report;
};
// g must send p to q or qbar; holds iff the data classify as GeometricU.
SameOrbitResult same_orbit_constraint(const UnlinkedGapData& data, const std::optional<MoebiusMap>& g);

struct WordWitness {
    NormalWord word;
    std::string kind;  // "direct" or "conjugated"
};

struct FreeProductCertificate {
    bool issued = false;
    std::string reason;
    int radius = 0;
    long words_checked = 0;
    long trivial_words = 0;
    long direct_witnesses = 0;
    long conjugated_witnesses = 0;
    std::string forwarded;  // witness forwarded from a failed input
};

FreeProductCertificate free_product_certificate(const VerifyReport& report, const HLCertificate& hl,
                                                const Presentation& pres, const Assignment& assignment,
                                                const Partition& part);
FreeProductCertificate free_product_certificate(const VerifyReport& report, const ModelConfig& model,
                                                const Partition& part, int radius);

} // namespace pp
