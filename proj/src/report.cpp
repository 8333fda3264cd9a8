#include "pingpong/report.hpp"

#include "pingpong/classifier.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <random>

namespace pp {

namespace {

std::string approx_text(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

mpz_class big(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (!v.is_string()) throw std::invalid_argument(std::string("surd field ") + key + " must be a decimal string");
    return mpz_class(v.get<std::string>());
}

}  // namespace

Json to_json(const Surd& x) {
    Json j;
    j["a_num"] = x.a().get_num().get_str();
    j["a_den"] = x.a().get_den().get_str();
    j["b_num"] = x.b().get_num().get_str();
    j["b_den"] = x.b().get_den().get_str();
    j["d"] = x.d().get_str();
    j["approx"] = approx_text(x.approx());
    return j;
}

Surd surd_from_json(const Json& j) {
    mpq_class a(big(j, "a_num"), big(j, "a_den"));
    mpq_class b(big(j, "b_num"), big(j, "b_den"));
    a.canonicalize();
    b.canonicalize();
    mpz_class d = big(j, "d");
    if (b == 0) return Surd(a);
    return Surd(a, b, d);
}

Json to_json(const CirclePoint& x) {
    if (x.is_inf()) return Json{{"inf", true}};
    return to_json(x.value());
}

CirclePoint point_from_json(const Json& j) {
    if (j.contains("inf") && j.at("inf").get<bool>()) return CirclePoint::infinity();
    return CirclePoint(surd_from_json(j));
}

Json to_json(const Arc& a) { return Json{{"text", a.str()}, {"lo", to_json(a.lo)}, {"hi", to_json(a.hi)}}; }

Arc arc_from_json(const Json& j) { return Arc(point_from_json(j.at("lo")), point_from_json(j.at("hi"))); }

Json to_json(const ArcSet& s) {
    Json out = Json::array();
    for (const Arc& a : s.arcs()) out.push_back(to_json(a));
    return out;
}

std::string Report::dump() const { return json.dump(2) + "\n"; }

CommandError::CommandError(std::size_t i, const std::string& o, const std::exception& cause)
    : std::runtime_error("command " + std::to_string(i + 1) + " (" + o + "): " + cause.what()), index(i), op(o) {}

namespace {

Json arcs_json(const std::vector<Arc>& v) {
    Json out = Json::array();
    for (const Arc& a : v) out.push_back(to_json(a));
    return out;
}

Json fixed_json(const FixedPair& f) {
    return Json{{"attracting", to_json(f.attracting)}, {"repelling", to_json(f.repelling)}};
}

Json inequalities_json(const std::vector<Inequality>& v) {
    Json out = Json::array();
    for (const Inequality& i : v) out.push_back(Json{{"text", i.text}, {"holds", i.holds}});
    return out;
}

Json verify_json(const VerifyReport& r) {
    Json j{{"mode", to_string(r.mode)}, {"radius", r.radius}, {"status", to_string(r.status)}, {"checks", r.checks}};
    if (!r.witness_word.empty()) j["witness_word"] = r.witness_word;
    if (!r.witness_arc.empty()) j["witness_arc"] = r.witness_arc;
    if (!r.image_arc.empty()) j["image_arc"] = r.image_arc;
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

Json certificate_json(const FreeProductCertificate& c) {
    Json j{{"issued", c.issued},
           {"radius", c.radius},
           {"words_checked", c.words_checked},
           {"trivial_words", c.trivial_words},
           {"direct_witnesses", c.direct_witnesses},
           {"conjugated_witnesses", c.conjugated_witnesses}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (!c.forwarded.empty()) j["forwarded"] = c.forwarded;
    return j;
}

std::string point_text(const Presentation& pres, const VirtualPoint& x) {
    if (x.word.empty()) return to_string(x.base);
    return to_string(x.word, pres) + " . " + to_string(x.base);
}

Json hexagon_json(const HexagonWitness& w) {
    Presentation pres = model_presentation();
    Json j{{"holds", w.holds}, {"h", to_string(w.h, pres)}, {"f", to_string(w.f, pres)}};
    j["containments"] = w.containments;
    j["x1"] = point_text(pres, w.x1);
    j["fh_x1"] = point_text(pres, w.fh_x1);
    j["x5"] = point_text(pres, w.x5);
    j["fh_x5"] = point_text(pres, w.fh_x5);
    j["closures_disjoint"] = w.closures_disjoint;
    return j;
}

Json points_json(const CirclePoint& p, const CirclePoint& q, const CirclePoint& pbar, const CirclePoint& qbar) {
    return Json{{"p", to_json(p)}, {"q", to_json(q)}, {"pbar", to_json(pbar)}, {"qbar", to_json(qbar)}};
}

struct Finding {
    std::string kind, detail;
};

class Runner {
public:
    explicit Runner(const Scenario& sc) : sc_(sc) {}

    Report run() {
        Report rep;
        Json commands = Json::array();
        for (std::size_t i = 0; i < sc_.commands.size(); ++i) {
            const Command& c = sc_.commands[i];
            Json entry{{"op", c.op}, {"line", c.line}};
            Json params = Json::object();
            for (const auto& [k, v] : c.params) params[k] = v;
            entry["params"] = params;
            diagram_ = Json();
            std::size_t before = findings_.size();
            try {
                entry["result"] = dispatch(c);
            } catch (const std::exception& e) {
                throw CommandError(i, c.op, e);
            }
            for (std::size_t k = before; k < findings_.size(); ++k) finding_command_.push_back(i);
            if (!diagram_.is_null()) {
                std::string name = sc_.name + "-" + std::to_string(i + 1) + "-" + c.op;
                entry["diagram"] = name;
                rep.diagrams.push_back({name, diagram_});
            }
            commands.push_back(entry);
        }
        Json found = Json::array();
        for (std::size_t k = 0; k < findings_.size(); ++k)
            found.push_back(Json{{"command", finding_command_[k] + 1},
                                 {"kind", findings_[k].kind},
                                 {"report", "COUNTEREXAMPLE: " + findings_[k].detail}});
        rep.exit_code = !findings_.empty() || violated_ ? kExitViolation : inapplicable_ ? kExitInapplicable : kExitOk;
        const char* status = rep.exit_code == kExitViolation      ? "violation"
                             : rep.exit_code == kExitInapplicable ? "inapplicable"
                                                                  : "ok";
        rep.json = Json{{"scenario", sc_.name},
                        {"kind", sc_.kind == ScenarioKind::Model ? "model" : "moebius"},
                        {"status", status},
                        {"counterexamples", found},
                        {"commands", commands},
                        {"note", "approx fields are non-normative decimal renderings; exact values are the "
                                 "(a_num, a_den, b_num, b_den, d) fields"}};
        return rep;
    }

private:
    const Scenario& sc_;
    std::unique_ptr<ModelConfig> model_;
    std::optional<std::optional<Partition>> model_part_;
    std::vector<Finding> findings_;
    std::vector<std::size_t> finding_command_;
    bool violated_ = false, inapplicable_ = false;
    Json diagram_;

    const ModelConfig& model() {
        if (!model_) model_ = std::make_unique<ModelConfig>(sc_.model.build());
        return *model_;
    }
    const std::optional<Partition>& model_partition() {
        if (!model_part_) model_part_ = sc_.model.partition();
        return *model_part_;
    }

    MoebiusMap word_map(const std::string& text) {
        const MoebiusScenario& m = sc_.moebius;
        return evaluate(parse_word(text, m.pres), m.pres, m.assignment());
    }

    void model_diagram(const std::optional<Partition>& part) {
        const ModelScenario& m = sc_.model;
        const ModelLayout& lay = model().layout;
        Json d{{"points", points_json(m.p, m.q, m.pbar, m.qbar)}};
        Json gp = Json::array(), gq = Json::array();
        for (const NamedArc& a : lay.gaps_p) gp.push_back(to_json(a.arc));
        for (const NamedArc& a : lay.gaps_q) gq.push_back(to_json(a.arc));
        d["gaps_p"] = gp;
        d["gaps_q"] = gq;
        if (part) {
            d["U_H"] = to_json(part->U_H);
            d["U_K"] = to_json(part->U_K);
        }
        diagram_ = d;
    }

    void note_status(const VerifyReport& r) {
        if (r.status == VerifyStatus::Violated) violated_ = true;
        if (r.status == VerifyStatus::Inapplicable) inapplicable_ = true;
    }

    Json dispatch(const Command& c) {
        if (c.op == "classify") return classify_cmd();
        if (c.op == "classify-pair") return classify_pair_cmd(c);
        if (c.op == "classify-commutator") return classify_commutator_cmd(c);
        if (c.op == "census") return census_cmd(c);
        if (c.op == "certify") return certify_cmd(c);
        if (c.op == "verify") return verify_cmd(c);
        if (c.op == "classify-unlinked") return unlinked_cmd();
        if (c.op == "hexagon") return hexagon_cmd();
        if (c.op == "containments") return containments_cmd(c);
        throw std::invalid_argument("unknown op " + c.op);
    }

    Json classify_cmd() {
        Json j = Json::array();
        for (const auto& [name, g] : sc_.moebius.generators) {
            MapClass k = classify(g);
            Json e{{"generator", name}, {"matrix", g.str()}, {"class", to_string(k)}};
            if (k == MapClass::Hyperbolic) e["fixed"] = fixed_json(fixed_pair(g));
            j.push_back(e);
        }
        return j;
    }

    Json classify_pair_cmd(const Command& c) {
        PairClass pc = classify_pair(word_map(c.text("f")), word_map(c.text("g")));
        Json j{{"word", pc.word.str()}, {"coincidence_free", pc.word.coincidence_free()}, {"row_hint", pc.row_hint}};
        j["fixed"] = Json{{"f", fixed_json(pc.f)}, {"g", fixed_json(pc.g)}, {"fg", fixed_json(pc.fg)}, {"gf", fixed_json(pc.gf)}};
        if (pc.row_hint == 1) {
            j["row1_attracting_ok"] = pc.row1_attracting_ok;
            j["row1_repelling_ok"] = pc.row1_repelling_ok;
            if (!pc.row1_attracting_ok || !pc.row1_repelling_ok)
                findings_.push_back({"row-1 containment", "a row-1 pair violates the fixed-point containments"});
        }
        return j;
    }

    Json classify_commutator_cmd(const Command& c) {
        CommutatorClass cc = classify_commutator(word_map(c.text("h")), word_map(c.text("f")));
        Json j{{"label", to_string(cc.label)}, {"conjugacy_ok", cc.conjugacy_ok()}};
        Json comm = Json::array();
        for (int i = 0; i < 4; ++i)
            comm.push_back(Json{{"matrix", cc.commutators[i].str()}, {"fixed", fixed_json(cc.fixed[i])}});
        j["commutators"] = comm;
        j["conjugacy"] = inequalities_json(cc.conjugacy);
        j["geometric"] = inequalities_json(cc.geometric);
        Json ng = Json::array();
        for (const auto& v : cc.nongeometric) ng.push_back(inequalities_json(v));
        j["nongeometric"] = ng;
        if (cc.label == CommutatorLabel::Unmatched)
            findings_.push_back({"unmatched commutator class", "h = " + c.text("h") + ", f = " + c.text("f") +
                                                                   " matches neither the geometric chain nor a "
                                                                   "non-geometric chain"});
        if (!cc.conjugacy_ok())
            findings_.push_back({"conjugacy transport", "a conjugacy-transport identity fails"});
        return j;
    }

    Json census_cmd(const Command& c) {
        long samples = c.integer("samples", 10000);
        std::uint64_t seed = std::stoull(c.text("seed", "0"));
        CensusResult r = census(samples, seed);
        Json j{{"samples", r.samples},
               {"seed", seed},
               {"rejected", r.rejected},
               {"coincidence_free_classes", r.coincidence_free_classes()}};
        Json counts = Json::object(), linked_counts = Json::object();
        for (const auto& [k, v] : r.counts) counts[k] = v;
        for (const auto& [k, v] : r.linked_counts) linked_counts[k] = v;
        j["classes"] = counts;
        j["linked_classes"] = linked_counts;
        j["rows"] = Json{{"unknown", r.rows[0]}, {"row1", r.rows[1]}, {"row2", r.rows[2]}, {"row3", r.rows[3]}};
        j["row1_pairs"] = r.row1_pairs;
        j["row1_violations"] = r.row1_violations;
        if (r.row1_violations > 0)
            findings_.push_back({"row-1 containment", std::to_string(r.row1_violations) + " row-1 pairs fail"});
        return j;
    }

    Json certify_cmd(const Command& c) {
        int radius = static_cast<int>(c.integer("radius", 4));
        Json j;
        if (sc_.kind == ScenarioKind::Moebius) {
            const MoebiusScenario& m = sc_.moebius;
            Assignment as = m.assignment();
            HLCertificate hl = certify_hyperbolic_like(m.pres, as, radius);
            Json h{{"radius", hl.radius}, {"certified", hl.certified}, {"words_checked", hl.words_checked}};
            if (!hl.certified) {
                h["witness"] = to_string(hl.witness, m.pres);
                h["witness_class"] = to_string(hl.witness_class);
                findings_.push_back({"non-hyperbolic-like witness", "word " + to_string(hl.witness, m.pres) + " is " +
                                                                        to_string(hl.witness_class)});
            }
            j["hyperbolic_like"] = h;
            if (m.partition) {
                VerifyReport v = verify_finite(*m.partition, m.pres, as, radius);
                FreeProductCertificate fp = free_product_certificate(v, hl, m.pres, as, *m.partition);
                j["verify"] = verify_json(v);
                j["free_product"] = certificate_json(fp);
                note_status(v);
                if (!fp.issued && v.status != VerifyStatus::Inapplicable && hl.certified) violated_ = true;
            }
            return j;
        }
        const std::optional<Partition>& part = model_partition();
        if (!part) {
            inapplicable_ = true;
            return Json{{"free_product", Json{{"issued", false}, {"reason", "arrangement has no ping-pong partition"}}}};
        }
        VerifyReport v = verify_axis(*part, model());
        if (v.status == VerifyStatus::Inapplicable) v = verify_finite(*part, model(), radius);
        FreeProductCertificate fp = free_product_certificate(v, model(), *part, radius);
        j["verify"] = verify_json(v);
        j["free_product"] = certificate_json(fp);
        note_status(v);
        if (!fp.issued && v.status == VerifyStatus::Verified) violated_ = true;
        return j;
    }

    Json verify_cmd(const Command& c) {
        int radius = static_cast<int>(c.integer("radius", 4));
        int depth = static_cast<int>(c.integer("depth", 4));
        std::string mode = c.text("mode", "both");
        std::vector<VerifyReport> reports;
        if (sc_.kind == ScenarioKind::Moebius) {
            const MoebiusScenario& m = sc_.moebius;
            if (mode != "axis") reports.push_back(verify_finite(*m.partition, m.pres, m.assignment(), radius));
            if (mode != "finite") {
                VerifyReport r;
                r.mode = VerifyMode::Axis;
                r.radius = radius;
                r.status = VerifyStatus::Inapplicable;
                r.reason = "axis mode needs a realization model";
                reports.push_back(r);
            }
            diagram_ = Json{{"U_H", to_json(m.partition->U_H)}, {"U_K", to_json(m.partition->U_K)}};
        } else {
            const std::optional<Partition>& part = model_partition();
            model_diagram(part);
            if (!part) {
                inapplicable_ = true;
                return Json{{"status", "Inapplicable"}, {"reason", "arrangement has no ping-pong partition"}};
            }
            if (mode != "axis") reports.push_back(verify_finite(*part, model(), radius, depth));
            if (mode != "finite") {
                VerifyReport r = verify_axis(*part, model());
                r.radius = radius;
                reports.push_back(r);
            }
        }
        Json arr = Json::array();
        for (const VerifyReport& r : reports) {
            arr.push_back(verify_json(r));
            note_status(r);
        }
        Json j{{"reports", arr}};
        if (reports.size() == 2) {
            bool decided = reports[0].status != VerifyStatus::Inapplicable && reports[1].status != VerifyStatus::Inapplicable;
            bool agree = !decided || reports[0].status == reports[1].status;
            j["modes_agree"] = agree;
            if (!agree)
                findings_.push_back({"mode disagreement", std::string("finite mode says ") + to_string(reports[0].status) +
                                                              ", axis mode says " + to_string(reports[1].status)});
        }
        return j;
    }

    Json unlinked_cmd() {
        const UnlinkedGapData& d = *sc_.gaps;
        UnlinkedConfig cfg = classify_unlinked_config(d);
        Json j{{"label", to_string(cfg.label)}, {"reason", cfg.reason}};
        Json iv = Json::object();
        for (const auto& [k, a] : cfg.intervals) iv[k] = to_json(a);
        j["intervals"] = iv;
        if (cfg.witness) j["hexagon_witness"] = hexagon_json(*cfg.witness);
        Json diag{{"points", points_json(d.p, d.q, d.pbar, d.qbar)}};
        std::vector<Arc> gp = d.right_p, gq = d.right_q;
        gp.insert(gp.end(), d.left_p.begin(), d.left_p.end());
        gq.insert(gq.end(), d.left_q.begin(), d.left_q.end());
        diag["gaps_p"] = arcs_json(gp);
        diag["gaps_q"] = arcs_json(gq);
        if (cfg.label != UnlinkedLabel::Hexagonal) {
            Partition part = partition_for(cfg, d);
            j["partition"] = Json{{"builder", to_string(part.builder)}, {"U_H", to_json(part.U_H)}, {"U_K", to_json(part.U_K)}};
            diag["U_H"] = j["partition"]["U_H"];
            diag["U_K"] = j["partition"]["U_K"];
        }
        diagram_ = diag;
        if (sc_.orbit_map) {
            SameOrbitResult r = same_orbit_constraint(d, sc_.orbit_map);
            j["same_orbit"] = Json{{"g", sc_.orbit_map->str()}, {"holds", r.holds}};
            if (!r.holds) {
                j["same_orbit"]["report"] = r.report;
                findings_.push_back({"same-orbit non-geometric", r.report.substr(r.report.find(':') + 2)});
            }
        }
        return j;
    }

    Json hexagon_cmd() {
        HexagonWitness w = hexagon_witness(model());
        model_diagram(std::nullopt);
        return Json{{"rejected", w.holds}, {"witness", hexagon_json(w)}};
    }

    Json containments_cmd(const Command& c) {
        long samples = c.integer("samples", 100);
        std::uint64_t seed = std::stoull(c.text("seed", "0"));
        std::mt19937_64 rng(seed);
        const ModelConfig& m = model();
        auto draw = [&](int factor) {
            for (;;) {
                std::vector<long> e{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
                if (m.lambda[factor].value(e).sign() > 0) return e;
            }
        };
        long failures = 0;
        Json first = Json();
        for (long i = 0; i < samples; ++i) {
            std::vector<long> h = draw(kH), f = draw(kK);
            for (const Containment& ct : linked_proof_containments(m, h, f)) {
                if (ct.holds) continue;
                ++failures;
                if (first.is_null())
                    first = Json{{"h", {h[0], h[1]}}, {"f", {f[0], f[1]}}, {"containment", ct.name}};
            }
        }
        Json j{{"samples", samples}, {"seed", seed}, {"failures", failures}};
        if (!first.is_null()) {
            j["first_failure"] = first;
            violated_ = true;
        }
        return j;
    }
};

}  // namespace

Report run(const Scenario& sc) { return Runner(sc).run(); }

namespace {

constexpr double kCx = 200, kCy = 200, kR = 150;
constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

// Points are spread evenly by cyclic rank so the picture shows the combinatorics, not the metric.
class Layout {
public:
    explicit Layout(std::vector<CirclePoint> pts, const CirclePoint* origin) {
        std::vector<CirclePoint> uniq;
        for (const CirclePoint& p : pts) {
            bool seen = false;
            for (const CirclePoint& u : uniq) seen = seen || u == p;
            if (!seen) uniq.push_back(p);
        }
        sort_cyclic(uniq);
        if (origin)
            for (std::size_t i = 0; i < uniq.size(); ++i)
                if (uniq[i] == *origin) std::rotate(uniq.begin(), uniq.begin() + i, uniq.end());
        pts_ = uniq;
    }
    double angle(const CirclePoint& x) const {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (pts_[i] == x) return 2 * kPi * double(i) / double(pts_.size());
        return 0;
    }
    // Screen position; angle 0 at the bottom, increasing counterclockwise on screen.
    std::pair<double, double> at(const CirclePoint& x, double radius = kR) const {
        double t = angle(x);
        return {kCx + radius * std::sin(t), kCy + radius * std::cos(t)};
    }

private:
    std::vector<CirclePoint> pts_;
};

std::vector<Arc> arcs_in(const Json& section, const char* key) {
    std::vector<Arc> out;
    if (!section.is_object() || !section.contains(key)) return out;
    for (const Json& a : section.at(key)) out.push_back(arc_from_json(a));
    return out;
}

}  // namespace

std::string emit_chord_diagram(const Json& section) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    out += "<circle cx=\"200\" cy=\"200\" r=\"150\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    std::vector<Arc> gp = arcs_in(section, "gaps_p"), gq = arcs_in(section, "gaps_q");
    std::vector<Arc> uh = arcs_in(section, "U_H"), uk = arcs_in(section, "U_K");
    std::vector<std::pair<std::string, CirclePoint>> marked;
    if (section.is_object() && section.contains("points"))
        for (const char* k : {"p", "qbar", "q", "pbar"})
            if (section["points"].contains(k)) marked.emplace_back(k, point_from_json(section["points"][k]));
    std::vector<CirclePoint> all;
    for (const auto& [n, p] : marked) all.push_back(p);
    for (const auto* v : {&gp, &gq, &uh, &uk})
        for (const Arc& a : *v) {
            all.push_back(a.lo);
            all.push_back(a.hi);
        }
    if (all.empty()) return out + "</svg>\n";
    Layout lay(all, marked.empty() ? nullptr : &marked[0].second);

    auto highlight = [&](const Arc& a, const char* cls, const char* color) {
        auto [x1, y1] = lay.at(a.lo);
        auto [x2, y2] = lay.at(a.hi);
        double span = lay.angle(a.hi) - lay.angle(a.lo);
        if (span <= 0) span += 2 * kPi;
        out += "<path class=\"" + std::string(cls) + "\" d=\"M " + fmt(x1) + " " + fmt(y1) + " A 150 150 0 " +
               (span > kPi ? "1" : "0") + " 0 " + fmt(x2) + " " + fmt(y2) + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"8\" stroke-opacity=\"0.35\"/>\n";
    };
    for (const Arc& a : uh) highlight(a, "U_H", "#1f4fd1");
    for (const Arc& a : uk) highlight(a, "U_K", "#d1261f");
    auto chord = [&](const Arc& a, const char* cls, const char* color) {
        auto [x1, y1] = lay.at(a.lo);
        auto [x2, y2] = lay.at(a.hi);
        out += "<line class=\"" + std::string(cls) + "\" x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
               "\" y2=\"" + fmt(y2) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    };
    for (const Arc& a : gp) chord(a, "gap-p", "#1f4fd1");
    for (const Arc& a : gq) chord(a, "gap-q", "#d1261f");
    for (const auto& [name, p] : marked) {
        auto [x, y] = lay.at(p);
        auto [tx, ty] = lay.at(p, kR + 18);
        out += "<circle class=\"marked\" cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\" fill=\"#000000\"/>\n";
        out += "<text x=\"" + fmt(tx) + "\" y=\"" + fmt(ty) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
               name + "</text>\n";
    }
    return out + "</svg>\n";
}

} // namespace pp
