#pragma once

#include "pingpong/model.hpp"
#include "pingpong/verifier.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& msg);
    int line, column;
    std::string detail;
};

struct ValidationError : std::runtime_error {
    ValidationError(int line, int column, const std::string& msg, std::string hint = "");
    int line, column;
    std::string detail;
    std::string hint;
};

struct Command {
    std::string op;
    int line = 0;
    std::map<std::string, std::string> params;

    long integer(const std::string& key, long fallback) const;
    std::string text(const std::string& key, const std::string& fallback = "") const;
};

enum class ScenarioKind { Moebius, Model };

struct MoebiusScenario {
    std::vector<std::pair<std::string, MoebiusMap>> generators;
    Presentation pres;
    std::optional<Partition> partition;
    Assignment assignment() const;
};

struct ModelScenario {
    Arrangement arrangement = Arrangement::Linked;
    TranslationGroup lambda_p, lambda_q;
    CirclePoint p, q, pbar, qbar;
    std::map<std::string, Arc> seeds;
    bool unverified = false;

    ModelConfig build() const;
    // None for the hexagon arrangement.
    std::optional<Partition> partition() const;
};

struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::Moebius;
    MoebiusScenario moebius;
    ModelScenario model;
    std::optional<UnlinkedGapData> gaps;
    std::optional<MoebiusMap> orbit_map;
    std::vector<Command> commands;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Literal parsers shared with the report reader. Column numbers are 1-based.
Surd parse_surd(const std::string& text);
CirclePoint parse_point(const std::string& text);
MoebiusMap parse_matrix(const std::string& text);

} // namespace pp
