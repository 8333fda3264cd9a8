#pragma once

#include "pingpong/scenario.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pp {

using Json = nlohmann::ordered_json;

// Surds travel as decimal strings {a_num, a_den, b_num, b_den, d}; "approx" is informational only.
Json to_json(const Surd& x);
Surd surd_from_json(const Json& j);
Json to_json(const CirclePoint& x);
CirclePoint point_from_json(const Json& j);
Json to_json(const Arc& a);
Arc arc_from_json(const Json& j);
Json to_json(const ArcSet& s);

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitViolation = 2, kExitInapplicable = 3 };

struct Diagram {
    std::string name;
    Json section;
};

struct Report {
    Json json;
    std::vector<Diagram> diagrams;
    int exit_code = kExitOk;
    std::string dump() const;  // two-space indented JSON with trailing newline
};

// A module error raised while executing one command.
struct CommandError : std::runtime_error {
    CommandError(std::size_t index, const std::string& op, const std::exception& cause);
    std::size_t index;
    std::string op;
};

Report run(const Scenario& sc);

// Section keys: points {p, q, pbar, qbar}, gaps_p, gaps_q, U_H, U_K; all optional.
std::string emit_chord_diagram(const Json& section);

} // namespace pp
