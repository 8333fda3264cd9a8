#include "pingpong/pingpong.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

const std::map<std::string, std::string> kModels = {
    {"linked", R"([model]
arrangement = linked
lambda_p = 1, sqrt(2)
lambda_q = 1, sqrt(2)
p = 0
q = 1/4
pbar = 1/2
qbar = 3/4
I_p = (7/8, 1/8)
I_pbar = (3/8, 5/8)
I_q = (1/8, 3/8)
I_qbar = (5/8, 7/8)
)"},
    {"unlinked-geometric", R"([model]
arrangement = unlinked-geometric
p = 13/16
qbar = 1/8
q = 3/8
pbar = 11/16
R_p = (7/8, 5/8)
R_q = (1/2, 1/16)
)"},
    {"parallel", R"([model]
arrangement = parallel
unverified = true
p = 0
qbar = 1/4
q = 1/2
pbar = 3/4
I_1 = (1/8, 3/8)
I_2 = (5/16, 7/16)
I_3 = (13/32, 5/8)
I_4 = (9/16, 3/16)
)"},
    {"hexagon", R"([model]
arrangement = hexagon
unverified = true
p = 0
qbar = 1/6
q = 1/2
pbar = 2/3
I_1 = (1/12, 1/4)
I_2 = (1/4, 5/12)
I_3 = (5/12, 7/12)
I_4 = (7/12, 3/4)
I_5 = (3/4, 11/12)
I_6 = (11/12, 1/12)
)"},
};

// Accepts "a,b,c,d" as shorthand for [[a,b],[c,d]].
std::string matrix_literal(const std::string& s) {
    if (s.find('[') != std::string::npos) return s;
    std::string out = "[[";
    int commas = 0;
    for (char c : s) {
        if (c == ',' && ++commas == 2) {
            out += "],[";
            continue;
        }
        out += c;
    }
    return out + "]]";
}

int report_error(pp_status s) {
    std::cerr << "error: ";
    if (pp_last_error_line() > 0) std::cerr << pp_last_error_line() << ":" << pp_last_error_column() << ": ";
    std::cerr << pp_last_error();
    if (*pp_last_error_hint()) std::cerr << " (hint: " << pp_last_error_hint() << ")";
    std::cerr << "\n";
    return s == PP_ERR_MODULE ? 3 : 1;
}

bool write_file(const std::filesystem::path& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

// Runs a parsed scenario, printing or writing its outputs; returns the process exit code.
int execute(pp_scenario* sc, const std::string& out_dir, bool svg) {
    pp_report* rep = nullptr;
    pp_status s = pp_run(sc, &rep);
    if (s != PP_OK) return report_error(s);
    int code = pp_report_exit_code(rep);
    if (out_dir.empty()) {
        std::fputs(pp_report_json(rep), stdout);
    } else {
        std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        bool ok = write_file(dir / (std::string(pp_scenario_name(sc)) + ".json"), pp_report_json(rep));
        if (svg)
            for (size_t i = 0; i < pp_report_diagram_count(rep); ++i)
                ok = ok && write_file(dir / (std::string(pp_report_diagram_name(rep, i)) + ".svg"),
                                      pp_report_diagram_svg(rep, i));
        if (!ok) {
            std::cerr << "error: cannot write to " << out_dir << "\n";
            code = 1;
        }
    }
    pp_report_free(rep);
    return code;
}

int run_text(const std::string& text, const std::string& out_dir = "", bool svg = false) {
    pp_scenario* sc = nullptr;
    pp_status s = pp_scenario_parse(text.c_str(), &sc);
    if (s != PP_OK) return report_error(s);
    int code = execute(sc, out_dir, svg);
    pp_scenario_free(sc);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ping-pong partitions and free products for stabilizers of circle points.\n"
                 "Worker threads: PINGPONG_THREADS (default: hardware concurrency)."};
    app.require_subcommand(1);

    std::string scenario_path, out_dir;
    bool svg = false;
    auto* run = app.add_subcommand("run", "Execute a scenario file");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    run->add_option("--out", out_dir, "Write <name>.json (and diagrams) into this directory");
    run->add_flag("--svg", svg, "Also write one SVG chord diagram per diagram section")->needs("--out");

    std::string f, g, h;
    auto* pair = app.add_subcommand("classify-pair", "Eight-point word of (f, g, fg, gf)");
    pair->add_option("--f", f, "Matrix a,b,c,d or [[a,b],[c,d]]")->required();
    pair->add_option("--g", g, "Matrix")->required();

    auto* comm = app.add_subcommand("classify-commutator", "Commutator class of a linked pair");
    comm->set_help_flag("--help", "Print this help message and exit");
    comm->add_option("--h", h, "Matrix")->required();
    comm->add_option("--f", f, "Matrix")->required();

    long samples = 10000;
    unsigned long long seed = 0;
    auto* cen = app.add_subcommand("census", "Seeded census of composition configurations");
    cen->add_option("--samples", samples)->check(CLI::PositiveNumber);
    cen->add_option("--seed", seed);

    std::string model = "linked", mode = "both";
    std::vector<std::string> gens;
    int radius = 4, depth = 4;
    auto* cert = app.add_subcommand("certify", "Free-product certificate for a built-in model or Moebius generators");
    cert->add_option("--model", model, "Built-in model")->check(CLI::IsMember({"linked", "unlinked-geometric", "parallel"}));
    cert->add_option("--gen", gens, "name=matrix; one cyclic factor per generator (hyperbolic-like check only)");
    cert->add_option("--radius", radius)->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "Verify the ping-pong partition of a built-in model");
    ver->add_option("--model", model, "Built-in model")->check(CLI::IsMember({"linked", "unlinked-geometric", "parallel", "hexagon"}));
    ver->add_option("--mode", mode)->check(CLI::IsMember({"finite", "axis", "both"}));
    ver->add_option("--radius", radius)->check(CLI::PositiveNumber);
    ver->add_option("--depth", depth, "Word length of finite-mode sample points")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (*run) {
        pp_scenario* sc = nullptr;
        pp_status s = pp_scenario_load(scenario_path.c_str(), &sc);
        if (s != PP_OK) return report_error(s);
        int code = execute(sc, out_dir, svg);
        pp_scenario_free(sc);
        return code;
    }
    if (*pair)
        return run_text("[scenario]\nname = classify-pair\n[generators]\nf = " + matrix_literal(f) +
                        "\ng = " + matrix_literal(g) + "\n[command]\nop = classify-pair\nf = f\ng = g\n");
    if (*comm)
        return run_text("[scenario]\nname = classify-commutator\n[generators]\nh = " + matrix_literal(h) +
                        "\nf = " + matrix_literal(f) + "\n[command]\nop = classify-commutator\nh = h\nf = f\n");
    if (*cen)
        return run_text("[scenario]\nname = census\n[command]\nop = census\nsamples = " + std::to_string(samples) +
                        "\nseed = " + std::to_string(seed) + "\n");
    if (*cert) {
        std::string r = std::to_string(radius);
        if (!gens.empty()) {
            std::string text = "[scenario]\nname = certify\n[generators]\n";
            for (const std::string& gdef : gens) {
                auto eq = gdef.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "error: --gen expects name=matrix\n";
                    return 1;
                }
                text += gdef.substr(0, eq) + " = " + matrix_literal(gdef.substr(eq + 1)) + "\n";
            }
            return run_text(text + "[command]\nop = certify\nradius = " + r + "\n");
        }
        return run_text("[scenario]\nname = certify-" + model + "\nkind = model\n" + kModels.at(model) +
                        "[command]\nop = certify\nradius = " + r + "\n");
    }
    if (*ver)
        return run_text("[scenario]\nname = verify-" + model + "\nkind = model\n" + kModels.at(model) +
                        "[command]\nop = verify\nmode = " + mode + "\nradius = " + std::to_string(radius) +
                        "\ndepth = " + std::to_string(depth) + "\n");
    return 1;
}
