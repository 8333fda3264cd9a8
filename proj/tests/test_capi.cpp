#include "doctest.h"
#include "pingpong/pingpong.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string env(const char* name) {
    const char* v = std::getenv(name);
    return v ? v : "";
}

int lab(const std::string& args, const std::string& redirect = "> /dev/null 2>&1") {
    std::string cmd = "'" + env("PINGPONG_LAB") + "' " + args + " " + redirect;
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_dir(const char* tag) {
    fs::path d = fs::temp_directory_path() / (std::string("pingpong-capi-") + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("scenario handles and error codes") {
    pp_scenario* sc = nullptr;
    CHECK(pp_scenario_parse("[scenario]\nname = x\n[generators]\nh = [[4,0],[0 1]]\n", &sc) == PP_ERR_PARSE);
    CHECK(sc == nullptr);
    CHECK(pp_last_error_line() == 4);
    CHECK(pp_last_error_column() == 15);

    CHECK(pp_scenario_parse("[scenario]\nname = x\n[generators]\nh = [[1,1],[1,1]]\n", &sc) == PP_ERR_VALIDATION);
    CHECK(std::string(pp_last_error()).find("determinant 0") != std::string::npos);

    CHECK(pp_scenario_parse("[scenario]\nname = x\nkind = model\n[model]\narrangement = linked\nlambda_q = 1, sqrt(8)\n",
                            &sc) == PP_ERR_VALIDATION);
    CHECK(std::string(pp_last_error_hint()) == "write 2*sqrt(2)");

    CHECK(pp_scenario_parse(nullptr, &sc) == PP_ERR_ARGUMENT);
    CHECK(pp_scenario_load("/nonexistent/file.scn", &sc) == PP_ERR_IO);

    REQUIRE(pp_scenario_parse("[scenario]\nname = c\n[command]\nop = census\nsamples = 50\nseed = 3\n", &sc) == PP_OK);
    CHECK(std::string(pp_scenario_name(sc)) == "c");
    CHECK(pp_scenario_command_count(sc) == 1);
    pp_report* rep = nullptr;
    REQUIRE(pp_run(sc, &rep) == PP_OK);
    CHECK(pp_report_exit_code(rep) == 0);
    CHECK(std::string(pp_report_json(rep)).find("\"samples\": 50") != std::string::npos);
    CHECK(pp_report_diagram_count(rep) == 0);
    CHECK(pp_report_diagram_svg(rep, 0) == nullptr);
    pp_report_free(rep);
    pp_scenario_free(sc);
    pp_scenario_free(nullptr);
    pp_report_free(nullptr);
}

TEST_CASE("module errors map to PP_ERR_MODULE") {
    pp_scenario* sc = nullptr;
    REQUIRE(pp_scenario_parse("[scenario]\nname = c\n[generators]\nh = [[4,0],[0,1]]\nf = [[5,-3],[-3,5]]\n"
                              "[command]\nop = classify-commutator\nh = h\nf = f\n",
                              &sc) == PP_OK);
    pp_report* rep = nullptr;
    CHECK(pp_run(sc, &rep) == PP_ERR_MODULE);
    CHECK(rep == nullptr);
    CHECK(std::string(pp_last_error()).rfind("command 1 (classify-commutator)", 0) == 0);
    pp_scenario_free(sc);
}

TEST_CASE("surd sign through the C API") {
    int s = 0;
    REQUIRE(pp_surd_sign("3/2 - sqrt(2)", &s) == PP_OK);
    CHECK(s == 1);
    REQUIRE(pp_surd_sign("7/5 - sqrt(2)", &s) == PP_OK);
    CHECK(s == -1);
    REQUIRE(pp_surd_sign("0", &s) == PP_OK);
    CHECK(s == 0);
    CHECK(pp_surd_sign("sqrt(12)", &s) == PP_ERR_VALIDATION);
    CHECK(pp_surd_sign("1 +", &s) == PP_ERR_PARSE);
}

TEST_CASE("corpus through the C API is deterministic") {
    for (const char* name : {"linked-symmetric", "parallel", "mislabeled", "hexagon", "same-orbit"}) {
        fs::path path = fs::path(env("SCENARIO_DIR")) / (std::string(name) + ".scn");
        std::string a[2];
        std::string svg[2];
        for (int k = 0; k < 2; ++k) {
            pp_scenario* sc = nullptr;
            REQUIRE(pp_scenario_load(path.c_str(), &sc) == PP_OK);
            pp_report* rep = nullptr;
            REQUIRE(pp_run(sc, &rep) == PP_OK);
            a[k] = pp_report_json(rep);
            for (size_t i = 0; i < pp_report_diagram_count(rep); ++i) svg[k] += pp_report_diagram_svg(rep, i);
            pp_report_free(rep);
            pp_scenario_free(sc);
        }
        CHECK(a[0] == a[1]);
        CHECK(svg[0] == svg[1]);
        CHECK_FALSE(svg[0].empty());
    }
}

TEST_CASE("cli exit codes") {
    REQUIRE_FALSE(env("PINGPONG_LAB").empty());
    std::string dir = env("SCENARIO_DIR");
    CHECK(lab("run '" + dir + "/unlinked-geometric.scn'") == 0);
    CHECK(lab("run '" + dir + "/mislabeled.scn'") == 2);
    CHECK(lab("run '" + dir + "/parabolic.scn'") == 2);
    CHECK(lab("verify --model hexagon --radius 1") == 3);
    CHECK(lab("verify --model parallel --mode axis") == 0);
    CHECK(lab("classify-pair --f 4,0,0,1 --g 5,-3,-3,5") == 0);
    CHECK(lab("classify-commutator --h 16,0,0,1 --f 34,-30,-30,34") == 0);
    CHECK(lab("classify-commutator --h 4,0,0,1 --f 5,-3,-3,5") == 3);
    CHECK(lab("census --samples 100 --seed 1") == 0);
    CHECK(lab("certify --model linked --radius 2") == 0);
    CHECK(lab("certify --gen h=4,0,0,1 --gen u=1,1,0,1 --radius 2") == 2);
    CHECK(lab("classify-pair --f 1,2,2,4 --g 5,-3,-3,5") == 1);
    CHECK(lab("run /nonexistent.scn") == 1);
    CHECK(lab("frobnicate") == 1);
    CHECK(lab("run") == 1);

    fs::path bad = temp_dir("bad") / "bad.scn";
    std::ofstream(bad) << "[scenario]\nname = x\n[generators]\nh = [[4,0],[0,1]]\nk = [[1,0],[0,1] \n";
    fs::path err = bad.parent_path() / "err.txt";
    CHECK(lab("run '" + bad.string() + "'", "> /dev/null 2> '" + err.string() + "'") == 1);
    CHECK(slurp(err).rfind("error: 5:", 0) == 0);
}

TEST_CASE("cli writes reports and diagrams") {
    std::string dir = env("SCENARIO_DIR");
    fs::path out1 = temp_dir("out1"), out2 = temp_dir("out2");
    for (const fs::path& out : {out1, out2})
        CHECK(lab("run '" + dir + "/parallel.scn' --out '" + out.string() + "' --svg") == 0);
    fs::path json = out1 / "parallel.json", svg = out1 / "parallel-1-verify.svg";
    REQUIRE(fs::exists(json));
    REQUIRE(fs::exists(svg));
    CHECK(slurp(json) == slurp(out2 / "parallel.json"));
    CHECK(slurp(svg) == slurp(out2 / "parallel-1-verify.svg"));
    CHECK(slurp(svg).rfind("<svg ", 0) == 0);
    fs::remove_all(out1);
    fs::remove_all(out2);
}
