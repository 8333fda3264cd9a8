#include "pingpong/pingpong.h"

#include "pingpong/report.hpp"

#include <string>
#include <vector>

struct pp_scenario {
    pp::Scenario sc;
};

struct pp_report {
    pp::Report rep;
    std::string json;
    std::vector<std::string> svgs;
};

namespace {

struct LastError {
    std::string msg, hint;
    int line = 0, column = 0;
};

thread_local LastError last;

pp_status fail(pp_status s, const std::string& msg, int line = 0, int column = 0, const std::string& hint = "") {
    last = {msg, hint, line, column};
    return s;
}

template <class F>
pp_status guarded(F f) {
    try {
        return f();
    } catch (const pp::ParseError& e) {
        return fail(PP_ERR_PARSE, e.detail, e.line, e.column);
    } catch (const pp::ValidationError& e) {
        return fail(PP_ERR_VALIDATION, e.detail, e.line, e.column, e.hint);
    } catch (const pp::CommandError& e) {
        return fail(PP_ERR_MODULE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PP_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* pp_last_error(void) { return last.msg.c_str(); }
int pp_last_error_line(void) { return last.line; }
int pp_last_error_column(void) { return last.column; }
const char* pp_last_error_hint(void) { return last.hint.c_str(); }

pp_status pp_scenario_parse(const char* text, pp_scenario** out) {
    if (!text || !out) return fail(PP_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new pp_scenario{pp::parse_scenario(text)};
        return PP_OK;
    });
}

pp_status pp_scenario_load(const char* path, pp_scenario** out) {
    if (!path || !out) return fail(PP_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        pp::Scenario sc;
        try {
            sc = pp::load_scenario(path);
        } catch (const pp::ParseError&) {
            throw;
        } catch (const pp::ValidationError&) {
            throw;
        } catch (const std::runtime_error& e) {
            return fail(PP_ERR_IO, e.what());
        }
        *out = new pp_scenario{std::move(sc)};
        return PP_OK;
    });
}

const char* pp_scenario_name(const pp_scenario* sc) { return sc ? sc->sc.name.c_str() : nullptr; }

size_t pp_scenario_command_count(const pp_scenario* sc) { return sc ? sc->sc.commands.size() : 0; }

void pp_scenario_free(pp_scenario* sc) { delete sc; }

pp_status pp_run(const pp_scenario* sc, pp_report** out) {
    if (!sc || !out) return fail(PP_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* r = new pp_report{pp::run(sc->sc), {}, {}};
        r->json = r->rep.dump();
        for (const pp::Diagram& d : r->rep.diagrams) r->svgs.push_back(pp::emit_chord_diagram(d.section));
        *out = r;
        return PP_OK;
    });
}

const char* pp_report_json(const pp_report* rep) { return rep ? rep->json.c_str() : nullptr; }

int pp_report_exit_code(const pp_report* rep) { return rep ? rep->rep.exit_code : pp::kExitUsage; }

size_t pp_report_diagram_count(const pp_report* rep) { return rep ? rep->svgs.size() : 0; }

const char* pp_report_diagram_name(const pp_report* rep, size_t i) {
    return rep && i < rep->svgs.size() ? rep->rep.diagrams[i].name.c_str() : nullptr;
}

const char* pp_report_diagram_svg(const pp_report* rep, size_t i) {
    return rep && i < rep->svgs.size() ? rep->svgs[i].c_str() : nullptr;
}

void pp_report_free(pp_report* rep) { delete rep; }

pp_status pp_surd_sign(const char* literal, int* sign) {
    if (!literal || !sign) return fail(PP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *sign = pp::surd_sign(pp::parse_surd(literal));
        return PP_OK;
    });
}

}  // extern "C"
