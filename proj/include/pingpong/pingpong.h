#ifndef PINGPONG_H
#define PINGPONG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pp_scenario pp_scenario;
typedef struct pp_report pp_report;

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_PARSE = 1,
    PP_ERR_VALIDATION = 2,
    PP_ERR_MODULE = 3, /* a command raised a domain error; see pp_last_error */
    PP_ERR_ARGUMENT = 4,
    PP_ERR_IO = 5,
    PP_ERR_INTERNAL = 6
} pp_status;

/* Details of the last failing call on the calling thread. Line and column are 0 when unknown. */
const char* pp_last_error(void);
int pp_last_error_line(void);
int pp_last_error_column(void);
const char* pp_last_error_hint(void);

pp_status pp_scenario_parse(const char* text, pp_scenario** out);
pp_status pp_scenario_load(const char* path, pp_scenario** out);
const char* pp_scenario_name(const pp_scenario* sc);
size_t pp_scenario_command_count(const pp_scenario* sc);
void pp_scenario_free(pp_scenario* sc);

pp_status pp_run(const pp_scenario* sc, pp_report** out);
const char* pp_report_json(const pp_report* rep);
/* 0 ok, 2 property violation, 3 inapplicable data. */
int pp_report_exit_code(const pp_report* rep);
size_t pp_report_diagram_count(const pp_report* rep);
const char* pp_report_diagram_name(const pp_report* rep, size_t i);
const char* pp_report_diagram_svg(const pp_report* rep, size_t i);
void pp_report_free(pp_report* rep);

/* Exact sign of a surd literal such as "1 - 3/4*sqrt(2)". Writes -1, 0 or 1. */
pp_status pp_surd_sign(const char* literal, int* sign);

#ifdef __cplusplus
}
#endif

#endif
