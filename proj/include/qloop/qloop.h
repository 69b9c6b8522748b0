#ifndef QLOOP_QLOOP_H
#define QLOOP_QLOOP_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QLOOP_API __attribute__((visibility("default")))
#else
#define QLOOP_API
#endif

/* Status codes. QLOOP_CHECK_FAILED is never returned by qloop_run itself:
 * failed checks are recorded in the report (see qloop_report_passed). */
typedef enum {
  QLOOP_OK = 0,
  QLOOP_CHECK_FAILED = 1,
  QLOOP_USAGE_ERROR = 2,
  QLOOP_DOMAIN_ERROR = 3,
  QLOOP_ESCAPE_ERROR = 4,
  QLOOP_INTERNAL_ERROR = 5
} qloop_status;

typedef struct qloop_config qloop_config;
typedef struct qloop_report qloop_report;

QLOOP_API const char* qloop_version(void);

/* Message of the last failing call on this thread ("" if none). */
QLOOP_API const char* qloop_last_error(void);

QLOOP_API qloop_config* qloop_config_new(void);
QLOOP_API void qloop_config_free(qloop_config* config);
/* Keys: algebra, rep, lambda, module, M, N, degree, s, format, zeta2_shift. */
QLOOP_API qloop_status qloop_config_set(qloop_config* config, const char* key, const char* value);
/* "key = value" lines, '#' comments. A file without settings is a usage error. */
QLOOP_API qloop_status qloop_config_load_file(qloop_config* config, const char* path);
QLOOP_API qloop_status qloop_config_load_text(qloop_config* config, const char* text);

/* command: "verify", "lweights", "factorize" or "ledger". On success *out
 * receives a report owned by the caller. */
QLOOP_API qloop_status qloop_run(const qloop_config* config, const char* command, qloop_report** out);
QLOOP_API void qloop_report_free(qloop_report* report);
/* 1 if no check failed, 0 otherwise (also for NULL). */
QLOOP_API int qloop_report_passed(const qloop_report* report);
QLOOP_API int qloop_report_check_count(const qloop_report* report);
/* format: "json", "csv", "text", or NULL for the configured format. *out is
 * a NUL-terminated string to release with qloop_string_free. */
QLOOP_API qloop_status qloop_report_render(const qloop_report* report, const char* format, char** out);
QLOOP_API void qloop_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
