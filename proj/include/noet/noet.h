/* C interface to the noet library: Noetherian relations, their limits, and
 * loops verified as limits of a seed of a Noetherian order.
 *
 * Every function returns a noet_status. On failure the thread's last error
 * message (and witness, when the failure has one) can be read back with
 * noet_last_error() and noet_last_error_witness() until the next call.
 * Objects are opaque and owned by the caller once returned; free them with
 * the matching *_free function. Values are passed as JSON text, e.g. "3",
 * "{\"pair\":[{\"int\":12},{\"int\":8}]}".
 */
#ifndef NOET_NOET_H
#define NOET_NOET_H

#include <stddef.h>
#include <stdint.h>

#if defined(NOET_BUILDING_LIBRARY)
#define NOET_API __attribute__((visibility("default")))
#else
#define NOET_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum noet_status {
  NOET_OK = 0,
  NOET_E_VALUE_OUTSIDE_SPACE,
  NOET_E_REQUIRES_EXTENSIONAL,
  NOET_E_SPACE_MISMATCH,
  NOET_E_SPACE_TOO_LARGE,
  NOET_E_NOT_ENUMERABLE,
  NOET_E_NOT_NOETHERIAN,
  NOET_E_MALFORMED_EXPR,
  NOET_E_UNKNOWN_NAMED_FUNCTION,
  NOET_E_EMPTY_SPACE,
  NOET_E_INIT_ESCAPES_SPACE,
  NOET_E_BODY_NOT_SUBSET_OF_ORDER,
  NOET_E_DOMAIN_MISMATCH,
  NOET_E_ORDER_NOT_NOETHERIAN,
  NOET_E_FUEL_EXHAUSTED,
  NOET_E_INPUT_OUTSIDE_SPACE,
  NOET_E_NON_TOTAL_FUNCTION,
  NOET_E_NEGATIVE_VARIANT_VALUE,
  NOET_E_PARAMETER_OUT_OF_RANGE,
  NOET_E_UNKNOWN_ORACLE,
  NOET_E_MALFORMED_INPUT,
  NOET_E_INVALID_ARGUMENT,
  NOET_E_INTERNAL
} noet_status;

typedef struct noet_relation noet_relation;
typedef struct noet_loop noet_loop;
typedef struct noet_report noet_report;

typedef struct noet_options {
  size_t fuel;      /* chain and run step bound; 10000 by default */
  size_t max_space; /* largest enumerated space; 100000 by default */
} noet_options;

NOET_API const char* noet_version(void);
NOET_API const char* noet_status_name(noet_status status);
/* 1 when the status reports a failed property (a cycle, a non-seed body, ...)
 * rather than malformed input or an exceeded limit. */
NOET_API int noet_status_is_property_failure(noet_status status);
NOET_API const char* noet_last_error(void);
NOET_API const char* noet_last_error_witness(void);

NOET_API void noet_options_init(noet_options* options);

/* Relation documents: {"space": ..., "relation": ...}. */
NOET_API noet_status noet_relation_parse(const char* json, const noet_options* options, noet_relation** out);
NOET_API noet_status noet_relation_load(const char* path, const noet_options* options, noet_relation** out);
NOET_API void noet_relation_free(noet_relation* relation);
/* Canonical re-serialization of the parsed document; free with noet_string_free. */
NOET_API noet_status noet_relation_serialize(const noet_relation* relation, char** out);

NOET_API noet_status noet_check(const noet_relation* r, const noet_options* options, noet_report** out);
/* mode: "minima" (default when NULL) or "maxdepth". */
NOET_API noet_status noet_limit(const noet_relation* r, const char* from, const char* mode, noet_report** out);
NOET_API noet_status noet_height(const noet_relation* r, const char* from, noet_report** out);
NOET_API noet_status noet_seed(const noet_relation* r, const noet_relation* s, noet_report** out);

/* Loop documents: {"space", "inputs"?, "order", "init"?, "body", "postcondition"?}. */
NOET_API noet_status noet_loop_parse(const char* json, const noet_options* options, noet_loop** out);
NOET_API noet_status noet_loop_load(const char* path, const noet_options* options, noet_loop** out);
/* params: JSON object with any of a, b, a_max, b_max, bound, x, pivot
 * (integers), t (array of integers) and policy (string). */
NOET_API noet_status noet_example_instantiate(const char* name, const char* params, const noet_options* options,
                                              noet_loop** out);
NOET_API void noet_loop_free(noet_loop* loop);
/* Canonical document of a loop read from a file; examples have none. */
NOET_API noet_status noet_loop_serialize(const noet_loop* loop, char** out);
/* Structural checks; NOET_OK or the first failed obligation's status. */
NOET_API noet_status noet_loop_validate(const noet_loop* loop);
/* Inputs of the loop, as a JSON array of values; free with noet_string_free. */
NOET_API noet_status noet_loop_inputs(const noet_loop* loop, char** out);

NOET_API noet_status noet_run(const noet_loop* loop, const char* input, int all, int trace,
                              const noet_options* options, noet_report** out);
/* inputs: NULL for every input, or a JSON array of values. */
NOET_API noet_status noet_verify(const noet_loop* loop, const char* inputs, const noet_options* options,
                                 noet_report** out);

NOET_API noet_status noet_examples_list(noet_report** out);
NOET_API noet_status noet_audit(uint64_t seed, size_t samples, noet_report** out);

NOET_API const char* noet_report_text(const noet_report* report);
/* Canonical JSON document with sorted keys. */
NOET_API const char* noet_report_json(const noet_report* report);
NOET_API int noet_report_passed(const noet_report* report);
NOET_API size_t noet_report_artifact_count(const noet_report* report);
NOET_API const char* noet_report_artifact_name(const noet_report* report, size_t index);
NOET_API const char* noet_report_artifact_content(const noet_report* report, size_t index);
NOET_API void noet_report_free(noet_report* report);

NOET_API void noet_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
