/*
 * arrlab C API: exact-arithmetic toolkit for linear subspace arrangements
 * with finite group actions, plus a numerical fan mass-partition solver.
 *
 * All functions return an arrlab_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with arrlab_string_free. Handles are opaque and freed with their
 * matching *_free function. On failure, arrlab_last_error() returns a
 * thread-local diagnostic message.
 */

#ifndef ARRLAB_ARRLAB_H
#define ARRLAB_ARRLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrlab_status {
  ARRLAB_OK = 0,
  ARRLAB_ERR_PARSE = 1,      /* malformed input text */
  ARRLAB_ERR_DOMAIN = 2,     /* violated precondition or domain error */
  ARRLAB_ERR_ARGUMENT = 3,   /* null pointer or bad argument */
  ARRLAB_ERR_INTERNAL = 4
} arrlab_status;

typedef struct arrlab_arrangement arrlab_arrangement;
typedef struct arrlab_measure arrlab_measure;

const char* arrlab_version(void);
const char* arrlab_last_error(void);
void arrlab_string_free(char* text);

/* ---- arrangements ------------------------------------------------------ */

/* Parses the arrangement JSON schema (ambient_dim, ambient_forms, members,
 * group). The handle owns the arrangement and the optional group. */
arrlab_status arrlab_arrangement_parse(const char* json_text, arrlab_arrangement** out);
void arrlab_arrangement_free(arrlab_arrangement* handle);
arrlab_status arrlab_arrangement_to_json(const arrlab_arrangement* handle, char** json_out);
arrlab_status arrlab_arrangement_has_group(const arrlab_arrangement* handle, int* has_group);

/* Builders for the bundled instances. Parameters are a JSON object such as
 * {"n": 5, "j": 2, "ration": [1,1]}; unused keys are ignored. Names:
 * example_12, example_3_1, example_3_2, test_arrangement_B,
 * test_arrangement_A. */
arrlab_status arrlab_instance_build(const char* name, const char* params_json,
                                    arrlab_arrangement** out);

/* Betti numbers of the complement over "q" or "f:<p>". */
arrlab_status arrlab_betti(const arrlab_arrangement* handle, const char* field,
                           char** betti_json_out);

/* DOT rendering of the intersection poset. */
arrlab_status arrlab_poset_dot(const arrlab_arrangement* handle, char** dot_out);

/* Blow-up with choice "auto" or "equivariant" (the latter requires the
 * arrangement to carry a group). Outputs the blown-up arrangement and a JSON
 * description of the chosen forms; either out pointer may be NULL. */
arrlab_status arrlab_blow_up(const arrlab_arrangement* handle, const char* choice,
                             arrlab_arrangement** arrangement_out, char** meta_json_out);

/* Hypothesis check; overall_out receives 0 = applies, 1 = not applicable,
 * 2 = inconclusive. */
arrlab_status arrlab_check_theorem(const arrlab_arrangement* handle, const char* field,
                                   int connectivity_n, int apply_reduction,
                                   char** report_json_out, int* overall_out);

/* ---- measures and fans -------------------------------------------------- */

/* CSV rows: weight,x1,...,xd with an optional header row. */
arrlab_status arrlab_measure_parse_csv(const char* csv_text, arrlab_measure** out);
void arrlab_measure_free(arrlab_measure* handle);

/* Solves for an alpha-partition. kind is "fan" or "arrangement"; ration is a
 * comma list a_1,...,a_2k; config_json may override {"seed", "restarts",
 * "tol", "max_evals", "sigma_schedule", "designated"} and may be NULL.
 * pass_out receives 1 when the verified report meets the tolerance. */
arrlab_status arrlab_fan_solve(const char* kind, const char* ration,
                               const arrlab_measure* const* measures, size_t measure_count,
                               const char* config_json, char** fan_json_out,
                               char** report_json_out, int* pass_out);

/* Re-checks a fan against measures at the given tolerance. */
arrlab_status arrlab_fan_verify(const char* fan_json, const char* ration,
                                const arrlab_measure* const* measures, size_t measure_count,
                                double tol, char** report_json_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* ARRLAB_ARRLAB_H */
