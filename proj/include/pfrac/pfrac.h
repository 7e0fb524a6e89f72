/* C interface to the pfrac partial-fraction library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a pfrac_status; on
 * failure pfrac_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** out
 * parameters are heap-allocated and must be released with pfrac_string_free.
 */
#ifndef PFRAC_PFRAC_H
#define PFRAC_PFRAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PFRAC_BUILDING_LIBRARY)
#    define PFRAC_API __declspec(dllexport)
#  else
#    define PFRAC_API __declspec(dllimport)
#  endif
#else
#  define PFRAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pfrac_status {
  PFRAC_OK = 0,
  PFRAC_ERR_INVALID_ARGUMENT = 1,
  PFRAC_ERR_PARSE = 2,
  PFRAC_ERR_BAD_DIMENSION = 3,
  PFRAC_ERR_ZERO_VECTOR_FORM = 4,
  PFRAC_ERR_NOT_SPANNING = 5,
  PFRAC_ERR_SINGULAR_SYSTEM = 6,
  PFRAC_ERR_DIMENSION_MISMATCH = 7,
  PFRAC_ERR_SUBSET_EXPLOSION = 8,
  PFRAC_ERR_NU_ZERO = 9,
  PFRAC_ERR_INTERNAL = 10,
  PFRAC_ERR_SAMPLING_EXHAUSTED = 11,
  PFRAC_ERR_OUT_OF_MEMORY = 12
} pfrac_status;

typedef enum pfrac_strategy {
  PFRAC_STRATEGY_LAST_REMOVABLE = 0,
  PFRAC_STRATEGY_FIRST_REMOVABLE = 1
} pfrac_strategy;

typedef enum pfrac_format {
  PFRAC_FORMAT_JSON = 0,
  PFRAC_FORMAT_TEXT = 1
} pfrac_format;

typedef struct pfrac_input pfrac_input;
typedef struct pfrac_decomposition pfrac_decomposition;
typedef struct pfrac_report pfrac_report;

PFRAC_API const char* pfrac_version(void);
PFRAC_API const char* pfrac_status_name(pfrac_status status);
PFRAC_API const char* pfrac_last_error(void);
PFRAC_API void pfrac_string_free(char* s);

/* Strategy names are "last-removable" and "first-removable". */
PFRAC_API pfrac_status pfrac_strategy_from_name(const char* name, pfrac_strategy* out);

/* ---- arrangement input ------------------------------------------------ */

/* Parses and validates an arrangement JSON document. */
PFRAC_API pfrac_status pfrac_input_parse(const char* json, pfrac_input** out);
PFRAC_API void pfrac_input_free(pfrac_input* input);
PFRAC_API size_t pfrac_input_dimension(const pfrac_input* input);
PFRAC_API size_t pfrac_input_form_count(const pfrac_input* input);

/* Points of the arrangement with their vanishing sets. max_xp caps the
 * spanning-subset enumeration used by the text listing. */
PFRAC_API pfrac_status pfrac_points_render(const pfrac_input* input, pfrac_format format,
                                           size_t max_xp, char** out);
PFRAC_API pfrac_status pfrac_points_count(const pfrac_input* input, size_t* out);

PFRAC_API pfrac_status pfrac_generic_render(const pfrac_input* input, pfrac_format format,
                                            int* is_generic, char** out);

/* ---- decomposition ---------------------------------------------------- */

PFRAC_API pfrac_status pfrac_decompose(const pfrac_input* input, pfrac_strategy strategy,
                                       pfrac_decomposition** out);
/* Loads a decomposition document written by pfrac_decomposition_render. */
PFRAC_API pfrac_status pfrac_decomposition_parse(const pfrac_input* input, const char* json,
                                                 pfrac_decomposition** out);
PFRAC_API void pfrac_decomposition_free(pfrac_decomposition* d);

PFRAC_API size_t pfrac_decomposition_term_count(const pfrac_decomposition* d);
PFRAC_API size_t pfrac_decomposition_point_count(const pfrac_decomposition* d);
/* Term i: its point index and coefficient as a "p/q" string. */
PFRAC_API pfrac_status pfrac_decomposition_term(const pfrac_decomposition* d, size_t i,
                                                size_t* point_index, char** coeff);

/* report may be NULL; when given it is appended (text) or embedded under
 * "verification" (JSON). The text listing reports |L(X_p)| per point, which
 * is enumerated only when |X_p| <= max_xp. */
PFRAC_API pfrac_status pfrac_decomposition_render(const pfrac_decomposition* d,
                                                  pfrac_format format,
                                                  const pfrac_report* report, size_t max_xp,
                                                  char** out);

/* ---- verification ----------------------------------------------------- */

PFRAC_API pfrac_status pfrac_verify(const pfrac_decomposition* d, size_t trials, uint64_t seed,
                                    pfrac_report** out);
PFRAC_API void pfrac_report_free(pfrac_report* report);
/* 1 when every check passed, 0 otherwise. */
PFRAC_API int pfrac_report_passed(const pfrac_report* report);
PFRAC_API pfrac_status pfrac_report_render(const pfrac_report* report, pfrac_format format,
                                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* PFRAC_PFRAC_H */
