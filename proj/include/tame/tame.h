#ifndef TAME_TAME_H
#define TAME_TAME_H

/* C interface to the tame library. Values live behind opaque handles;
 * every call returns a tame_status and, on failure, records a message
 * readable with tame_last_error_* on the calling thread. Strings returned
 * through char** are owned by the caller and released with tame_free_string.
 * JSON arguments are documents {"kind", "formatVersion", "payload"}. */

#include <stddef.h>

#if defined(TAME_BUILDING_LIBRARY)
#define TAME_API __attribute__((visibility("default")))
#else
#define TAME_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tame_status {
  TAME_OK = 0,
  TAME_DOMAIN_MISMATCH,
  TAME_ARITY_MISMATCH,
  TAME_INDEX_OUT_OF_RANGE,
  TAME_NOT_INJECTIVE,
  TAME_NOT_COVERING,
  TAME_DEGREE_TOO_LARGE,
  TAME_SUPPORT_NOT_COVERED,
  TAME_WINDOW_TOO_SMALL,
  TAME_NOT_TAME,
  TAME_TRUNCATION_EXCEEDED,
  TAME_INVALID_MORPHISM,
  TAME_OVERLAPPING_SUPPORTS,
  TAME_VALIDATION_FAILED,
  TAME_NOT_A_MONOID,
  TAME_PRECONDITION_VIOLATED,
  TAME_SEARCH_EXHAUSTED,
  TAME_LEVEL_BOUND_EXCEEDED,
  TAME_PARSE_ERROR,
  TAME_UNKNOWN_COMMAND,
  TAME_NULL_ARGUMENT,
  TAME_INTERNAL_ERROR
} tame_status;

typedef struct tame_mset tame_mset;
typedef struct tame_iset tame_iset;
typedef struct tame_monoid tame_monoid;
typedef struct tame_certificate tame_certificate;

TAME_API const char* tame_version(void);
TAME_API const char* tame_status_name(tame_status status);
/* Empty strings after a successful call. */
TAME_API const char* tame_last_error_message(void);
TAME_API const char* tame_last_error_invariant(void);
TAME_API const char* tame_last_error_location(void);
TAME_API void tame_free_string(char* s);

/* M-sets in canonical form. */
TAME_API tame_status tame_mset_from_json(const char* json, tame_mset** out);
TAME_API tame_status tame_mset_representable(int m, tame_mset** out);
TAME_API tame_status tame_mset_to_json(const tame_mset* x, char** out);
TAME_API tame_status tame_mset_level_size(const tame_mset* x, int level,
                                          size_t* out);
TAME_API tame_status tame_mset_box(const tame_mset* x, const tame_mset* y,
                                   tame_mset** out);
/* Support of the element {"level", "image", "point"} as a JSON array. */
TAME_API tame_status tame_mset_support(const tame_mset* x,
                                       const char* element_json, char** out);
TAME_API void tame_mset_free(tame_mset* x);

/* Truncated I-sets. */
TAME_API tame_status tame_iset_from_json(const char* json, tame_iset** out);
TAME_API tame_status tame_iset_to_json(const tame_iset* x, char** out);
/* mode 0: latching criterion, 1: direct criterion. */
TAME_API tame_status tame_iset_is_flat(const tame_iset* x, int mode,
                                       int* flat);
TAME_API tame_status tame_iset_canonicalize(const tame_iset* x,
                                            tame_mset** out);
TAME_API tame_status tame_iset_day(const tame_iset* x, const tame_iset* y,
                                   tame_iset** out);
TAME_API void tame_iset_free(tame_iset* x);

/* Commutative box-monoids. */
TAME_API tame_status tame_monoid_from_json(const char* json,
                                           tame_monoid** out);
TAME_API tame_status tame_monoid_cyclic(int k, tame_monoid** out);
/* X^infinity for X of the given size with basepoint "*". */
TAME_API tame_status tame_monoid_xinf(int points, int level_bound,
                                      tame_monoid** out);
TAME_API tame_status tame_monoid_to_json(const tame_monoid* p, char** out);
TAME_API tame_status tame_monoid_sum(const tame_monoid* p, const char* x_json,
                                     const char* y_json, char** out);
TAME_API void tame_monoid_free(tame_monoid* p);

/* Certificate chains between operad elements agreeing on finite sets. */
TAME_API tame_status tame_agreeing_chain(const char* phi_json, const char* psi_json,
                                   const char* constraints_json,
                                   tame_certificate** out);
TAME_API tame_status tame_certificate_from_json(const char* json,
                                                tame_certificate** out);
TAME_API tame_status tame_certificate_to_json(const tame_certificate* c,
                                              char** out);
TAME_API tame_status tame_certificate_length(const tame_certificate* c,
                                             size_t* out);
/* ok is 1 when every step checks; failing_step may be NULL. */
TAME_API tame_status tame_certificate_verify(const tame_certificate* c,
                                             int* ok, int* failing_step);
TAME_API void tame_certificate_free(tame_certificate* c);

/* Runs a CLI subcommand; argv[0] is the subcommand name. The report is the
 * JSON the CLI prints and exit_code its exit status. Returns TAME_OK
 * whenever a report was produced, including law failures and input errors. */
TAME_API tame_status tame_run_command(int argc, const char* const* argv,
                                      char** report, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
