/*
 * C interface to the brieskorn engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a bk_status; on
 * failure the message of the most recent error on the calling thread is
 * available from bk_last_error_message(). Strings returned through char**
 * out-parameters are NUL-terminated UTF-8 JSON and must be released with
 * bk_string_free().
 *
 * Handles are immutable once built and may be shared between threads.
 */
#ifndef BRIESKORN_H
#define BRIESKORN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BRIESKORN_BUILDING_LIBRARY)
#define BRIESKORN_API __declspec(dllexport)
#else
#define BRIESKORN_API __declspec(dllimport)
#endif
#else
#define BRIESKORN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
    BK_OK = 0,
    BK_ERR_MALFORMED_INPUT = 1,
    BK_ERR_NOT_FULL_DIMENSIONAL = 2,
    BK_ERR_NOT_A_VERTEX = 3,
    BK_ERR_ORIGIN_NOT_INTERIOR = 4,
    BK_ERR_NOT_REFLEXIVE = 5,
    BK_ERR_NOT_SIMPLICIAL = 6,
    BK_ERR_MISSING_COEFFICIENT = 7,
    BK_ERR_ZERO_COEFFICIENT = 8,
    BK_ERR_ZERO_POLYNOMIAL = 9,
    BK_ERR_NOT_CONVENIENT = 10,
    BK_ERR_NONDEGENERACY_UNVERIFIED = 11,
    BK_ERR_DEGENERACY_DETECTED = 12,
    BK_ERR_SPECTRUM_ASYMMETRY = 13,
    BK_ERR_NOT_NILPOTENT = 14,
    BK_ERR_SHAPE_MISMATCH = 15,
    BK_ERR_INVALID_ARGUMENT = 16,
    BK_ERR_IO = 17,
    BK_ERR_INTERNAL = 18
} bk_status;

typedef struct bk_polytope bk_polytope;
typedef struct bk_polynomial bk_polynomial;
typedef struct bk_jacobian bk_jacobian;

typedef struct bk_kkp_options {
    unsigned trials;          /* random coefficient vectors for the constancy test */
    uint64_t seed;
    int assume_nondegenerate; /* nonzero: accept uncertified inputs */
} bk_kkp_options;

BRIESKORN_API const char* bk_version(void);
BRIESKORN_API const char* bk_status_name(bk_status status);
BRIESKORN_API const char* bk_last_error_message(void);

/* Process exit code for a status: 0 success, 2 degenerate input,
 * 3 malformed input, 1 internal failure. */
BRIESKORN_API int bk_exit_code(bk_status status);

BRIESKORN_API void bk_string_free(char* s);

/* Polytopes: {"dim": n, "vertices": [[...], ...], "name": optional}. */
BRIESKORN_API bk_status bk_polytope_from_json(const char* json_text, bk_polytope** out);
BRIESKORN_API bk_status bk_polytope_load(const char* path, bk_polytope** out);
BRIESKORN_API void bk_polytope_free(bk_polytope* p);
BRIESKORN_API size_t bk_polytope_dim(const bk_polytope* p);
BRIESKORN_API size_t bk_polytope_vertex_count(const bk_polytope* p);
/* The "name" field, or the file stem for loaded files. Owned by the handle. */
BRIESKORN_API const char* bk_polytope_name(const bk_polytope* p);
BRIESKORN_API bk_status bk_polytope_summary_json(const bk_polytope* p, char** out_json);

/* Vertex polynomials. coefficients_json maps vertex index to "p/q";
 * NULL means every coefficient is 1. */
BRIESKORN_API bk_status bk_polynomial_vertex(const bk_polytope* p, const char* coefficients_json,
                                             bk_polynomial** out);
BRIESKORN_API void bk_polynomial_free(bk_polynomial* f);
BRIESKORN_API bk_status bk_polynomial_json(const bk_polynomial* f, char** out_json);
BRIESKORN_API bk_status bk_polynomial_certificate_json(const bk_polynomial* f, int assume_nondegenerate,
                                                       char** out_json);

/* Polytope summary plus vertex polynomial and nondegeneracy certificate.
 * Fails with BK_ERR_ORIGIN_NOT_INTERIOR when 0 is not an interior point. */
BRIESKORN_API bk_status bk_check_json(const bk_polytope* p, const char* coefficients_json, int assume_nondegenerate,
                                      char** out_json);

/* Newton-graded Jacobian ring. */
BRIESKORN_API bk_status bk_jacobian_build(const bk_polynomial* f, int assume_nondegenerate, bk_jacobian** out);
BRIESKORN_API void bk_jacobian_free(bk_jacobian* ring);
BRIESKORN_API size_t bk_jacobian_mu(const bk_jacobian* ring);
BRIESKORN_API bk_status bk_jacobian_json(const bk_jacobian* ring, int full, char** out_json);
BRIESKORN_API bk_status bk_spectrum_json(const bk_jacobian* ring, char** out_json);
BRIESKORN_API bk_status bk_lefschetz_json(const bk_jacobian* ring, char** out_json);

/* Full report. options may be NULL (no trials, seed 0). */
BRIESKORN_API bk_status bk_kkp_report_json(const bk_polytope* p, const char* coefficients_json,
                                           const bk_kkp_options* options, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
