/*
 * toricdp C API
 *
 * Complete smooth toric surfaces, their invariant divisors and the
 * classification of toric log del Pezzo pairs, behind opaque handles.
 *
 * Conventions:
 *  - every fallible call returns a toricdp_status; TORICDP_OK is 0.
 *  - on failure, toricdp_last_error() describes the problem. The message is
 *    thread-local and valid until the next failing call on the same thread.
 *  - handles are created by *_create / *_from_* functions and released with
 *    the matching *_free. Passing NULL to a *_free function is allowed.
 *  - strings returned through char** are owned by the caller and released
 *    with toricdp_string_free.
 *  - ray sequences are counterclockwise: det(u_i, u_{i+1}) = 1.
 */
#ifndef TORICDP_H
#define TORICDP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TORICDP_BUILDING)
#    define TORICDP_API __declspec(dllexport)
#  else
#    define TORICDP_API __declspec(dllimport)
#  endif
#else
#  define TORICDP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toricdp_status {
  TORICDP_OK = 0,
  TORICDP_ERR_INVALID_ARGUMENT = 1,
  TORICDP_ERR_OVERFLOW = 2,
  TORICDP_ERR_NOT_UNIMODULAR = 3,
  TORICDP_ERR_INVALID_FAN = 4,
  TORICDP_ERR_CLOSURE = 5,
  TORICDP_ERR_NOT_AMPLE = 6,
  TORICDP_ERR_TOO_LARGE = 7,
  TORICDP_ERR_PARSE = 8,
  TORICDP_ERR_BUFFER_TOO_SMALL = 9,
  TORICDP_ERR_INTERNAL = 10
} toricdp_status;

typedef struct toricdp_fan toricdp_fan;
typedef struct toricdp_polytope toricdp_polytope;

TORICDP_API const char* toricdp_version(void);
TORICDP_API const char* toricdp_status_name(toricdp_status status);
TORICDP_API const char* toricdp_last_error(void);
TORICDP_API void toricdp_string_free(char* s);

/* ---- fans ------------------------------------------------------------- */

/* xy holds 2*n_rays integers x0,y0,x1,y1,... */
TORICDP_API toricdp_status toricdp_fan_create(const int64_t* xy, size_t n_rays,
                                              toricdp_fan** out);
/* {"rays": [[x0,y0], ...]} */
TORICDP_API toricdp_status toricdp_fan_from_json(const char* text,
                                                 toricdp_fan** out);
/* Rebuilds the fan from seeds u_0 = (1,0), u_1 = (0,1). */
TORICDP_API toricdp_status toricdp_fan_from_gammas(const int64_t* gammas,
                                                   size_t n,
                                                   toricdp_fan** out);
TORICDP_API toricdp_status toricdp_fan_projective_plane(toricdp_fan** out);
TORICDP_API toricdp_status toricdp_fan_hirzebruch(int64_t r,
                                                  toricdp_fan** out);
TORICDP_API toricdp_status toricdp_fan_blowup(const toricdp_fan* fan,
                                              size_t i, toricdp_fan** out);
TORICDP_API toricdp_status toricdp_fan_blowdown(const toricdp_fan* fan,
                                                size_t i, toricdp_fan** out);
TORICDP_API void toricdp_fan_free(toricdp_fan* fan);

TORICDP_API size_t toricdp_fan_size(const toricdp_fan* fan);
TORICDP_API int64_t toricdp_fan_picard_rank(const toricdp_fan* fan);
TORICDP_API toricdp_status toricdp_fan_ray(const toricdp_fan* fan, size_t i,
                                           int64_t* x, int64_t* y);
/* The following write fan size (or size^2 for the matrix, row-major)
 * integers into out; capacity is the length of out. */
TORICDP_API toricdp_status toricdp_fan_gammas(const toricdp_fan* fan,
                                              int64_t* out, size_t capacity);
TORICDP_API toricdp_status toricdp_fan_canonical_key(const toricdp_fan* fan,
                                                     int64_t* out,
                                                     size_t capacity);
TORICDP_API toricdp_status toricdp_fan_intersection_matrix(
    const toricdp_fan* fan, int64_t* out, size_t capacity);
TORICDP_API toricdp_status toricdp_fan_to_json(const toricdp_fan* fan,
                                               char** out);

/* ---- divisors --------------------------------------------------------- */

/* Kleiman numbers L.D_i into kleiman (capacity >= fan size). *ample is 1 or
 * 0; *witness is the first index with L.D_i <= 0, or -1 when ample. */
TORICDP_API toricdp_status toricdp_divisor_kleiman(const toricdp_fan* fan,
                                                   const int64_t* coeffs,
                                                   size_t n, int64_t* kleiman,
                                                   int* ample,
                                                   int64_t* witness);
/* *equivalent is 1 when lhs - rhs = div(chi^m); m is written to mx, my. */
TORICDP_API toricdp_status toricdp_divisor_linearly_equivalent(
    const toricdp_fan* fan, const int64_t* lhs, const int64_t* rhs, size_t n,
    int* equivalent, int64_t* mx, int64_t* my);

/* ---- polytopes -------------------------------------------------------- */

/* Fails with TORICDP_ERR_NOT_AMPLE for non-ample divisors. */
TORICDP_API toricdp_status toricdp_polytope_create(const toricdp_fan* fan,
                                                   const int64_t* coeffs,
                                                   size_t n,
                                                   toricdp_polytope** out);
TORICDP_API void toricdp_polytope_free(toricdp_polytope* polytope);
TORICDP_API size_t toricdp_polytope_size(const toricdp_polytope* polytope);
/* Vertex m_i = P_i ∩ P_{i+1}. */
TORICDP_API toricdp_status toricdp_polytope_vertex(
    const toricdp_polytope* polytope, size_t i, int64_t* x, int64_t* y);
/* Lattice length of the edge P_i from m_{i-1} to m_i. */
TORICDP_API toricdp_status toricdp_polytope_facet_volume(
    const toricdp_polytope* polytope, size_t i, int64_t* out);
TORICDP_API toricdp_status toricdp_polytope_lattice_point_count(
    const toricdp_polytope* polytope, size_t* out);
/* {"vertices": [[x,y],...], "facet_volumes": [...]} */
TORICDP_API toricdp_status toricdp_polytope_to_json(
    const toricdp_polytope* polytope, char** out);

/* ---- enumeration, classification and verification reports ------------ */

/* {"rays": n, "gamma_bound": g, "count": k, "keys": [[...], ...]} */
TORICDP_API toricdp_status toricdp_enumerate_json(size_t n_rays,
                                                  int64_t gamma_bound,
                                                  char** out);
/* {"fan": key, "bound": g, "rays": [...], "records": [{"delta": [...],
 *  "ample": bool, "kleiman": [...], "witness": i|null}, ...]} */
TORICDP_API toricdp_status toricdp_classify_json(const toricdp_fan* fan,
                                                 char** out);

/* Verification suites. *pass is 1 on PASS. The report JSON carries the
 * scope bounds and the first counterexample, if any. */
TORICDP_API toricdp_status toricdp_verify_t1_json(const size_t* ray_counts,
                                                  size_t count,
                                                  int64_t gamma_bound,
                                                  char** out, int* pass);
TORICDP_API toricdp_status toricdp_verify_t2_json(char** out, int* pass);
TORICDP_API toricdp_status toricdp_verify_t3_json(int64_t r_max, char** out,
                                                  int* pass);
TORICDP_API toricdp_status toricdp_verify_volumes_json(size_t samples,
                                                       uint64_t seed,
                                                       char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* TORICDP_H */
