#ifndef CONGRU_CONGRU_H
#define CONGRU_CONGRU_H

/*
 * C interface to libcongru. Objects are opaque handles released with the
 * matching *_free function. Big integers cross the boundary as decimal
 * strings; strings returned through char** are owned by the caller and
 * released with congru_string_free. Every call returns a status; on failure
 * congru_last_error() describes it (thread local, valid until the next call
 * on the same thread).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(CONGRU_BUILDING_LIBRARY)
#define CONGRU_API __attribute__((visibility("default")))
#else
#define CONGRU_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum congru_status {
  CONGRU_OK = 0,
  CONGRU_INVALID_ARGUMENT = 1,
  CONGRU_PRECONDITION = 2,
  CONGRU_PARSE = 3,
  CONGRU_LIMIT = 4,
  CONGRU_INTERNAL = 5
} congru_status;

typedef enum congru_limit_kind { CONGRU_BASE_P = 0, CONGRU_FACTORIAL = 1 } congru_limit_kind;

typedef struct congru_fn congru_fn;
typedef struct congru_seq congru_seq;
typedef struct congru_lift_report congru_lift_report;
typedef struct congru_limit congru_limit;
typedef struct congru_series congru_series;
typedef struct congru_set congru_set;
typedef struct congru_poly congru_poly;

CONGRU_API const char* congru_version(void);
CONGRU_API const char* congru_last_error(void);
CONGRU_API void congru_string_free(char* s);

/* Residue rings and the generalized CRT. */
CONGRU_API congru_status congru_proj(const char* x, const char* m, char** out);
/* A conflict is reported as the indices of the first incompatible pair. */
CONGRU_API congru_status congru_gcrt(size_t count, const char* const* targets,
                                     const char* const* moduli, int* feasible, char** least,
                                     char** period, size_t* conflict_first,
                                     size_t* conflict_second);
CONGRU_API congru_status congru_lcm_upto(uint64_t k, char** out);
CONGRU_API congru_status congru_nu(uint64_t m, uint64_t* out);
CONGRU_API congru_status congru_binom(uint64_t k, const char* x, char** out);

/* Finite functions Z/nZ -> Z/mZ. */
CONGRU_API congru_status congru_fn_new(uint64_t n, uint64_t m, const uint64_t* table,
                                       congru_fn** out);
CONGRU_API congru_status congru_fn_parse(const char* text, congru_fn** out);
CONGRU_API void congru_fn_free(congru_fn* f);
CONGRU_API uint64_t congru_fn_n(const congru_fn* f);
CONGRU_API uint64_t congru_fn_m(const congru_fn* f);
CONGRU_API congru_status congru_fn_get(const congru_fn* f, uint64_t x, uint64_t* out);
CONGRU_API congru_status congru_fn_format(const congru_fn* f, char** out);
CONGRU_API congru_status congru_fn_check_cp(const congru_fn* f, int* holds, uint64_t* wx,
                                            uint64_t* wy);
CONGRU_API congru_status congru_fn_represent(const congru_fn* f, congru_seq** coeffs);
CONGRU_API congru_status congru_repr_eval(uint64_t n, uint64_t m, const congru_seq* coeffs,
                                          uint64_t x, uint64_t* out);
CONGRU_API congru_status congru_fn_lift_finite(const congru_fn* f, uint64_t r, uint64_t s,
                                               congru_fn** out);
CONGRU_API congru_status congru_count_cp(uint64_t n, uint64_t m, uint64_t* out);
/* The callback returns nonzero to continue. The handle is only valid
   during the call. */
typedef int (*congru_fn_visitor)(const congru_fn* f, void* user);
CONGRU_API congru_status congru_for_each_cp(uint64_t n, uint64_t m, congru_fn_visitor visit,
                                            void* user);

/* Integer sequences: prefixes F(0..T) and coefficient vectors. */
CONGRU_API congru_status congru_seq_new(congru_seq** out);
CONGRU_API congru_status congru_seq_parse(const char* text, congru_seq** out);
CONGRU_API void congru_seq_free(congru_seq* s);
CONGRU_API congru_status congru_seq_push(congru_seq* s, const char* value);
CONGRU_API size_t congru_seq_size(const congru_seq* s);
CONGRU_API congru_status congru_seq_get(const congru_seq* s, size_t i, char** out);
CONGRU_API congru_status congru_seq_format(const congru_seq* s, char** out);
CONGRU_API congru_status congru_seq_newton(const congru_seq* values, congru_seq** coeffs);
CONGRU_API congru_status congru_seq_synthesize(const congru_seq* coeffs, uint64_t T,
                                               congru_seq** values);
CONGRU_API congru_status congru_seq_check_cp(const congru_seq* values, int* holds,
                                             uint64_t* wx, uint64_t* wy);
/* On failure k is the least bad index and coeff/lcm describe it. */
CONGRU_API congru_status congru_seq_check_lcm(const congru_seq* coeffs, int* holds, size_t* k,
                                              char** coeff, char** lcm);
CONGRU_API congru_status congru_verify_lift(const congru_seq* values, const congru_fn* f,
                                            int* ok);

/* Lifting to N -> N. */
CONGRU_API congru_status congru_lift(const congru_fn* f, uint64_t T, congru_lift_report** out);
CONGRU_API void congru_lift_free(congru_lift_report* r);
CONGRU_API int congru_lift_succeeded(const congru_lift_report* r);
CONGRU_API const char* congru_lift_tie_break(const congru_lift_report* r);
/* The full prefix on success, the values computed before the failing step
   otherwise. */
CONGRU_API congru_status congru_lift_values(const congru_lift_report* r, congru_seq** out);
CONGRU_API congru_status congru_lift_failure_step(const congru_lift_report* r, uint64_t* step);
CONGRU_API size_t congru_lift_failure_system_size(const congru_lift_report* r);
CONGRU_API congru_status congru_lift_failure_equation(const congru_lift_report* r, size_t i,
                                                      char** target, char** modulus);
CONGRU_API congru_status congru_lift_failure_conflict(const congru_lift_report* r,
                                                      size_t* first, size_t* second);
/* First i < step with f(i) and f(step) apart modulo g = gcd(step - i, m). */
CONGRU_API congru_status congru_forced_obstruction(const congru_fn* f, uint64_t step,
                                                   int* found, uint64_t* earlier,
                                                   uint64_t* g, uint64_t* residue_earlier,
                                                   uint64_t* residue_step);

/* Floor-of-exponential exemplars. */
CONGRU_API congru_status congru_exemplar_e_fact(uint64_t x, char** out);
CONGRU_API congru_status congru_exemplar_ea_fact(long a, uint64_t x, char** out);

/* Truncated p-adic (kind BASE_P, prime p) and profinite (kind FACTORIAL,
   p ignored) integers at precision N. */
CONGRU_API congru_status congru_limit_from_int(congru_limit_kind kind, uint64_t p,
                                               unsigned N, const char* z, congru_limit** out);
CONGRU_API congru_status congru_limit_parse(const char* text, congru_limit** out);
CONGRU_API void congru_limit_free(congru_limit* x);
CONGRU_API congru_status congru_limit_format(const congru_limit* x, char** out);
CONGRU_API congru_status congru_limit_to_int(const congru_limit* x, char** out);
CONGRU_API congru_status congru_limit_add(const congru_limit* a, const congru_limit* b,
                                          congru_limit** out);
CONGRU_API congru_status congru_limit_sub(const congru_limit* a, const congru_limit* b,
                                          congru_limit** out);
CONGRU_API congru_status congru_limit_mul(const congru_limit* a, const congru_limit* b,
                                          congru_limit** out);
CONGRU_API congru_status congru_limit_neg(const congru_limit* a, congru_limit** out);
CONGRU_API congru_status congru_limit_val(const congru_limit* x, unsigned* value,
                                          int* saturated);
CONGRU_API congru_status congru_limit_dist(const congru_limit* x, const congru_limit* y,
                                           unsigned* exponent, int* upper_bound);

CONGRU_API congru_status congru_series_new(congru_limit_kind kind, uint64_t p, unsigned N,
                                           const congru_seq* coeffs, congru_series** out);
CONGRU_API congru_status congru_series_lcm_free(uint64_t p, size_t K, unsigned N,
                                                 congru_series** out);
CONGRU_API void congru_series_free(congru_series* s);
CONGRU_API size_t congru_series_size(const congru_series* s);
/* cutoff == SIZE_MAX keeps every stored term. */
CONGRU_API congru_status congru_series_eval(const congru_series* s, const congru_limit* x,
                                            size_t cutoff, congru_limit** out);
CONGRU_API congru_status congru_series_level(const congru_series* s, unsigned level,
                                             congru_fn** out);
/* levels[i] maps level mu[i] (or i+1 when mu is NULL) to level i+1. */
CONGRU_API congru_status congru_check_system(const congru_fn* const* levels, size_t count,
                                             congru_limit_kind kind, uint64_t p,
                                             const unsigned* mu, int* holds, unsigned* wn,
                                             unsigned* wm, uint64_t* wx);
CONGRU_API congru_status congru_check_lipschitz(const congru_fn* level_table, unsigned level,
                                                uint64_t p, int* holds, uint64_t* wx,
                                                uint64_t* wy);

/* Eventually periodic subsets of Z. */
CONGRU_API congru_status congru_set_parse(const char* text, congru_set** out);
CONGRU_API congru_status congru_set_from_spec(const char* spec, congru_set** out);
CONGRU_API void congru_set_free(congru_set* s);
CONGRU_API congru_status congru_set_format(const congru_set* s, char** out);
CONGRU_API int congru_set_contains(const congru_set* s, int64_t x);
CONGRU_API int congru_set_equal(const congru_set* a, const congru_set* b);
CONGRU_API int congru_set_is_recognizable(const congru_set* s);
CONGRU_API int congru_set_finitely_many_negatives(const congru_set* s);
CONGRU_API congru_status congru_set_union(const congru_set* a, const congru_set* b,
                                          congru_set** out);
CONGRU_API congru_status congru_set_intersection(const congru_set* a, const congru_set* b,
                                                 congru_set** out);
CONGRU_API congru_status congru_set_complement(const congru_set* a, congru_set** out);
CONGRU_API congru_status congru_set_translate(const congru_set* a, int64_t t,
                                              congru_set** out);

/* CP polynomials over Z in the Newton basis. */
CONGRU_API congru_status congru_poly_new(const congru_seq* newton, congru_poly** out);
CONGRU_API congru_status congru_poly_from_power(const congru_seq* power, congru_poly** out);
CONGRU_API void congru_poly_free(congru_poly* f);
CONGRU_API congru_status congru_poly_eval(const congru_poly* f, const char* x, char** out);
CONGRU_API size_t congru_poly_degree(const congru_poly* f);

/* Recognizable L takes the residue path, anything else the eventual one. */
CONGRU_API congru_status congru_preimage(const congru_poly* f, const congru_set* L,
                                         congru_set** out);
/* window <= 0 selects the default monotonicity window. */
CONGRU_API congru_status congru_union_intersection(const congru_poly* f, const congru_set* L,
                                                   int64_t window, congru_set** out,
                                                   char** expression);
/* detail receives the certificate for members, the reason otherwise. */
CONGRU_API congru_status congru_membership(const congru_set* L, const congru_set* X,
                                           int* member, char** detail);
CONGRU_API congru_status congru_certify_negatives(const congru_set* L, const congru_set* X,
                                                  int* found, char** certificate);

#ifdef __cplusplus
}
#endif

#endif
