#ifndef ERGOLAB_H
#define ERGOLAB_H

/* C interface to the density laboratory. Objects are opaque handles created
 * from spec strings; drivers render their results as CSV or JSON text that
 * the caller releases with ergolab_free(). All functions are thread-safe;
 * error details are per-thread via ergolab_last_error().
 *
 * Spec grammars:
 *   set:    hindman | all | ab a=P/Q b=P/Q | rot alpha=A u=U v=V x0=X |
 *           periodic m=M r=R1,R2,... | intervals [a,b)[c,d)...
 *           (A is a decimal or one of: golden, sqrt2, sqrt3 meaning the
 *            fractional parts of the golden ratio conjugate, sqrt 2, sqrt 3)
 *   seq:    id | pow b= c= | powsum b= c= d= a= | powlog b= c= d= |
 *           powlogsum b= c= d= a= | log | poly2log | prime c= | list v,v,...
 *   expr:   E | E@h | ~expr | (expr & expr) | (expr | expr)
 *   folner: segments | dyadic | explicit [a,b)[c,d)...
 *   format: csv | json
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  ERGOLAB_OK = 0,
  ERGOLAB_EPARSE = 1,     /* malformed spec or expression */
  ERGOLAB_ERANGE = 2,     /* parameter out of range */
  ERGOLAB_EPRECISION = 3, /* value inside a floating guard band */
  ERGOLAB_EFAIL = 4       /* selftest failures or internal error */
} ergolab_status;

typedef struct ergolab_set ergolab_set;
typedef struct ergolab_seq ergolab_seq;
typedef struct ergolab_expr ergolab_expr;

/* Message for the most recent failure on this thread; empty string if none. */
const char* ergolab_last_error(void);

/* Releases any string returned through a char** out parameter. */
void ergolab_free(char* text);

ergolab_status ergolab_set_create(const char* spec, ergolab_set** out);
void ergolab_set_destroy(ergolab_set* set);

ergolab_status ergolab_seq_create(const char* spec, ergolab_seq** out);
void ergolab_seq_destroy(ergolab_seq* seq);

ergolab_status ergolab_expr_create(const char* text, ergolab_expr** out);
void ergolab_expr_destroy(ergolab_expr* expr);

/* Window densities of expr(E) along a Folner family, N up to nmax. */
ergolab_status ergolab_density_scan(const ergolab_set* set, const ergolab_expr* expr,
                                    const char* folner_spec, int nmax,
                                    const char* format, char** out);

/* Best sub-window density of expr(E): windows of length L starting at
 * multiples of stride inside [0, B). A certified lower bound for the upper
 * Banach density. */
ergolab_status ergolab_banach(const ergolab_set* set, const ergolab_expr* expr,
                              long long L, long long B, long long stride,
                              const char* format, char** out);

/* Covering curve: best-window density of the union of the first K shifts of E
 * by the sequence, for each K in the comma-separated checkpoint list. */
ergolab_status ergolab_cover(const ergolab_set* set, const ergolab_seq* seq,
                             const char* ks_csv, long long L, long long B,
                             long long stride, const char* format, char** out);

/* Union stability of the block set: exact dyadic-window densities of
 * union_{i<=K}(E-i) with the boundary bound, K in ks_csv, N up to nmax. */
ergolab_status ergolab_counterexample(const char* ks_csv, int nmax,
                                      const char* format, char** out);

/* Exponential sum magnitudes |S_N(x)| at the checkpoints in ns_csv over an
 * x-grid (comma-separated; NULL or "" for the default grid), with decay
 * verdicts comparing the last checkpoint to the first. */
ergolab_status ergolab_weyl_scan(const ergolab_seq* seq, const char* ns_csv,
                                 const char* grid_csv, const char* format,
                                 char** out);

/* For `trials` random trigonometric polynomials of the given degree: the mean
 * squared deviation of the orbit average under rotation by alpha versus the
 * atomic spectral sum. Uses a uniform quadrature grid of grid_size points. */
ergolab_status ergolab_spectral(const ergolab_seq* seq, const char* alpha,
                                int degree, long long N, int grid_size,
                                unsigned long long seed, int trials,
                                const char* format, char** out);

/* Partial averages (1/h) sum_{g<h} density(E n (E-g)) on [lo, hi), h <= H,
 * against the reference density(E)^2. */
ergolab_status ergolab_correlate(const ergolab_set* set, long long lo,
                                 long long hi, long long H, const char* format,
                                 char** out);

/* Exact window densities of each expression (semicolon-separated list) along
 * a Folner family, with monotone-gap flags in the JSON form. */
ergolab_status ergolab_cylinder_table(const ergolab_set* set,
                                      const char* exprs_semicolon,
                                      const char* folner_spec, int nmax,
                                      const char* format, char** out);

/* Best h in [1, hmax] for the lower-bound scan of complement(E) n (E-h). */
ergolab_status ergolab_witness(const ergolab_set* set, long long hmax,
                               long long L, long long B, long long stride,
                               const char* format, char** out);

/* Covering curves for each set spec (semicolon-separated) with heuristic
 * sweeping-out verdicts. */
ergolab_status ergolab_classify(const ergolab_seq* seq, const char* sets_semicolon,
                                const char* ks_csv, long long L, long long B,
                                long long stride, const char* format, char** out);

/* Seeded property suite over every module invariant. Returns ERGOLAB_OK when
 * all checks pass, ERGOLAB_EFAIL otherwise; *out receives the full report
 * either way. The report depends only on the seed, not on thread count. */
ergolab_status ergolab_selftest(unsigned long long seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
