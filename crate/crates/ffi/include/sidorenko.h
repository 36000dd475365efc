#ifndef SIDORENKO_H
#define SIDORENKO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which set function a certification is about.
 */
typedef enum SidClaim {
  /**
   * Thick for graphs, weakly thick otherwise.
   */
  SID_CLAIM_DEFAULT = 0,
  SID_CLAIM_THICK = 1,
  SID_CLAIM_WEAKLY_THICK = 2,
} SidClaim;

typedef enum SidMode {
  /**
   * Constructive route, then restricted LP, then full LP.
   */
  SID_MODE_AUTO = 0,
  SID_MODE_RESTRICTED = 1,
  SID_MODE_FULL = 2,
} SidMode;

/**
 * Result of every call.
 */
typedef enum SidStatus {
  SID_STATUS_OK = 0,
  SID_STATUS_NULL_POINTER = 1,
  SID_STATUS_INVALID_UTF8 = 2,
  SID_STATUS_PARSE = 3,
  SID_STATUS_SIZE_CAP = 4,
  SID_STATUS_ARITY = 5,
  SID_STATUS_PRECONDITION = 6,
  SID_STATUS_NOT_IN_CLASS = 7,
  SID_STATUS_MALFORMED_CERTIFICATE = 8,
  SID_STATUS_UNSUPPORTED = 9,
  SID_STATUS_INVALID_INPUT = 10,
  SID_STATUS_EMPTY_SUPPORT = 11,
  SID_STATUS_PANIC = 12,
} SidStatus;

typedef enum SidVerdict {
  SID_VERDICT_MEMBER = 0,
  SID_VERDICT_NOT_MEMBER = 1,
  SID_VERDICT_INCONCLUSIVE = 2,
} SidVerdict;

/**
 * A complex (from a trace or an explicit reducible b-hypergraph).
 */
typedef struct SidComplex SidComplex;

/**
 * A pattern graph or uniform hypergraph.
 */
typedef struct SidGraph SidGraph;

/**
 * A target graph or uniform hypergraph with at least one edge.
 */
typedef struct SidTarget SidTarget;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, as a static string.
 */
const char *sid_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *sid_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void sid_string_free(char *s);

/**
 * Parses a complex file (`{arity, trace}` or `{arity, vertices, edges, relation}`).
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SidStatus sid_complex_from_json(const char *json, struct SidComplex **out);

/**
 * Builds a catalog construction by name with `n_params` integer parameters.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `params` must point to
 * `n_params` values (or be null when `n_params` is 0); `out` must be writable.
 */
enum SidStatus sid_complex_from_catalog(const char *name,
                                        const uint32_t *params,
                                        size_t n_params,
                                        struct SidComplex **out);

/**
 * # Safety
 * `c` must come from this library and not have been freed; null is ignored.
 */
void sid_complex_free(struct SidComplex *c);

/**
 * Serializes the complex in the file format it was read in.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SidStatus sid_complex_to_json(const struct SidComplex *c, char **out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SidStatus sid_complex_vertex_count(const struct SidComplex *c, size_t *out);

/**
 * The frame of the complex as a graph handle.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum SidStatus sid_complex_frame(const struct SidComplex *c, struct SidGraph **out);

/**
 * Decides (weak) thickness. On `Member` the certificate file is written to
 * `out_json`, on `NotMember` the refutation file; on `Inconclusive` it is set
 * to null. `out_json` may itself be null. `max_ground` of 0 keeps the default.
 *
 * # Safety
 * `c` must be a live handle; `out_verdict` must be writable.
 */
enum SidStatus sid_certify(const struct SidComplex *c,
                           enum SidClaim claim,
                           enum SidMode mode,
                           size_t max_ground,
                           enum SidVerdict *out_verdict,
                           char **out_json);

/**
 * Checks a certificate or refutation file against the complex. A
 * structurally invalid certificate yields `valid = false`, not an error.
 *
 * # Safety
 * `c` must be a live handle; `json` a NUL-terminated string; `out_valid` writable.
 */
enum SidStatus sid_verify(const struct SidComplex *c, const char *json, bool *out_valid);

/**
 * Parses `{vertices, edges}` as a pattern graph.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SidStatus sid_graph_from_json(const char *json, struct SidGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed; null is ignored.
 */
void sid_graph_free(struct SidGraph *g);

/**
 * Parses `{vertices, edges}` as a target; it needs at least one edge.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SidStatus sid_target_from_json(const char *json, struct SidTarget **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed; null is ignored.
 */
void sid_target_free(struct SidTarget *g);

/**
 * `|Hom(H,G)|`.
 *
 * # Safety
 * `h`, `g` must be live handles; `out` must be writable.
 */
enum SidStatus sid_hom_count(const struct SidGraph *h, const struct SidTarget *g, uint64_t *out);

/**
 * Exact check of `t(H,G) >= t(e,G)^|E(H)|`. The report (`homomorphisms`,
 * `lhs`, `rhs` as "p/q", `holds`) goes to `out_json` unless it is null.
 *
 * # Safety
 * `h`, `g` must be live handles; `out_holds` must be writable.
 */
enum SidStatus sid_sidorenko_check(const struct SidGraph *h,
                                   const struct SidTarget *g,
                                   bool *out_holds,
                                   char **out_json);

/**
 * Builds the coupling measure of a traced complex on `g` and compares
 * `D(mu)` with `|E(H)|·D_e`. `max_state` of 0 keeps the default cap.
 * The measure table goes to `out_json` unless it is null.
 *
 * # Safety
 * `c`, `g` must be live handles; `out_d_mu`, `out_bound`, `out_holds` writable.
 */
enum SidStatus sid_scheme_witness(const struct SidComplex *c,
                                  const struct SidTarget *g,
                                  uint64_t max_state,
                                  double tol,
                                  double *out_d_mu,
                                  double *out_bound,
                                  bool *out_holds,
                                  char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIDORENKO_H */
