#ifndef CHROMSYM_H
#define CHROMSYM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChromsymBasis {
  CHROMSYM_BASIS_MONOMIAL = 0,
  CHROMSYM_BASIS_ELEMENTARY = 1,
  CHROMSYM_BASIS_HOMOGENEOUS = 2,
  CHROMSYM_BASIS_POWER_SUM = 3,
  CHROMSYM_BASIS_SCHUR = 4,
} ChromsymBasis;

typedef enum ChromsymPositivity {
  CHROMSYM_POSITIVITY_E_POSITIVE = 0,
  CHROMSYM_POSITIVITY_SCHUR_POSITIVE = 1,
  CHROMSYM_POSITIVITY_NOT_SCHUR_POSITIVE = 2,
} ChromsymPositivity;

/*
 Result code of every fallible call.
 */
typedef enum ChromsymStatus {
  CHROMSYM_STATUS_OK = 0,
  CHROMSYM_STATUS_NULL_POINTER = 1,
  CHROMSYM_STATUS_INVALID_ARGUMENT = 2,
  CHROMSYM_STATUS_PARSE = 3,
  CHROMSYM_STATUS_CAP_EXCEEDED = 4,
  CHROMSYM_STATUS_IO = 5,
  CHROMSYM_STATUS_UTF8 = 6,
  CHROMSYM_STATUS_PANIC = 7,
} ChromsymStatus;

/*
 Opaque homogeneous symmetric function.
 */
typedef struct ChromsymElement ChromsymElement;

/*
 Opaque simple graph.
 */
typedef struct ChromsymGraph ChromsymGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after a success.
 The pointer stays valid until the next call on the same thread.
 */
const char *chromsym_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void chromsym_string_free(char *s);

/*
 The path P_n.

 # Safety
 `out` must be a valid pointer.
 */
enum ChromsymStatus chromsym_graph_path(size_t n, struct ChromsymGraph **out);

/*
 The spider with the given leg lengths.

 # Safety
 `legs` must point to `len` readable values and `out` must be valid.
 */
enum ChromsymStatus chromsym_graph_spider(const size_t *legs,
                                          size_t len,
                                          struct ChromsymGraph **out);

/*
 A graph from edge-list text: one 1-indexed `u v` pair per line, `#` comments allowed.

 # Safety
 `text` must be a NUL-terminated string and `out` must be valid.
 */
enum ChromsymStatus chromsym_graph_parse(const char *text, struct ChromsymGraph **out);

/*
 Number of vertices, or 0 for a null handle.

 # Safety
 `g` must be null or a live graph handle.
 */
size_t chromsym_graph_vertex_count(const struct ChromsymGraph *g);

/*
 # Safety
 `g` must be null or a live graph handle; it is invalid afterwards.
 */
void chromsym_graph_free(struct ChromsymGraph *g);

/*
 X_G in the requested basis, refusing graphs with more than `max_edges` edges.

 # Safety
 `g` must be a live graph handle and `out` must be valid.
 */
enum ChromsymStatus chromsym_csf(const struct ChromsymGraph *g,
                                 enum ChromsymBasis basis,
                                 size_t max_edges,
                                 struct ChromsymElement **out);

/*
 Rewrites the element in another basis, returning a new handle.

 # Safety
 `e` must be a live element handle and `out` must be valid.
 */
enum ChromsymStatus chromsym_element_to_basis(const struct ChromsymElement *e,
                                              enum ChromsymBasis basis,
                                              struct ChromsymElement **out);

/*
 Human-readable form, e.g. `s31 - s22 + 5s211 + 8s1111`.

 # Safety
 `e` must be a live element handle and `out` must be valid.
 */
enum ChromsymStatus chromsym_element_to_string(const struct ChromsymElement *e, char **out);

/*
 JSON form with exact rational coefficients.

 # Safety
 `e` must be a live element handle and `out` must be valid.
 */
enum ChromsymStatus chromsym_element_to_json(const struct ChromsymElement *e, char **out);

/*
 e-positive, Schur-positive, or neither.

 # Safety
 `e` must be a live element handle and `out` must be valid.
 */
enum ChromsymStatus chromsym_element_positivity(const struct ChromsymElement *e,
                                                enum ChromsymPositivity *out);

/*
 # Safety
 `e` must be null or a live element handle; it is invalid afterwards.
 */
void chromsym_element_free(struct ChromsymElement *e);

/*
 Runs a command-line invocation such as `verify lemma41 --n 10 --k 5` and
 returns its JSON report. `exit_code` receives the CLI exit code (0 pass,
 1 fail, 2 cap exceeded, 64 usage). On a non-zero code `json_out` holds the
 diagnostic text instead.

 # Safety
 `args` must be a NUL-terminated string; `json_out` and `exit_code` must be valid.
 */
enum ChromsymStatus chromsym_verify(const char *args, char **json_out, int32_t *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMSYM_H */
