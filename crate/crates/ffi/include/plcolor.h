#ifndef PLCOLOR_H
#define PLCOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlcStatus {
  PLC_STATUS_OK = 0,
  PLC_STATUS_NULL_POINTER = 1,
  PLC_STATUS_PARSE_ERROR = 2,
  PLC_STATUS_INVALID_ARGUMENT = 3,
  PLC_STATUS_TOO_LARGE = 4,
  PLC_STATUS_INTEGRITY = 5,
  PLC_STATUS_IO = 6,
  PLC_STATUS_PANIC = 7,
} PlcStatus;

typedef struct PlcGraph PlcGraph;

typedef struct PlcTable PlcTable;

/**
 * Search limits. `palette = 0` means the default `n * t`.
 */
typedef struct PlcOptions {
  size_t max_vertices;
  size_t max_t;
  size_t palette;
  bool unsafe_caps;
} PlcOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default limits: 10 vertices after peeling, t at most 4.
 */
struct PlcOptions plc_options_default(void);

/**
 * Message for the last failed call on this thread; empty after a success.
 */
const char *plc_last_error(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum PlcStatus plc_graph_from_graph6(const char *text, struct PlcGraph **out);

/**
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum PlcStatus plc_graph_from_edge_list(const char *text, struct PlcGraph **out);

/**
 * # Safety
 * `g` must come from this library (or be null) and not be used afterwards.
 */
void plc_graph_free(struct PlcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum PlcStatus plc_graph_order(const struct PlcGraph *g, size_t *out);

/**
 * The graph6 encoding; release with `plc_string_free`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum PlcStatus plc_graph_to_graph6(const struct PlcGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum PlcStatus plc_chromatic_number(const struct PlcGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
enum PlcStatus plc_independence_number(const struct PlcGraph *g, size_t *out);

/**
 * λ_t(G). `opts` may be null for the defaults.
 *
 * # Safety
 * `g` must be a live graph handle, `opts` null or valid, `out` writable.
 */
enum PlcStatus plc_lambda_t(const struct PlcGraph *g,
                            size_t t,
                            const struct PlcOptions *opts,
                            size_t *out);

/**
 * # Safety
 * `g` must be a live graph handle, `opts` null or valid, `out` writable.
 */
enum PlcStatus plc_list_chromatic_number(const struct PlcGraph *g,
                                         const struct PlcOptions *opts,
                                         size_t *out);

/**
 * λ_0, ..., λ_{χ_ℓ} of `g`.
 *
 * # Safety
 * `g` must be a live graph handle, `opts` null or valid, `out` writable.
 */
enum PlcStatus plc_table_new(const struct PlcGraph *g,
                             const struct PlcOptions *opts,
                             struct PlcTable **out);

/**
 * # Safety
 * `t` must come from this library (or be null) and not be used afterwards.
 */
void plc_table_free(struct PlcTable *t);

/**
 * # Safety
 * `tab` must be a live table handle and `out` writable.
 */
enum PlcStatus plc_table_chi_l(const struct PlcTable *tab, size_t *out);

/**
 * λ_t from the table; `n` for t past χ_ℓ.
 *
 * # Safety
 * `tab` must be a live table handle and `out` writable.
 */
enum PlcStatus plc_table_lambda(const struct PlcTable *tab, size_t t, size_t *out);

/**
 * Every verdict for `g` as a JSON document; release with `plc_string_free`.
 *
 * # Safety
 * `g` must be a live graph handle, `opts` null or valid, `out` writable.
 */
enum PlcStatus plc_check_report_json(const struct PlcGraph *g,
                                     const struct PlcOptions *opts,
                                     char **out);

/**
 * # Safety
 * `s` must be a string returned by this library (or null), freed once.
 */
void plc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLCOLOR_H */
