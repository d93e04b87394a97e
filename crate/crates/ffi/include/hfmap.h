#ifndef HFMAP_H
#define HFMAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  HFMAP_STATUS_OK = 0,
  HFMAP_STATUS_NULL_POINTER = 1,
  HFMAP_STATUS_INVALID_PARAMS = 2,
  HFMAP_STATUS_GROUP_TOO_LARGE = 3,
  HFMAP_STATUS_EVEN_MODULUS = 4,
  HFMAP_STATUS_PARSE = 5,
  HFMAP_STATUS_INVALID_PAIRING = 6,
  HFMAP_STATUS_OUT_OF_RANGE = 7,
  HFMAP_STATUS_FAILED = 8,
  HFMAP_STATUS_PANIC = 99,
} HfmapStatus;

typedef enum {
  HFMAP_MODEL_DISK = 0,
  HFMAP_MODEL_HALF_PLANE = 1,
} HfmapModel;

typedef enum {
  HFMAP_FORMAT_SVG = 0,
  HFMAP_FORMAT_DOT = 1,
} HfmapFormat;

typedef struct HfmapGroup HfmapGroup;

typedef struct HfmapMap HfmapMap;

typedef struct HfmapPairing HfmapPairing;

/**
 * Counts describing a quotient map.
 */
typedef struct {
  uint32_t q;
  uint32_t n;
  size_t darts;
  size_t vertices;
  size_t edges;
  size_t faces;
  int64_t genus;
  /**
   * 0 when vertices have different valencies.
   */
  size_t vertex_valency;
  /**
   * 0 when faces have different sizes.
   */
  size_t face_size;
} HfmapInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty after a success.
 * The pointer stays valid until the next call into this library.
 */
const char *hfmap_last_error(void);

/**
 * NUL-terminated crate version; static storage.
 */
const char *hfmap_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hfmap_string_free(char *s);

/**
 * `|H_q : H_q(n)|` from the closed formula.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_parson_index(uint32_t q, uint32_t n, uint64_t *out);

/**
 * Enumerates `H_q / H_q(n)`; `max_group = 0` uses the default bound.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_group_new(uint32_t q, uint32_t n, size_t max_group, HfmapGroup **out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_group_order(const HfmapGroup *g, size_t *out);

/**
 * # Safety
 * `g` must be null or a handle from [`hfmap_group_new`], not yet freed.
 */
void hfmap_group_free(HfmapGroup *g);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_map_new(uint32_t q, uint32_t n, size_t max_group, HfmapMap **out);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_map_invariants(const HfmapMap *m, HfmapInvariants *out);

/**
 * Invariants as a JSON object; free the result with [`hfmap_string_free`].
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_map_to_json(const HfmapMap *m, char **out);

/**
 * # Safety
 * `m` must be null or a handle from [`hfmap_map_new`], not yet freed.
 */
void hfmap_map_free(HfmapMap *m);

/**
 * The published 20-gon pairing.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_pairing_paper(HfmapPairing **out);

/**
 * Parses `i j` lines (1-based sides, `#` comments).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
HfmapStatus hfmap_pairing_parse(const char *text, HfmapPairing **out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_pairing_sides(const HfmapPairing *p, size_t *out);

/**
 * Side paired with `side` (both 1-based).
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_pairing_partner(const HfmapPairing *p, size_t side, size_t *out);

/**
 * Whether side `k` is paired with `k + 3` when `k ≡ 2` and with `k + 9`
 * when `k ≡ 3 (mod 4)`.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_pairing_rule_check(const HfmapPairing *p, bool *out);

/**
 * Genus of the surface obtained by gluing the polygon.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
HfmapStatus hfmap_pairing_genus(const HfmapPairing *p, int64_t *out);

/**
 * Corner classes as indices: `classes[k - 1]` receives the class of corner
 * `k`, numbered from 0 in order of first corner. `len` must be at least the
 * number of sides; the class count goes to `count`.
 *
 * # Safety
 * `p` must be a live handle, `classes` valid for `len` writes and `count` a valid pointer.
 */
HfmapStatus hfmap_pairing_corner_classes(const HfmapPairing *p,
                                         size_t *classes,
                                         size_t len,
                                         size_t *count);

/**
 * # Safety
 * `p` must be null or a pairing handle from this library, not yet freed.
 */
void hfmap_pairing_free(HfmapPairing *p);

/**
 * Universal tessellation SVG; free the result with [`hfmap_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_render_universal(uint32_t q, size_t depth, HfmapModel model, char **out);

/**
 * Coordinate graph of `M_q(n)` as SVG or DOT; free with [`hfmap_string_free`].
 *
 * # Safety
 * `out` must be a valid pointer.
 */
HfmapStatus hfmap_render_quotient(uint32_t q, uint32_t n, HfmapFormat format, char **out);

/**
 * Runs the ten acceptance checks on the built-in data. Returns `Failed`
 * when any check fails; the counts are written either way.
 *
 * # Safety
 * `passed` and `failed` must be valid pointers.
 */
HfmapStatus hfmap_verify_all(uint32_t *passed, uint32_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HFMAP_H */
