#ifndef SAS_LAYOUT_H
#define SAS_LAYOUT_H

/* Generated by cbindgen from the sas-layout-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SasStatus {
  /**
   * Success; all `out` parameters were written.
   */
  SAS_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  SAS_STATUS_NULL_POINTER = 1,
  /**
   * An argument value lies outside its documented domain.
   */
  SAS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The requested combination is not defined: wrong coupling for a
   * variant, a style or size a placement does not exist for.
   */
  SAS_STATUS_UNSUPPORTED = 3,
  /**
   * A drawing document is malformed or structurally inconsistent.
   */
  SAS_STATUS_BAD_DOCUMENT = 4,
  /**
   * The drawing's geometry violates an embedding rule.
   */
  SAS_STATUS_GEOMETRY = 5,
  /**
   * A string argument was not valid UTF-8.
   */
  SAS_STATUS_UTF8 = 6,
  /**
   * An internal panic was caught at the boundary.
   */
  SAS_STATUS_PANIC = 7,
} SasStatus;

/**
 * Where light enters and leaves the chip.
 */
typedef enum SasCoupling {
  /**
   * Ports couple through the chip surface and may sit anywhere.
   */
  SAS_COUPLING_SURFACE = 0,
  /**
   * Ports couple through the chip facets, on the boundary of a convex
   * region.
   */
  SAS_COUPLING_FACET = 1,
} SasCoupling;

/**
 * Switch implementation style.
 */
typedef enum SasStyle {
  /**
   * Single-point switches; every port is one vertex.
   */
  SAS_STYLE_LUMPED_ELEMENT = 0,
  /**
   * Binary selector trees; every port fans out through split vertices.
   */
  SAS_STYLE_BINARY_TREE = 1,
} SasStyle;

/**
 * Which drawing `sas_drawing_build` synthesizes.
 */
typedef enum SasVariant {
  /**
   * Unoptimized drawing: two port columns (surface) or clustered ports
   * (facet).
   */
  SAS_VARIANT_BASIC = 0,
  /**
   * Crossing-minimizing planar drawing (surface only).
   */
  SAS_VARIANT_ZARANKIEWICZ = 1,
  /**
   * Largest crossing-free spanning subgraph.
   */
  SAS_VARIANT_SUBGRAPH = 2,
  /**
   * Crossing-free hybrid drawing with waveguide overpasses.
   */
  SAS_VARIANT_WOP = 3,
  /**
   * Lumped-element hybrid routed through boundary chord stubs (surface
   * only).
   */
  SAS_VARIANT_CHORD_STUB_WOP = 4,
  /**
   * Ports interleaved along two boundary axes (facet only).
   */
  SAS_VARIANT_AXES = 5,
  /**
   * Ports interleaved around the boundary (facet only).
   */
  SAS_VARIANT_INTERLEAVED = 6,
  /**
   * Ports clustered by party around the boundary (facet only).
   */
  SAS_VARIANT_CLUSTERED = 7,
  /**
   * 4 x 4 clustered drawing with detour reroutes (facet only).
   */
  SAS_VARIANT_REROUTED_CLUSTERED = 8,
  /**
   * 4 x 4 interleaved drawing with detour reroutes (facet only).
   */
  SAS_VARIANT_REROUTED_INTERLEAVED = 9,
} SasVariant;

/**
 * Opaque drawing handle. Created by `sas_drawing_build` or
 * `sas_drawing_parse_json`; released by `sas_drawing_free`.
 */
typedef struct SasDrawing SasDrawing;

/**
 * Closed-form crossing and overpass counts for one instance. Optional
 * fields pair a value with a `has_` flag; when the flag is false the
 * value is zero and meaningless.
 */
typedef struct SasFormulas {
  /**
   * Crossings of the unoptimized drawing.
   */
  uint64_t eta_basic;
  /**
   * Crossings of the optimized drawing: the two-axis count for surface
   * coupling, the interleaved count for facet coupling.
   */
  uint64_t eta_optimized;
  /**
   * False only for facet instances whose selector count is not a
   * multiple of the switch count.
   */
  bool has_eta_optimized;
  /**
   * Worst crossings along a single path of the optimized drawing.
   */
  uint64_t xi;
  /**
   * Overpasses of the lumped-element hybrid placement.
   */
  uint64_t mu_le;
  /**
   * Overpasses of the binary-tree hybrid placement.
   */
  uint64_t mu_bt;
  /**
   * False when the binary-tree style does not exist at this size.
   */
  bool has_mu_bt;
} SasFormulas;

/**
 * Exact measurements of one drawing, from the geometric oracle.
 */
typedef struct SasDrawingReport {
  /**
   * Crossings among planar routes and overpass stubs.
   */
  uint64_t planar_crossings;
  /**
   * Largest number of planar crossings carried by a single edge.
   */
  uint64_t per_edge_max;
  /**
   * Crossings among overpass projections only.
   */
  uint64_t projection_crossings;
  /**
   * Edges realized as overpasses.
   */
  uint64_t overpass_count;
  /**
   * Worst planar crossings along a single input-to-output path.
   */
  uint64_t worst_path_crossings;
  /**
   * Worst overpass count along a single input-to-output path.
   */
  uint32_t worst_path_overpasses;
  /**
   * Paths present in the connection map.
   */
  uint64_t connection_count;
} SasDrawingReport;

/**
 * Component totals for an n x n fabric built from binary selector trees.
 */
typedef struct SasDeviceStats {
  /**
   * Mach-Zehnder interferometers across all 2n selector trees.
   */
  uint64_t mzi_count;
  /**
   * Phase shifters: two arms per interferometer.
   */
  uint64_t phase_shifter_count;
  /**
   * Shifters that must be driven to hold one routing state.
   */
  uint64_t active_shifters_per_state;
  /**
   * Distinct full-fabric routing states, saturating at `UINT64_MAX`.
   */
  uint64_t switch_state_count;
  /**
   * True when the state count saturated.
   */
  bool switch_state_overflowed;
} SasDeviceStats;

/**
 * Accumulated dB penalties along one light path.
 */
typedef struct SasPathPenalty {
  /**
   * Total insertion loss in dB.
   */
  double total_il_db;
  /**
   * Worst-case crosstalk leaked into the path, in dB relative to the
   * signal; `-INFINITY` when the path crosses nothing.
   */
  double worst_case_xt_db;
} SasPathPenalty;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on the calling thread, or NULL when
 * no call has failed yet. The pointer stays valid until the next failing
 * call on the same thread; do not free it.
 */
const char *sas_last_error_message(void);

/**
 * Writes the closed-form counts for an m x n surface-coupled instance.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one `SasFormulas`.
 */
enum SasStatus sas_surface_formulas(uint32_t m, uint32_t n, struct SasFormulas *out);

/**
 * Writes the closed-form counts for an m x n facet-coupled instance.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one `SasFormulas`.
 */
enum SasStatus sas_facet_formulas(uint32_t m, uint32_t n, struct SasFormulas *out);

/**
 * Synthesizes a drawing and returns an owned handle through `out`.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one pointer;
 * `coupling`, `style`, and `variant` must be values declared in this
 * header.
 */
enum SasStatus sas_drawing_build(enum SasCoupling coupling,
                                 enum SasStyle style,
                                 enum SasVariant variant,
                                 uint32_t m,
                                 uint32_t n,
                                 struct SasDrawing **out);

/**
 * Parses a drawing document (the JSON schema emitted by
 * `sas_drawing_export_json`) and returns an owned handle through `out`.
 * The document is revalidated by the full geometric screen.
 *
 * # Safety
 * `text` must be NULL or a NUL-terminated string; `out` must be NULL or
 * point to writable memory for one pointer.
 */
enum SasStatus sas_drawing_parse_json(const char *text, struct SasDrawing **out);

/**
 * Serializes a drawing into its JSON document, with exact rational
 * coordinates. Deterministic for a given drawing.
 *
 * # Safety
 * `drawing` must be NULL or a live handle from this library; `out` must
 * be NULL or point to writable memory for one pointer.
 */
enum SasStatus sas_drawing_export_json(const struct SasDrawing *drawing, char **out);

/**
 * Renders a drawing as SVG at the given total width (at least 64 px),
 * with overpass projections dashed and highlighted.
 *
 * # Safety
 * `drawing` must be NULL or a live handle from this library; `out` must
 * be NULL or point to writable memory for one pointer.
 */
enum SasStatus sas_drawing_render_svg(const struct SasDrawing *drawing,
                                      uint32_t width_px,
                                      char **out);

/**
 * Measures a drawing with the exact geometric oracle and writes the
 * totals through `out`.
 *
 * # Safety
 * `drawing` must be NULL or a live handle from this library; `out` must
 * be NULL or point to writable memory for one `SasDrawingReport`.
 */
enum SasStatus sas_drawing_report(const struct SasDrawing *drawing, struct SasDrawingReport *out);

/**
 * Checks every closed form against the exact geometric oracle for one
 * instance and returns the full report as JSON. Known formula-versus-
 * geometry discrepancies are whitelisted inside the report.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one pointer.
 */
enum SasStatus sas_verify_instance_json(enum SasCoupling coupling,
                                        enum SasStyle style,
                                        uint32_t m,
                                        uint32_t n,
                                        char **out);

/**
 * Writes component totals for an n x n fabric built from binary selector
 * trees.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one
 * `SasDeviceStats`.
 */
enum SasStatus sas_device_stats(uint32_t n, struct SasDeviceStats *out);

/**
 * Prices a path's crossings in dB. Insertion loss per crossing must be
 * nonnegative and crosstalk per crossing nonpositive; `incoherent` sums
 * crosstalk in power rather than amplitude.
 *
 * # Safety
 * `out` must be NULL or point to writable memory for one
 * `SasPathPenalty`.
 */
enum SasStatus sas_path_penalty(uint64_t crossings,
                                double il_per_crossing_db,
                                double xt_per_crossing_db,
                                bool incoherent,
                                struct SasPathPenalty *out);

/**
 * Releases a drawing handle. NULL is accepted and ignored.
 *
 * # Safety
 * `drawing` must be NULL or a handle returned by this library that has
 * not been freed already.
 */
void sas_drawing_free(struct SasDrawing *drawing);

/**
 * Releases a string returned by this library. NULL is accepted and
 * ignored.
 *
 * # Safety
 * `text` must be NULL or a string returned by this library that has not
 * been freed already.
 */
void sas_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SAS_LAYOUT_H */
