#ifndef FCMT_H
#define FCMT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FcmtStatus {
  FCMT_STATUS_OK = 0,
  /**
   * A law failed; the report or output is still produced where possible
   */
  FCMT_STATUS_LAW_VIOLATION = 1,
  FCMT_STATUS_MALFORMED = 2,
  FCMT_STATUS_PARSE = 3,
  FCMT_STATUS_IO = 4,
  FCMT_STATUS_BUDGET_EXCEEDED = 5,
  FCMT_STATUS_UNSUPPORTED = 6,
  FCMT_STATUS_NULL_ARGUMENT = 7,
  FCMT_STATUS_INVALID_UTF8 = 8,
  FCMT_STATUS_PANIC = 9,
} FcmtStatus;

/**
 * A law report, with its strings kept alive for the accessors.
 */
typedef struct FcmtReport FcmtReport;

/**
 * A parsed structure file.
 */
typedef struct FcmtStructure FcmtStructure;

typedef struct FcmtCheckConfig {
  size_t max_arity;
  size_t max_nesting;
  size_t max_cells_per_frame;
  uint64_t seed;
  bool parallel;
} FcmtCheckConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default bounds: arity 3, nesting 2, 10000 cells per frame, seed 0,
 * sequential.
 */
struct FcmtCheckConfig fcmt_check_config_default(void);

/**
 * The message of the last failed call on this thread, or "" after a
 * successful one. Valid until the next call.
 */
const char *fcmt_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fcmt_string_free(char *s);

/**
 * Parses a structure file held in `text`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcmtStatus fcmt_structure_parse(const char *text, struct FcmtStructure **out);

/**
 * Reads and parses the structure file at `path`.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcmtStatus fcmt_structure_read(const char *path, struct FcmtStructure **out);

/**
 * The demo structure `name`; `seed` only affects `random-subsets`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcmtStatus fcmt_structure_demo(const char *name, uint64_t seed, struct FcmtStructure **out);

/**
 * Serializes a structure in the file format.
 *
 * # Safety
 * `s` must be a live structure handle and `out` a valid pointer.
 */
enum FcmtStatus fcmt_structure_to_json(const struct FcmtStructure *s, char **out);

/**
 * The kind tag of a structure, as a static string; null for a null handle.
 *
 * # Safety
 * `s` must be null or a live structure handle.
 */
const char *fcmt_structure_kind(const struct FcmtStructure *s);

/**
 * # Safety
 * `s` must be null or a live structure handle.
 */
void fcmt_structure_free(struct FcmtStructure *s);

/**
 * Checks the laws of `s`. A null `config` means the defaults. Returns
 * `LawViolation` when the report fails; the report is produced either way.
 *
 * # Safety
 * `s` must be a live structure handle, `config` null or valid, and `out` a
 * valid pointer.
 */
enum FcmtStatus fcmt_check(const struct FcmtStructure *s,
                           const struct FcmtCheckConfig *config,
                           struct FcmtReport **out);

/**
 * The Bim construction on `s`, listed as JSON.
 *
 * # Safety
 * As for [`fcmt_check`], with `out` receiving a string.
 */
enum FcmtStatus fcmt_bim(const struct FcmtStructure *s,
                         const struct FcmtCheckConfig *config,
                         char **out);

/**
 * Transfers an enriched category or subset family to Bim, writing the
 * result as JSON and its law report as a handle. Either output may be null.
 * A failing source gives `LawViolation` and no outputs.
 *
 * # Safety
 * As for [`fcmt_check`]; `json` and `report` may each be null.
 */
enum FcmtStatus fcmt_derive_bim(const struct FcmtStructure *s,
                                const struct FcmtCheckConfig *config,
                                char **json,
                                struct FcmtReport **report);

/**
 * # Safety
 * `r` must be a live report handle.
 */
bool fcmt_report_pass(const struct FcmtReport *r);

/**
 * Total number of law instances checked.
 *
 * # Safety
 * `r` must be null or a live report handle.
 */
uint64_t fcmt_report_checked(const struct FcmtReport *r);

/**
 * # Safety
 * `r` must be null or a live report handle.
 */
size_t fcmt_report_violation_count(const struct FcmtReport *r);

/**
 * The law of violation `i`, valid while the report lives; null when out of
 * range.
 *
 * # Safety
 * `r` must be null or a live report handle.
 */
const char *fcmt_report_violation_law(const struct FcmtReport *r, size_t i);

/**
 * The witness of violation `i`, valid while the report lives; null when out
 * of range.
 *
 * # Safety
 * `r` must be null or a live report handle.
 */
const char *fcmt_report_violation_witness(const struct FcmtReport *r, size_t i);

/**
 * The report as JSON.
 *
 * # Safety
 * `r` must be a live report handle and `out` a valid pointer.
 */
enum FcmtStatus fcmt_report_to_json(const struct FcmtReport *r, char **out);

/**
 * # Safety
 * `r` must be null or a live report handle.
 */
void fcmt_report_free(struct FcmtReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FCMT_H */
