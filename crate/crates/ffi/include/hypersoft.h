#ifndef HYPERSOFT_H
#define HYPERSOFT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

// Result of every fallible call.
typedef enum HsStatus {
  HS_STATUS_OK = 0,
  // A required pointer argument was null.
  HS_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  HS_STATUS_INVALID_UTF8 = 2,
  // Input text failed to parse.
  HS_STATUS_PARSE = 3,
  // The arguments were well-formed but rejected (mismatched carriers,
  // unknown parameters, out-of-range scalars).
  HS_STATUS_INVALID = 4,
  // A named section was absent or ambiguous.
  HS_STATUS_NOT_FOUND = 5,
  // The library panicked; this is a bug.
  HS_STATUS_INTERNAL = 6,
} HsStatus;

typedef enum HsMode {
  HS_MODE_STRICT = 0,
  HS_MODE_COMPAT = 1,
} HsMode;

typedef enum HsOp {
  HS_OP_MEET = 0,
  HS_OP_EXTENDED_MEET = 1,
  HS_OP_JOIN = 2,
  HS_OP_RESTRICTED_JOIN = 3,
  HS_OP_AND = 4,
  HS_OP_OR = 5,
  HS_OP_SUM = 6,
  HS_OP_EXTENDED_SUM = 7,
  HS_OP_SCALE = 8,
  HS_OP_NEGATE = 9,
} HsOp;

// A parsed input document.
typedef struct HsDocument HsDocument;

// A bipolar fuzzy soft set.
typedef struct HsSoftSet HsSoftSet;

// A hypervector space.
typedef struct HsSpace HsSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on this thread.
const char *hs_last_error(void);

// Library version as a static string.
const char *hs_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void hs_string_free(char *s);

// Parses text in the section format.
//
// # Safety
// `input` must be a NUL-terminated string; `out` must be writable.
enum HsStatus hs_document_parse(const char *input, struct HsDocument **out);

// # Safety
// `doc` must be null or a handle from [`hs_document_parse`], not yet freed.
void hs_document_free(struct HsDocument *doc);

// Copies out the hvs section `name`, or the only one when `name` is null.
//
// # Safety
// `doc` must be a live handle; `name` null or NUL-terminated; `out` writable.
enum HsStatus hs_document_space(const struct HsDocument *doc,
                                const char *name,
                                struct HsSpace **out);

// Copies out the bfss section `name`, or the only one when `name` is null.
//
// # Safety
// As for [`hs_document_space`].
enum HsStatus hs_document_soft_set(const struct HsDocument *doc,
                                   const char *name,
                                   struct HsSoftSet **out);

// # Safety
// `space` must be null or a live handle.
void hs_space_free(struct HsSpace *space);

// Number of vectors, or 0 for a null handle.
//
// # Safety
// `space` must be null or a live handle.
size_t hs_space_dim(const struct HsSpace *space);

// # Safety
// `set` must be null or a live handle.
void hs_soft_set_free(struct HsSoftSet *set);

// Number of parameters, or 0 for a null handle.
//
// # Safety
// `set` must be null or a live handle.
size_t hs_soft_set_len(const struct HsSoftSet *set);

// Canonical text of `set` as a bfss section called `name`.
//
// # Safety
// `set` live; `name` NUL-terminated; `out` writable.
enum HsStatus hs_soft_set_print(const struct HsSoftSet *set, const char *name, char **out);

// Audits the axioms. Writes the JSON report to `out_json` (if non-null)
// and the overall verdict to `out_passed` (if non-null).
//
// # Safety
// `space` live; output pointers null or writable.
enum HsStatus hs_check_axioms(const struct HsSpace *space,
                              enum HsMode mode,
                              char **out_json,
                              bool *out_passed);

// Checks every parameter of `set` against the subhyperspace conditions.
//
// # Safety
// As for [`hs_check_axioms`].
enum HsStatus hs_check_bfshvs(const struct HsSoftSet *set,
                              const struct HsSpace *space,
                              char **out_json,
                              bool *out_passed);

// Writes whether `f ⊑ g` to `out_subset`.
//
// # Safety
// `f`, `g` live; `out_subset` writable.
enum HsStatus hs_soft_set_subset(const struct HsSoftSet *f,
                                 const struct HsSoftSet *g,
                                 bool *out_subset);

// Applies `op`. Binary operations read `g`; `Sum`, `ExtendedSum`, `Scale`
// and `Negate` read `space`; `Scale` reads `scalar`. Unused pointers may
// be null.
//
// # Safety
// Pointers the operation reads must be live handles; `out` writable.
enum HsStatus hs_soft_set_op(enum HsOp op,
                             const struct HsSoftSet *f,
                             const struct HsSoftSet *g,
                             const struct HsSpace *space,
                             size_t scalar,
                             struct HsSoftSet **out);

// Classifies the map section `map` (or the only one when null) and writes
// the JSON report and whether it is linear.
//
// # Safety
// `doc` live; `map` null or NUL-terminated; outputs null or writable.
enum HsStatus hs_classify_map(const struct HsDocument *doc,
                              const char *map,
                              char **out_json,
                              bool *out_linear);

// Image (`inverse == false`) or preimage of `set` under the map section
// `map` (or the only one when null).
//
// # Safety
// As for [`hs_classify_map`]; `set` live; `out` writable.
enum HsStatus hs_map_apply(const struct HsDocument *doc,
                           const char *map,
                           const struct HsSoftSet *set,
                           bool inverse,
                           struct HsSoftSet **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERSOFT_H */
