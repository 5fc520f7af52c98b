#ifndef MVTOOL_H
#define MVTOOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define MVTOOL_HOLDS 0

#define MVTOOL_COUNTEREXAMPLE 1

#define MVTOOL_INCONCLUSIVE 2

// A required pointer argument was null.
#define MVTOOL_ERR_NULL -1

// A string argument was not UTF-8.
#define MVTOOL_ERR_UTF8 -2

// The library rejected the input (parse error, unknown label, size cap...).
#define MVTOOL_ERR_INVALID -3

// An internal panic was caught at the boundary.
#define MVTOOL_ERR_PANIC -4

// A parsed model with its optional distinguished element.
typedef struct MvtoolModel MvtoolModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a model descriptor. `unit` may be null.
//
// # Safety
// String arguments must be null or valid NUL-terminated strings; `out`
// must be writable.
int32_t mvtool_model_new(const char *descriptor, const char *unit, struct MvtoolModel **out);

// Releases a model; null is ignored.
//
// # Safety
// `model` must come from [`mvtool_model_new`] and not be used afterwards.
void mvtool_model_free(struct MvtoolModel *model);

// The model's descriptor as a newly allocated string.
//
// # Safety
// `model` must be a live handle and `out` writable.
int32_t mvtool_model_name(const struct MvtoolModel *model, char **out);

// Checks a sequent (registry label, `@path` or inline source) at `bound`
// and writes the JSON report to `out`.
//
// # Safety
// `model` must be a live handle, `sequent` a valid string and `out`
// writable.
int32_t mvtool_check(const struct MvtoolModel *model,
                     const char *sequent,
                     uint64_t bound,
                     char **out);

// Decomposes an MV-algebra along comma-separated generators.
//
// # Safety
// String arguments must be valid strings and `out` writable.
int32_t mvtool_decompose(const char *descriptor, const char *gens, uint64_t bound, char **out);

// Runs a round trip. `kind` is one of `group`, `algebra`, `monoid`, `chi`,
// `pairs`, as for the CLI flags.
//
// # Safety
// String arguments must be valid strings and `out` writable.
int32_t mvtool_roundtrip(const char *kind, const char *descriptor, uint64_t bound, char **out);

// Releases a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void mvtool_string_free(char *s);

// The message of the last failed call on this thread, or an empty string.
// Valid until the next call into the library on the same thread.
const char *mvtool_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MVTOOL_H */
