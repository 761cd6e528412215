#ifndef FLAGCALC_H
#define FLAGCALC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FlagcalcStatus {
  FLAGCALC_STATUS_OK = 0,
  FLAGCALC_STATUS_INVALID_ARGUMENT = 1,
  FLAGCALC_STATUS_UNSUPPORTED = 2,
  FLAGCALC_STATUS_PARSE = 3,
  FLAGCALC_STATUS_NOT_IN_WP = 4,
  FLAGCALC_STATUS_CAP = 5,
  FLAGCALC_STATUS_INTERNAL = 6,
  FLAGCALC_STATUS_NULL_POINTER = 7,
} FlagcalcStatus;

// Opaque handle to a flag variety G/P.
typedef struct FlagcalcVariety FlagcalcVariety;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds G/P for `group` (e.g. "C3") with the crossed simple roots
// `crossed[0..n_crossed]` (1-based, Bourbaki order).
//
// # Safety
// `group` must be a NUL-terminated string, `crossed` must point to
// `n_crossed` readable values, and `out` must be writable.
enum FlagcalcStatus flagcalc_variety_new(const char *group,
                                         const size_t *crossed,
                                         size_t n_crossed,
                                         struct FlagcalcVariety **out);

// # Safety
// `h` must be null or a handle from [`flagcalc_variety_new`] not yet freed.
void flagcalc_variety_free(struct FlagcalcVariety *h);

// Number of Schubert classes, |W^P|. Zero for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t flagcalc_variety_len(const struct FlagcalcVariety *h);

// Complex dimension of G/P. Zero for a null handle.
//
// # Safety
// `h` must be null or a live handle.
size_t flagcalc_variety_dimension(const struct FlagcalcVariety *h);

// Looks up the class index of a reduced word such as "1,3,2".
//
// # Safety
// `h` must be a live handle, `word` NUL-terminated, `out` writable.
enum FlagcalcStatus flagcalc_find_word(const struct FlagcalcVariety *h,
                                       const char *word,
                                       size_t *out);

// The reduced word of class `index`; "e" for the identity.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum FlagcalcStatus flagcalc_word(const struct FlagcalcVariety *h, size_t index, char **out);

// Coefficient of the point class in the product of the classes
// `indices[0..n]`, using the deformed product when `deformed` is set.
//
// # Safety
// `h` must be a live handle, `indices` must point to `n` readable values,
// and `out` must be writable.
enum FlagcalcStatus flagcalc_intersection_number(const struct FlagcalcVariety *h,
                                                 const size_t *indices,
                                                 size_t n,
                                                 bool deformed,
                                                 char **out);

// dim of the Levi invariants of V(nχ_{w_1}) ⊗ … ⊗ V(nχ_{w_s}) for the
// classes `indices[0..n_indices]`.
//
// # Safety
// `h` must be a live handle, `indices` must point to `n_indices` readable
// values, and `out` must be writable.
enum FlagcalcStatus flagcalc_invariant_dimension(const struct FlagcalcVariety *h,
                                                 const size_t *indices,
                                                 size_t n_indices,
                                                 uint32_t n,
                                                 char **out);

// Runs the s-fold sweep on `jobs` threads (at least one) and returns the
// JSON report. The tuple cap is read from FLAGCALC_TUPLE_CAP.
//
// # Safety
// `h` must be a live handle and `out` writable.
enum FlagcalcStatus flagcalc_verify_json(const struct FlagcalcVariety *h,
                                         size_t s,
                                         uint32_t n_max,
                                         size_t jobs,
                                         char **out);

// Message of the last failed call on this thread, or null. The pointer stays
// valid until the next flagcalc call on the same thread.
const char *flagcalc_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void flagcalc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLAGCALC_H */
