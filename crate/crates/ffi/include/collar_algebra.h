#ifndef COLLAR_ALGEBRA_H
#define COLLAR_ALGEBRA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CagStatus {
  CAG_STATUS_OK = 0,
  CAG_STATUS_NULL_POINTER = 1,
  CAG_STATUS_INVALID_UTF8 = 2,
  CAG_STATUS_INVALID_INPUT = 3,
  CAG_STATUS_VERIFICATION_FAILED = 4,
  CAG_STATUS_PANIC = 5,
} CagStatus;

/*
 An element of Thompson's group V.
 */
typedef struct CagTreePair CagTreePair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *cag_last_error(void);

/*
 Frees a string returned by this library.

 # Safety
 `s` must come from this library and not be freed twice.
 */
void cag_string_free(char *s);

/*
 Parses `{"domain": "(*,*)", "range": "(*,*)", "perm": [1, 0]}`.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
enum CagStatus cag_tree_pair_from_json(const char *json, struct CagTreePair **out);

/*
 The torsion element of prime order `p`.

 # Safety
 `out` must be writable.
 */
enum CagStatus cag_tree_pair_element_of_order(uint64_t p, struct CagTreePair **out);

/*
 `a ∘ b`: apply `b`, then `a`.

 # Safety
 `a` and `b` must be live handles; `out` must be writable.
 */
enum CagStatus cag_tree_pair_multiply(const struct CagTreePair *a,
                                      const struct CagTreePair *b,
                                      struct CagTreePair **out);

/*
 # Safety
 `a` must be a live handle; `out` must be writable.
 */
enum CagStatus cag_tree_pair_inverse(const struct CagTreePair *a, struct CagTreePair **out);

/*
 Writes the order of `a`, or 0 when it exceeds `cap`.

 # Safety
 `a` must be a live handle; `order` must be writable.
 */
enum CagStatus cag_tree_pair_order(const struct CagTreePair *a, size_t cap, size_t *order);

/*
 Writes 1 if `a` and `b` are the same element, else 0.

 # Safety
 `a` and `b` must be live handles; `equal` must be writable.
 */
enum CagStatus cag_tree_pair_equal(const struct CagTreePair *a,
                                   const struct CagTreePair *b,
                                   bool *equal);

/*
 JSON form of `a`; free with [`cag_string_free`].

 # Safety
 `a` must be a live handle; `out` must be writable.
 */
enum CagStatus cag_tree_pair_to_json(const struct CagTreePair *a, char **out);

/*
 # Safety
 `a` must come from this library and not be freed twice.
 */
void cag_tree_pair_free(struct CagTreePair *a);

/*
 Whether the tower levels for two comma-separated prime sequences are
 isomorphic.

 # Safety
 `a` and `b` must be nul-terminated strings; `iso` must be writable.
 */
enum CagStatus cag_iso_decide(const char *a, const char *b, bool *iso);

/*
 Whether the tower level for `a` maps onto the one for `b`.

 # Safety
 `a` and `b` must be nul-terminated strings; `epi` must be writable.
 */
enum CagStatus cag_epi_decide(const char *a, const char *b, bool *epi);

/*
 Whether the inverse sequences through `a` and `b` are distinct; when they
 are, `witness` receives the separating prime, otherwise 0.

 # Safety
 `a` and `b` must be nul-terminated strings; the outputs must be writable.
 */
enum CagStatus cag_pro_distinct(const char *a, const char *b, bool *distinct, uint64_t *witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COLLAR_ALGEBRA_H */
