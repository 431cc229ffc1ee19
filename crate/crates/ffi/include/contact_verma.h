#ifndef CONTACT_VERMA_H
#define CONTACT_VERMA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum CvStatus {
  CV_STATUS_OK = 0,
  CV_STATUS_NULL_POINTER = 1,
  CV_STATUS_INVALID_ARGUMENT = 2,
  CV_STATUS_INVALID_MODULE = 3,
  /**
   * A map is undefined on the requested module.
   */
  CV_STATUS_INVALID_MORPHISM = 4,
  /**
   * Two consecutive maps did not compose to zero.
   */
  CV_STATUS_NONZERO_COMPOSITION = 5,
  /**
   * A truncated character did not stabilize in the given window.
   */
  CV_STATUS_NOT_STABILIZED = 6,
  /**
   * A value does not fit the C return type.
   */
  CV_STATUS_OVERFLOW = 7,
  CV_STATUS_PANIC = 8,
} CvStatus;

/**
 * Opaque handle to a truncated character.
 */
typedef struct CvCharacter CvCharacter;

/**
 * Opaque handle to a module `M_X^{m,n}`.
 */
typedef struct CvModule CvModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *cv_status_message(enum CvStatus status);

/**
 * Creates `M_X^{m,n}`; `quadrant_letter` is one of `'A'`..`'D'`.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum CvStatus cv_module_new(char quadrant_letter, int32_t m, int32_t n, struct CvModule **out);

/**
 * Parses `X:m,n`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` valid for a pointer write.
 */
enum CvStatus cv_module_parse(const char *text, struct CvModule **out);

/**
 * Releases a module; null is ignored.
 *
 * # Safety
 * `m` must come from `cv_module_new` or `cv_module_parse` and not be freed twice.
 */
void cv_module_free(struct CvModule *m);

/**
 * Dimension of the weight module `V_X^{m,n}`.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_module_dim_v(const struct CvModule *m, size_t *out);

/**
 * Dimension of the degree-`degree` piece of the Verma module.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_module_graded_dim(const struct CvModule *m, uint32_t degree, size_t *out);

/**
 * Homology of the complex at `m` in degree `degree`.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_homology_dim(const struct CvModule *m, uint32_t degree, size_t *out);

/**
 * Number of independent singular vectors in degree `degree`; highest-weight
 * ones only when `highest_weight` is true.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_singular_count(const struct CvModule *m,
                                uint32_t degree,
                                bool highest_weight,
                                size_t *out);

/**
 * Truncated character of the Verma module at `m`, or of its irreducible
 * quotient when `irreducible` is true.
 *
 * # Safety
 * `m` must be a live handle and `out` valid for a pointer write.
 */
enum CvStatus cv_character_new(const struct CvModule *m,
                               bool irreducible,
                               uint32_t max_degree,
                               struct CvCharacter **out);

/**
 * Releases a character; null is ignored.
 *
 * # Safety
 * `ch` must come from `cv_character_new` and not be freed twice.
 */
void cv_character_free(struct CvCharacter *ch);

/**
 * Number of stored coefficients.
 *
 * # Safety
 * `ch` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_character_len(const struct CvCharacter *ch, size_t *out);

/**
 * Coefficient of `s^{leading + degree}`.
 *
 * # Safety
 * `ch` must be a live handle and `out` valid for a write.
 */
enum CvStatus cv_character_coeff(const struct CvCharacter *ch, size_t degree, int64_t *out);

/**
 * Leading exponent as a reduced fraction `num / den`, `den > 0`.
 *
 * # Safety
 * `ch` must be a live handle; `num` and `den` valid for writes.
 */
enum CvStatus cv_character_leading_exponent(const struct CvCharacter *ch,
                                            int64_t *num,
                                            int64_t *den);

/**
 * Size read off the character as a reduced fraction `num / den`; returns
 * `NOT_STABILIZED` when the window is too short.
 *
 * # Safety
 * `ch` must be a live handle; `num` and `den` valid for writes.
 */
enum CvStatus cv_character_size(const struct CvCharacter *ch, int64_t *num, int64_t *den);

/**
 * Closed-form size of the irreducible module of type `quadrant` with `F(m, n, ·, ·)`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum CvStatus cv_size_formula(char quadrant_letter, uint32_t m, uint32_t n, int64_t *out);

/**
 * Size of the same module computed from its character up to `window`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum CvStatus cv_size_oracle(char quadrant_letter,
                             uint32_t m,
                             uint32_t n,
                             uint32_t window,
                             int64_t *out);

/**
 * Library version as a static string.
 */
const char *cv_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTACT_VERMA_H */
