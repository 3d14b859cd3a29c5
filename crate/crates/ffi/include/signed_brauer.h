#ifndef SIGNED_BRAUER_H
#define SIGNED_BRAUER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum SbStatus {
  SB_STATUS_OK = 0,
  SB_STATUS_NULL_POINTER = 1,
  SB_STATUS_INVALID_UTF8 = 2,
  SB_STATUS_PARSE = 3,
  SB_STATUS_INVALID_ARGUMENT = 4,
  SB_STATUS_DEGREE_MISMATCH = 5,
  SB_STATUS_TOO_LARGE = 6,
  SB_STATUS_PANIC = 7,
} SbStatus;

typedef enum SbParity {
  SB_PARITY_EVEN = 0,
  SB_PARITY_ODD = 1,
} SbParity;

typedef enum SbRenderFormat {
  SB_RENDER_FORMAT_ASCII = 0,
  SB_RENDER_FORMAT_DOT = 1,
} SbRenderFormat;

// A base and strong generating set for a permutation group.
typedef struct SbBsgs SbBsgs;

// A signed Brauer diagram on `2n` vertices.
typedef struct SbDiagram SbDiagram;

// A permutation of `{1..degree}`.
typedef struct SbPermutation SbPermutation;

// An element of the hyperoctahedral group in window form.
typedef struct SbSignedPermutation SbSignedPermutation;

// Summary of one claim verification.
typedef struct SbReport {
  uint64_t checked;
  uint64_t failures;
  // True when every element was checked, false when sampled.
  bool exhaustive;
} SbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or NULL.
//
// The pointer stays valid until the next failing call on the same thread.
const char *sb_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void sb_string_free(char *s);

// Parses window notation such as `"+2 -1"`.
//
// # Safety
// `window` must be a NUL-terminated string; `out` must be writable.
enum SbStatus sb_signed_parse(const char *window, struct SbSignedPermutation **out);

// # Safety
// `out` must be writable.
enum SbStatus sb_signed_identity(uintptr_t n, struct SbSignedPermutation **out);

// Window notation of `s`; free the result with [`sb_string_free`].
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_format(const struct SbSignedPermutation *s, char **out);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_n(const struct SbSignedPermutation *s, uintptr_t *out);

// Number of negative strands.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_neg_count(const struct SbSignedPermutation *s, uintptr_t *out);

// Product `a * b`, applying `a` first.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum SbStatus sb_signed_mul(const struct SbSignedPermutation *a,
                            const struct SbSignedPermutation *b,
                            struct SbSignedPermutation **out);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_inverse(const struct SbSignedPermutation *s,
                                struct SbSignedPermutation **out);

// Image of `s` in the symmetric group on `2n` points.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_embed(const struct SbSignedPermutation *s, struct SbPermutation **out);

// Preimage of a permutation of `2n` points under the embedding.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SbStatus sb_signed_from_embedded(const struct SbPermutation *p,
                                      struct SbSignedPermutation **out);

// # Safety
// `s` must be NULL or a handle from this library, not yet freed.
void sb_signed_free(struct SbSignedPermutation *s);

// Parses cycle notation such as `"(1 2)(3 4)"` or `"e"` on `degree` points.
//
// # Safety
// `cycles` must be a NUL-terminated string; `out` must be writable.
enum SbStatus sb_perm_parse(const char *cycles, uintptr_t degree, struct SbPermutation **out);

// Canonical cycle notation; free the result with [`sb_string_free`].
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum SbStatus sb_perm_format(const struct SbPermutation *p, char **out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SbStatus sb_perm_degree(const struct SbPermutation *p, uintptr_t *out);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum SbStatus sb_perm_parity(const struct SbPermutation *p, enum SbParity *out);

// Composition applying `a` first, then `b`.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum SbStatus sb_perm_compose(const struct SbPermutation *a,
                              const struct SbPermutation *b,
                              struct SbPermutation **out);

// # Safety
// `p` must be NULL or a handle from this library, not yet freed.
void sb_perm_free(struct SbPermutation *p);

// Parses a diagram line such as `"n=2; 1-2:+; 3-4:-"`.
//
// # Safety
// `line` must be a NUL-terminated string; `out` must be writable.
enum SbStatus sb_diagram_parse(const char *line, struct SbDiagram **out);

// The vertical diagram of a signed permutation.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum SbStatus sb_diagram_from_signed(const struct SbSignedPermutation *s, struct SbDiagram **out);

// Stacks `a` over `b`. The product is `x^exponent` times the diagram
// written to `out`, with the loop counts written separately.
//
// # Safety
// `a` and `b` must be live handles; all out-pointers must be writable.
enum SbStatus sb_diagram_compose(const struct SbDiagram *a,
                                 const struct SbDiagram *b,
                                 struct SbDiagram **out,
                                 uint32_t *positive_loops,
                                 uint32_t *negative_loops);

// One-line text form; free the result with [`sb_string_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum SbStatus sb_diagram_serialize(const struct SbDiagram *d, char **out);

// Multi-line picture; free the result with [`sb_string_free`].
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum SbStatus sb_diagram_render(const struct SbDiagram *d, enum SbRenderFormat format, char **out);

// # Safety
// `d` must be NULL or a handle from this library, not yet freed.
void sb_diagram_free(struct SbDiagram *d);

// Builds a BSGS for the group generated by `count` permutations of `degree`
// points. `generators` may be NULL when `count` is zero.
//
// # Safety
// `generators` must point to `count` live handles; `out` must be writable.
enum SbStatus sb_bsgs_build(uintptr_t degree,
                            const struct SbPermutation *const *generators,
                            uintptr_t count,
                            struct SbBsgs **out);

// BSGS of the embedded hyperoctahedral group on `n` strands, or of its
// even-sign subgroup when `even` is true.
//
// # Safety
// `out` must be writable.
enum SbStatus sb_bsgs_standard(uintptr_t n, bool even, struct SbBsgs **out);

// Group order; fails with `TooLarge` if it does not fit in 64 bits.
//
// # Safety
// `b` must be a live handle; `out` must be writable.
enum SbStatus sb_bsgs_order(const struct SbBsgs *b, uint64_t *out);

// # Safety
// `b` and `p` must be live handles; `out` must be writable.
enum SbStatus sb_bsgs_contains(const struct SbBsgs *b, const struct SbPermutation *p, bool *out);

// # Safety
// `b` must be NULL or a handle from this library, not yet freed.
void sb_bsgs_free(struct SbBsgs *b);

// Verifies one claim, identified by its registry id such as `"thm_3_1"`,
// with default options and `jobs` worker threads.
//
// # Safety
// `claim` must be a NUL-terminated string; `out` must be writable.
enum SbStatus sb_verify(const char *claim, uintptr_t n, uintptr_t jobs, struct SbReport *out);

// 2-adic valuation of `n (n-1) ... (floor(n/2) + 1)`, for `n >= 2`.
//
// # Safety
// `out` must be writable.
enum SbStatus sb_nu2_falling_product(uint64_t n, uint64_t *out);

// Exponent of a Sylow 2-subgroup of a group of order
// `n (n-1) ... (floor(n/2) + 1)`, for `n >= 2`.
//
// # Safety
// `out` must be writable.
enum SbStatus sb_sylow2_exponent(uint64_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIGNED_BRAUER_H */
