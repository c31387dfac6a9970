#ifndef P3_WALLS_H
#define P3_WALLS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdint.h>

typedef enum P3Status {
  P3_STATUS_OK = 0,
  P3_STATUS_NULL_POINTER = 1,
  P3_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: a character literal, a rational or a flag.
   */
  P3_STATUS_PARSE = 3,
  /**
   * Well-formed input outside an operation's domain.
   */
  P3_STATUS_DOMAIN = 4,
  P3_STATUS_PANIC = 5,
} P3Status;

/**
 * Opaque handle to a Chern character.
 */
typedef struct P3Character P3Character;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `"a,b,c,d"` into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum P3Status p3_character_parse(const char *text, struct P3Character **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `v` must come from this library and not be used afterwards.
 */
void p3_character_free(struct P3Character *v);

/**
 * # Safety
 * `v` must be a live handle; `out` must be writable.
 */
enum P3Status p3_character_to_string(const struct P3Character *v, char **out);

/**
 * # Safety
 * `v` must be a live handle; `out` must be writable.
 */
enum P3Status p3_character_dual(const struct P3Character *v, struct P3Character **out);

/**
 * `v ⊗ O(k)`.
 *
 * # Safety
 * `v` must be a live handle; `out` must be writable.
 */
enum P3Status p3_character_tensor_line(const struct P3Character *v,
                                       int64_t k,
                                       struct P3Character **out);

/**
 * Slope of `v`: `kind` is `"mu"`, `"nu"` or `"lambda"`. `beta` and `alpha2`
 * are rational literals, ignored for `mu`; `s` is only read for `lambda`.
 * Writes `{"value": ...}`.
 *
 * # Safety
 * String arguments must be NUL-terminated or null; `v` must be a live
 * handle; `out_json` must be writable.
 */
enum P3Status p3_slope(const struct P3Character *v,
                       const char *kind,
                       const char *beta,
                       const char *alpha2,
                       const char *s,
                       char **out_json);

/**
 * Numerical ν-wall of `v` and `w`.
 *
 * # Safety
 * `v`, `w` must be live handles; `out_json` must be writable.
 */
enum P3Status p3_tilt_wall(const struct P3Character *v,
                           const struct P3Character *w,
                           char **out_json);

/**
 * Positive `a` on the λ-wall of `v`, `w` at fixed `beta`.
 *
 * # Safety
 * `s`, `beta` must be NUL-terminated; `v`, `w` live handles; `out_json`
 * writable.
 */
enum P3Status p3_bridgeland_wall_section(const struct P3Character *v,
                                         const struct P3Character *w,
                                         const char *s,
                                         const char *beta,
                                         char **out_json);

/**
 * Eventual sign of `λ(v) − λ(u)` along `a = c·β²`; `side` is `"left"` or
 * `"right"`, `cgamma` may be null for 0.
 *
 * # Safety
 * String arguments NUL-terminated (`cgamma` may be null); `v`, `u` live
 * handles; `out_json` writable.
 */
enum P3Status p3_asym_compare(const struct P3Character *v,
                              const struct P3Character *u,
                              const char *side,
                              const char *cgamma,
                              const char *s,
                              char **out_json);

/**
 * Runs the command line with `argv` (without a program name). Returns the
 * process exit code (0, 1 or 2), or −1 if an argument is null or not UTF-8,
 * or a panic occurred. Either output pointer may be null.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings.
 */
int p3_run(int argc, const char *const *argv, char **out_stdout, char **out_stderr);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void p3_string_free(char *s);

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread; do not free.
 */
const char *p3_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* P3_WALLS_H */
