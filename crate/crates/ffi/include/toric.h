#ifndef TORIC_H
#define TORIC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ToricStatus {
  TORIC_STATUS_OK = 0,
  TORIC_STATUS_NULL_POINTER = 1,
  TORIC_STATUS_INVALID_ARGUMENT = 2,
  TORIC_STATUS_PARSE = 3,
  /**
   * The computation hit its bound; the answer is unknown.
   */
  TORIC_STATUS_UNKNOWN = 4,
  TORIC_STATUS_INTERNAL = 5,
} ToricStatus;

typedef struct ToricCayley ToricCayley;

typedef struct ToricCoxeter ToricCoxeter;

typedef struct ToricPresentation ToricPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *toric_last_error(void);

void toric_string_free(char *s);

/**
 * Builds a presentation from a family tag (`toric`, `coxeter-triangle`, …)
 * and its integer parameters.
 */
enum ToricStatus toric_presentation_new(const char *family,
                                        const uint32_t *params,
                                        size_t len,
                                        struct ToricPresentation **out);

/**
 * Parses the text format (`gens:` / `rel:` lines).
 */
enum ToricStatus toric_presentation_parse(const char *text, struct ToricPresentation **out);

enum ToricStatus toric_presentation_to_string(const struct ToricPresentation *p, char **out);

void toric_presentation_free(struct ToricPresentation *p);

/**
 * Enumerates the group of `p`. Returns `Unknown` if the enumeration
 * exceeds `max_cosets`.
 */
enum ToricStatus toric_cayley_new(const struct ToricPresentation *p,
                                  size_t max_cosets,
                                  struct ToricCayley **out);

size_t toric_cayley_order(const struct ToricCayley *c);

/**
 * Writes 1 to `out` if `word` is trivial in the group, 0 otherwise.
 */
enum ToricStatus toric_cayley_is_identity(const struct ToricCayley *c,
                                          const char *word,
                                          int32_t *out);

void toric_cayley_free(struct ToricCayley *c);

/**
 * The triangle Coxeter group with `m(r1,r2) = k`, `m(r2,r3) = n`,
 * `m(r3,r1) = m`; a label of 0 means infinity.
 */
enum ToricStatus toric_coxeter_new(uint32_t k, uint32_t n, uint32_t m, struct ToricCoxeter **out);

/**
 * ShortLex normal form of a word over `r1 r2 r3`.
 */
enum ToricStatus toric_coxeter_nf(const struct ToricCoxeter *c, const char *word, char **out);

void toric_coxeter_free(struct ToricCoxeter *c);

/**
 * Garside normal form in `<x, y | x^n = y^m>`, rendered as
 * `D^p · x^i | y^j | ...`.
 */
enum ToricStatus toric_garside_nf(uint32_t n, uint32_t m, const char *word, char **out);

/**
 * Classification of `W(k, n, m)` as a JSON object.
 */
enum ToricStatus toric_classify_json(uint32_t k,
                                     uint32_t n,
                                     uint32_t m,
                                     size_t max_cosets,
                                     char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_H */
