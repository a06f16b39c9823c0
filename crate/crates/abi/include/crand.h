/*
 * crand.h - C interface of libcrand.
 *
 * The seed array passed to crand_fill / crand_fill_unit is the generator's
 * full internal state (crand_state_words(kind) words). It is updated in place
 * on success, so repeated calls continue the same stream. Build an initial
 * state from user seed words with crand_seed_init.
 *
 * Outputs of 32-bit generators are zero-extended into the uint64_t buffer.
 * Normalized outputs lie in [0, 1).
 *
 * All functions are reentrant and only touch caller-provided buffers. On any
 * non-OK status no buffer is written.
 */
#ifndef CRAND_H
#define CRAND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crand_kind {
    CRAND_XORSHIFT32 = 0,
    CRAND_XORSHIFT64 = 1,
    CRAND_XORSHIFT128 = 2,
    CRAND_XORSHIFT128PLUS = 3,
    CRAND_PCG32 = 4,
    CRAND_KISS = 5,
    CRAND_SPLITMIX64 = 6,
    CRAND_MT19937_64 = 7
} crand_kind;

typedef enum crand_status {
    CRAND_OK = 0,
    CRAND_BAD_KIND = 1,
    CRAND_BAD_SEED = 2,
    CRAND_NULL_ARGUMENT = 3
} crand_status;

uint32_t crand_kind_count(void);
size_t crand_seed_words(uint32_t kind);
size_t crand_state_words(uint32_t kind);

int32_t crand_seed_init(uint32_t kind, const uint64_t *seed, size_t seed_len,
                        uint64_t *state, size_t state_len);

int32_t crand_fill(uint32_t kind, uint64_t *seed, size_t seed_len,
                   uint64_t *out, size_t n);
int32_t crand_fill_unit(uint32_t kind, uint64_t *seed, size_t seed_len,
                        double *out, size_t n);

/* boundary smoke tests */
uint64_t uint64_var(uint64_t var);
void change_var(double *var);
double avg_value(int64_t array[], size_t len);

#ifdef __cplusplus
}
#endif

#endif /* CRAND_H */
