/*
 * kzring - exact products in enriched representation and fusion rings of
 * sl_n: structure constants are Hodge polynomials of the rank-(tensor
 * multiplicity) motives attached to the KZ connection, and their
 * conformal-block analogues at a level with a Galois twist.
 *
 * The library is exposed through opaque ring handles and UTF-8 JSON strings.
 * Every function returns a kzr_status; on failure kzr_last_error() carries a
 * message for the calling thread. Strings returned through char** are
 * allocated by the library and must be released with kzr_string_free().
 *
 * Weight lists are written "a,b,c;d,e,f" (semicolon-separated partitions of
 * comma-separated weakly decreasing parts), rationals as "r" or "r/s".
 */
#ifndef KZRING_H
#define KZRING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kzr_ring kzr_ring; /* opaque product context */

typedef enum kzr_status {
    KZR_OK = 0,
    KZR_ERR_BAD_ARGUMENT = 1, /* unparsable input, malformed partition, unknown name */
    KZR_ERR_LEVEL = 2,        /* fusion operand above the level bound */
    KZR_ERR_DOMAIN = 3,       /* kappa <= 0, bad Galois class, degree out of range */
    KZR_ERR_INTERNAL = 4      /* an identity the algorithm relies on failed; report a bug */
} kzr_status;

/* Message for the last failing call on this thread; never NULL. */
const char* kzr_last_error(void);

void kzr_string_free(char* s);

/* Enriched representation ring of sl_rank at kappa > 0 ("r" or "r/s"). */
kzr_status kzr_ring_new_rep(int rank, const char* kappa, kzr_ring** out);

/* Enriched fusion ring of sl_rank at the given level with Galois class
 * galois, which must be coprime to level + rank. */
kzr_status kzr_ring_new_fusion(int rank, int level, int galois, kzr_ring** out);

void kzr_ring_free(kzr_ring* ring);

/* Product of the listed weights. With nu != NULL the coefficient of [nu] as
 * a polynomial object {"exp":coeff,...}; with nu == NULL the full expansion
 * [{"nu":[...],"coeff":{...}},...]. Deterministic byte-stable output. */
kzr_status kzr_mult(kzr_ring* ring, const char* weights, const char* nu, char** json_out);

/* As kzr_mult with nu, but each coefficient homogenized to its weight:
 * fusion rings only. Output [{"nu":[...],"coeff":{"p,q":c,...}},...]. */
kzr_status kzr_mult_bigraded(kzr_ring* ring, const char* weights, char** json_out);

/* Local monodromy exponents as the listed points coalesce:
 * [{"nu":[...],"multiplicity":m,"exponent":"r/s"},...]. kappa nonzero. */
kzr_status kzr_local_exponents(int rank, const char* kappa, const char* weights, char** json_out);

/* Image of [weight] in the fusion ring next to its conjectured value. */
kzr_status kzr_pi(int rank, int level, int galois, const char* weight, char** json_out);

/* Run a named check. params_json carries the check-specific arguments; see
 * the CLI for the flag-to-field mapping. failed_out is set to 1 when a
 * pass/fail check fails, 0 otherwise (report-only checks never fail). */
kzr_status kzr_check(const char* name, const char* params_json, char** report_json_out, int* failed_out);

/* Compute (or verify and extend) the table of all pairwise products of
 * dominant weights with at most max_boxes boxes, persisted at path. */
kzr_status kzr_table(kzr_ring* ring, int max_boxes, const char* path, char** summary_json_out);

#ifdef __cplusplus
}
#endif

#endif /* KZRING_H */
