#ifndef ARRDEFORM_H
#define ARRDEFORM_H

/*
 * C interface to the arrdeform library: exact classification of the
 * translation deformations of a represented matroid's hyperplane
 * arrangement, characteristic polynomials by independent routes, and the
 * comparison / decomposition verifiers.
 *
 * Instances are held behind opaque handles created from JSON text of the
 * form {"field": "Q" | {"GFp": p}, "n": ..., "rows": [[...], ...]}.
 * Scalar entries are integers or strings like "-3" and "2/7" (fractions
 * over Q only). Every query returns a JSON document; identical input
 * yields byte-identical output.
 *
 * All strings returned through `char **out` are owned by the caller and
 * must be released with arrd_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef ARRD_API
#define ARRD_API __attribute__((visibility("default")))
#endif

typedef enum arrd_status {
    ARRD_OK = 0,
    ARRD_VERIFY_FAILED = 1,  /* a checked identity or inequality does not hold */
    ARRD_INPUT_ERROR = 2,    /* malformed instance, vector, or argument */
    ARRD_BUDGET_EXCEEDED = 3,/* an exhaustive scan would exceed its cap */
    ARRD_CONTRACT_ERROR = 4, /* a documented precondition was violated */
    ARRD_INTERNAL_ERROR = 5  /* a cross-checked invariant failed (a bug) */
} arrd_status;

typedef struct arrd_instance arrd_instance;

/* Parses an instance document. On success *out owns the handle. */
ARRD_API arrd_status arrd_instance_parse(const char *json_text, arrd_instance **out);
ARRD_API void arrd_instance_free(arrd_instance *instance);

ARRD_API void arrd_string_free(char *s);

/* Message for the most recent failure on the calling thread. */
ARRD_API const char *arrd_last_error(void);

ARRD_API const char *arrd_status_name(arrd_status status);

/* Circuits of the represented matroid with their normalized circuit vectors. */
ARRD_API arrd_status arrd_circuits_json(const arrd_instance *instance, char **out);

/* chi(A_g, t) with the Moebius, Whitney, and NBC routes cross-checked.
 * `g` is a comma-separated scalar list of length m. */
ARRD_API arrd_status arrd_charpoly_json(const arrd_instance *instance, const char *g,
                                        char **out);

/* Full stratification of translation vectors: one stratum per flat of the
 * circuit arrangement, with representative, chi(X, t), and (over GF(q))
 * the stratum size. */
ARRD_API arrd_status arrd_classify_json(const arrd_instance *instance, char **out);

/* Comparison and/or decomposition verifiers; `what` is "decomposition",
 * "comparison", or "all" (NULL means "all"). Returns ARRD_VERIFY_FAILED,
 * with the report still written to *out, when a check fails. */
ARRD_API arrd_status arrd_verify_json(const arrd_instance *instance, const char *what,
                                      char **out);

/* Whether two translation vectors are equivalent, with both signatures. */
ARRD_API arrd_status arrd_equiv_json(const arrd_instance *instance, const char *g,
                                     const char *h, char **out);

/* Affine circuits, NBC counts, and the NBC-route polynomial of A_g.
 * `order` is a comma-separated 1-based permutation; NULL means natural. */
ARRD_API arrd_status arrd_nbc_json(const arrd_instance *instance, const char *g,
                                   const char *order, char **out);

#ifdef __cplusplus
}
#endif

#endif /* ARRDEFORM_H */
