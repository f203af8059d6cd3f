/* C interface to the m-bigness checker.  All functions return an
 * mbig_status; output parameters are filled only on MBIG_OK.  Strings
 * returned through char** outputs are owned by the caller and must be
 * released with mbig_string_free. */
#ifndef MBIG_H
#define MBIG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbig_status {
    MBIG_OK = 0,
    MBIG_ERR_NOT_PRIME,
    MBIG_ERR_FIELD_TOO_LARGE,
    MBIG_ERR_DIVISION_BY_ZERO,
    MBIG_ERR_CTX_MISMATCH,
    MBIG_ERR_ZERO_ELEMENT,
    MBIG_ERR_NO_EMBEDDING,
    MBIG_ERR_NOT_MONIC,
    MBIG_ERR_NOT_SQUARE,
    MBIG_ERR_NOT_AN_EIGENVALUE,
    MBIG_ERR_NOT_INVERTIBLE,
    MBIG_ERR_GROUP_TOO_LARGE,
    MBIG_ERR_CHOP_BUDGET_EXCEEDED,
    MBIG_ERR_TOO_MANY_SUBMODULES,
    MBIG_ERR_SYSTEM_TOO_LARGE,
    MBIG_ERR_SEARCH_SPACE_TOO_LARGE,
    MBIG_ERR_NOT_FINITE,
    MBIG_ERR_BAD_ARGUMENT,
    MBIG_ERR_PARSE,
    MBIG_ERR_INTERNAL
} mbig_status;

const char* mbig_status_name(mbig_status s);

/* Resource budgets; a zero field selects the built-in default. */
typedef struct mbig_caps {
    uint64_t element_cap;    /* group enumeration cap (default 2097152) */
    uint64_t submodule_cap;  /* irreducible-submodule cap (default 10000) */
    uint64_t cocycle_budget; /* |G| * dim cap for H^1 (default 10000000) */
    uint32_t chop_budget;    /* meataxe attempts (default 200) */
} mbig_caps;

/* Opaque enumerated matrix group. */
typedef struct mbig_group mbig_group;

/* Parse { "p":..., "e":..., "n":..., "generators":[...] } and enumerate
 * the generated group. */
mbig_status mbig_group_parse(const char* json_text, const mbig_caps* caps, mbig_group** out);

/* SL2(F_l) acting on degree-sym_power forms (sym_power >= 1). */
mbig_status mbig_group_sl2(uint32_t l, uint32_t sym_power, const mbig_caps* caps,
                           mbig_group** out);

uint64_t mbig_group_order(const mbig_group* g);
void mbig_group_free(mbig_group* g);

/* Decide m-bigness.  verdict: 0 = BIG, 1 = NOT_BIG, 2 = INDETERMINATE.
 * cert_json (optional) receives the full certificate. */
mbig_status mbig_check(const mbig_group* g, uint32_t m, uint64_t seed, const mbig_caps* caps,
                       int* verdict, char** cert_json);

/* Search the split torus of the given root datum type ("A1", "A2", "B2",
 * "A1xA1", ...) over GF(p^e) for an element whose weight values of norm
 * below n stay distinct after m-th powers.  found: 1/0.  elem_json
 * (optional) receives the coordinates when found. */
mbig_status mbig_torus_find(const char* type, uint32_t p, uint32_t e, uint32_t m, uint32_t n,
                            uint64_t scan_cap, int* found, char** elem_json);

/* Exact covering statistics for the same search space. */
mbig_status mbig_torus_audit(const char* type, uint32_t p, uint32_t e, uint32_t m, uint32_t n,
                             uint64_t scan_cap, char** report_json);

void mbig_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MBIG_H */
