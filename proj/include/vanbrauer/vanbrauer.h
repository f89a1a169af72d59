/* C interface to the vanbrauer library.
 *
 * Every function that produces output writes a heap-allocated, NUL-terminated
 * JSON string through its out parameter; release it with vbc_string_free().
 * On any status other than VBC_OK the out parameter is left untouched and
 * vbc_last_error() returns a message for the calling thread.
 */
#ifndef VANBRAUER_H
#define VANBRAUER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define VBC_API __declspec(dllexport)
#else
#define VBC_API __attribute__((visibility("default")))
#endif

typedef enum vbc_status {
    VBC_OK = 0,
    VBC_ERROR_INVALID_ARGUMENT = 1, /* out-of-range case, malformed input */
    VBC_ERROR_EXCLUDED_CASE = 2,    /* (3,2), (4,2) or (4,3) */
    VBC_ERROR_VERIFICATION = 3,     /* an internal identity failed to hold */
    VBC_ERROR_PARSE = 4,            /* invalid JSON */
    VBC_ERROR_INTERNAL = 5
} vbc_status;

/* Message for the most recent failure on this thread; never NULL. */
VBC_API const char* vbc_last_error(void);

VBC_API void vbc_string_free(char* s);

/* Invariants of one case (tau, n):
 * {tau, n, pic_gram, det_pic, det_M, brauer_kind, clifford_relation,
 *  admissible}. Integers appear as JSON numbers while they fit in 64 bits
 * and as decimal strings beyond that. */
VBC_API vbc_status vbc_case_report_json(int tau, long n, char** out);

/* Re-derives every per-case identity for all valid cases with n <= n_max:
 * {cases, checks, failures: [{tau, n, what}], ok}. Finding failures is
 * reported in the JSON, not as an error status. inject_fault != 0 perturbs
 * an expected value so the harness provably can fail. */
VBC_API vbc_status vbc_verify_theorem_json(long n_max, int inject_fault, char** out);

/* Audit of the rank-23 unimodular overlattice construction. */
VBC_API vbc_status vbc_glue_audit_json(char** out);

/* Cases whose normalized Picard Gram is [[2,0],[0,2c]], for c < 0 given as
 * a decimal string: {c, cases: [{tau, n}]}. */
VBC_API vbc_status vbc_inverse_lookup_json(const char* c_decimal, char** out);

/* *out = 1 if the case is admissible, 0 if not. */
VBC_API vbc_status vbc_admissible(int tau, long n, int* out);

/* Grid of admissibility statuses for 2 <= n <= n_max:
 * {n_min, n_max, entries: [{tau, n, status}]} with status one of
 * "yes", "no", "excluded"; tau ascending, then n. */
VBC_API vbc_status vbc_admissible_table_json(long n_max, char** out);

/* The worked rank-2 example with Gram [[2,2],[2,-2]]. */
VBC_API vbc_status vbc_abbv_check_json(char** out);

/* Lattices as opaque handles over {rank, gram: [[...]]} JSON objects. The
 * Gram matrix must be symmetric and nondegenerate. */
typedef struct vbc_lattice vbc_lattice;

VBC_API vbc_status vbc_lattice_from_json(const char* json, vbc_lattice** out);
VBC_API vbc_status vbc_lattice_to_json(const vbc_lattice* l, char** out);
/* Determinant of the Gram matrix, as a decimal string. */
VBC_API vbc_status vbc_lattice_det(const vbc_lattice* l, char** out);
VBC_API vbc_status vbc_lattice_signature(const vbc_lattice* l, size_t* positives,
                                         size_t* negatives);
/* *out = 1 if every vector has even square, else 0. */
VBC_API vbc_status vbc_lattice_is_even(const vbc_lattice* l, int* out);
/* Invariant factors > 1 of the discriminant group, as a JSON array. */
VBC_API vbc_status vbc_lattice_discriminant_json(const vbc_lattice* l, char** out);
VBC_API void vbc_lattice_free(vbc_lattice* l);

#ifdef __cplusplus
}
#endif

#endif /* VANBRAUER_H */
