/* C interface to the abelcoh library: abelian ideals of the Borel subalgebra
 * of sp(2n, C), the Weyl-group correspondence, and the cohomology of the
 * nilradical. All handles are opaque; every call reports an abelcoh_status
 * and leaves a thread-local message retrievable with abelcoh_last_error(). */
#ifndef ABELCOH_ABELCOH_H
#define ABELCOH_ABELCOH_H

#include <stddef.h>
#include <stdint.h>

#if defined(ABELCOH_BUILDING_LIBRARY)
#define ABELCOH_API __attribute__((visibility("default")))
#else
#define ABELCOH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abelcoh_status {
    ABELCOH_OK = 0,
    ABELCOH_INVALID_ARGUMENT = 1,
    ABELCOH_CAP_EXCEEDED = 2,
    ABELCOH_BUFFER_TOO_SMALL = 3,
    ABELCOH_INTERNAL = 4
} abelcoh_status;

typedef enum abelcoh_format {
    ABELCOH_FORMAT_JSON = 0,
    ABELCOH_FORMAT_CSV = 1
} abelcoh_format;

typedef struct abelcoh_session abelcoh_session;
typedef struct abelcoh_report abelcoh_report;

typedef struct abelcoh_request {
    const char* command; /* ideals, weyl, bijection, structure, betti, classes, poincare, verify */
    int rank;
    abelcoh_format format;
    int list;
    int histogram;
    int per_weight;
    int timing;
    const char* witness; /* e.g. "[2,-1,3]"; NULL when absent */
} abelcoh_request;

ABELCOH_API const char* abelcoh_version(void);
/* Message of the last failing call on this thread; "" if none. */
ABELCOH_API const char* abelcoh_last_error(void);
ABELCOH_API const char* abelcoh_status_name(abelcoh_status status);

/* Defaults: combinatorial cap 8, cohomology cap 3, one worker, seed 42, no cache. */
ABELCOH_API abelcoh_status abelcoh_session_create(abelcoh_session** out);
ABELCOH_API void abelcoh_session_destroy(abelcoh_session* session);
ABELCOH_API abelcoh_status abelcoh_session_set_workers(abelcoh_session* session, unsigned workers);
ABELCOH_API abelcoh_status abelcoh_session_set_seed(abelcoh_session* session, uint64_t seed);
ABELCOH_API abelcoh_status abelcoh_session_set_caps(abelcoh_session* session, int combinatorial_cap, int cohomology_cap);
ABELCOH_API abelcoh_status abelcoh_session_set_allow_rank4(abelcoh_session* session, int allow);
ABELCOH_API abelcoh_status abelcoh_session_set_cache_dir(abelcoh_session* session, const char* dir);

/* Runs one command. On ABELCOH_OK the report owns the serialized output;
 * failed verification still returns ABELCOH_OK with passed == 0. */
ABELCOH_API abelcoh_status abelcoh_run(abelcoh_session* session, const abelcoh_request* request,
                                       abelcoh_report** out);
ABELCOH_API const char* abelcoh_report_text(const abelcoh_report* report);
ABELCOH_API int abelcoh_report_passed(const abelcoh_report* report);
/* 0 when every check passed, 1 otherwise. */
ABELCOH_API int abelcoh_report_exit_code(const abelcoh_report* report);
ABELCOH_API void abelcoh_report_destroy(abelcoh_report* report);

/* Coefficient arrays. On entry *len is the capacity of coeffs; on return it
 * is the number of coefficients (also on ABELCOH_BUFFER_TOO_SMALL). */
ABELCOH_API abelcoh_status abelcoh_weyl_poincare(int rank, int64_t* coeffs, size_t* len);
ABELCOH_API abelcoh_status abelcoh_sym_poincare(int rank, int64_t* coeffs, size_t* len);
ABELCOH_API abelcoh_status abelcoh_ideal_generating(int rank, int64_t* coeffs, size_t* len);
/* Enumerated dimension histogram of the abelian ideals. */
ABELCOH_API abelcoh_status abelcoh_ideal_histogram(int rank, int64_t* coeffs, size_t* len);
/* Betti numbers of the nilradical, subject to the session's cohomology cap. */
ABELCOH_API abelcoh_status abelcoh_betti_numbers(abelcoh_session* session, int rank, int64_t* betti,
                                                 size_t* len);

/* (eta, xi) of a signed permutation given as its signed image sequence of
 * length rank. eta receives rank images; xi_bounds receives the row bounds
 * (capacity rank) and *xi_rows their count. */
ABELCOH_API abelcoh_status abelcoh_pair(int rank, const int* signed_images, int* eta, int* xi_bounds,
                                        int* xi_rows);
/* Inverse of abelcoh_pair: sigma has rank images, xi_bounds xi_rows bounds. */
ABELCOH_API abelcoh_status abelcoh_inverse(int rank, const int* sigma, const int* xi_bounds, int xi_rows,
                                           int* signed_images);

#ifdef __cplusplus
}
#endif

#endif /* ABELCOH_ABELCOH_H */
