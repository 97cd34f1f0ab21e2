/*
 * dcgrid - double circle and Jarnik polygon constructions on the integer
 * grid, with exact verification.
 *
 * All functions that can fail return a dcg_status; objects are opaque
 * handles owned by the library and released with their _free function.
 * The library never prints and never aborts on bad input.
 */
#ifndef DCGRID_H
#define DCGRID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dcg_status {
    DCG_OK = 0,
    DCG_ERROR_DOMAIN = 1,   /* argument outside the documented domain */
    DCG_ERROR_OVERFLOW = 2, /* exact 64-bit arithmetic would overflow */
    DCG_ERROR_CAPACITY = 3, /* result exceeds the configured memory budget */
    DCG_ERROR_NULL = 4,     /* required pointer argument was NULL */
    DCG_ERROR_INDEX = 5,    /* index out of range */
    DCG_ERROR_INTERNAL = 6
} dcg_status;

/* Human-readable name of a status code (static storage). */
const char* dcg_status_message(dcg_status status);

/* Library version, e.g. "1.0.0". */
const char* dcg_version(void);

/* Role of a point inside a set. */
typedef enum dcg_role {
    DCG_ROLE_UNLABELED = 0,
    DCG_ROLE_HULL = 1,
    DCG_ROLE_INNER = 2
} dcg_role;

/*
 * Double-circle conditions checked by dcg_verify_double_circle, in the
 * order they are tested. dcg_condition_tag yields the canonical tag
 * string for CLI/report output.
 */
typedef enum dcg_condition {
    DCG_CONDITION_NONE = 0,
    DCG_CONDITION_HULL_COUNT = 1,       /* hull vertex count != n        */
    DCG_CONDITION_GENERAL_POSITION = 2, /* duplicates or collinear triple */
    DCG_CONDITION_PROXIMITY = 3,        /* inner/edge matching failed     */
    DCG_CONDITION_SEPARATION_INNER = 4, /* line (p_i, p'_i) separation    */
    DCG_CONDITION_SEPARATION_NEXT = 5   /* line (p'_i, p_{i+1}) separation */
} dcg_condition;

const char* dcg_condition_tag(int condition);

/* An ordered set of lattice points with per-point roles. */
typedef struct dcg_point_set dcg_point_set;

/*
 * Build a 2n-point double circle (n >= 3) on the grid [0,N]^2 with
 * N = O(n^(3/2)), in O(n) time.
 */
dcg_status dcg_double_circle(int64_t n, dcg_point_set** out);

/* Quadratic-size reference construction, 2n points, N = 4n^2 - 2n - 2. */
dcg_status dcg_quadratic_baseline(int64_t n, dcg_point_set** out);

/* Symmetric-sequence reference construction; n even, >= 4; N = Theta(n^2). */
dcg_status dcg_naive_symmetric(int64_t n, dcg_point_set** out);

/*
 * Jarnik polygon for Chebyshev bound q >= 1: the convex polygon whose
 * edge vectors are all visible vectors with max(|x|,|y|) <= q, placed
 * in [0,N]^2.
 */
dcg_status dcg_jarnik_polygon(int64_t q, dcg_point_set** out);

/* Exact vertex count and grid size of the Jarnik polygon. */
typedef struct dcg_jarnik_summary {
    int64_t vertex_count;
    int64_t grid_size;
} dcg_jarnik_summary;

dcg_status dcg_jarnik_counts(int64_t q, dcg_jarnik_summary* out);

/* Wrap caller-supplied points: coords = x0,y0,x1,y1,... (count points). */
dcg_status dcg_point_set_create(const int64_t* coords, int64_t count, dcg_point_set** out);

void dcg_point_set_free(dcg_point_set* set);

/* Number of points, or -1 if set is NULL. */
int64_t dcg_point_set_size(const dcg_point_set* set);

dcg_status dcg_point_set_point(const dcg_point_set* set, int64_t index, int64_t* x, int64_t* y);

/* Role of point `index` (dcg_role), or -1 on bad arguments. */
int dcg_point_set_role(const dcg_point_set* set, int64_t index);

/* Smallest N such that a translate of the set fits in [0,N]^2. */
dcg_status dcg_point_set_grid_size(const dcg_point_set* set, int64_t* out);

/* Translate in place so that min x = min y = 0. */
dcg_status dcg_point_set_translate_to_grid(dcg_point_set* set);

/*
 * Result of dcg_verify_double_circle. When passed == 0,
 * failed_condition identifies the first violated condition and
 * witness[] holds up to three point indices involved (-1 padded).
 */
typedef struct dcg_verify_report {
    int passed;
    int failed_condition; /* dcg_condition */
    int64_t witness[3];
    int64_t hull_count; /* discovered number of hull vertices */
} dcg_verify_report;

/*
 * Exact double-circle check: 2n points (even, >= 6), exactly n hull
 * vertices, general position, and the two strict line-separation
 * conditions per hull edge. Point roles in the set are ignored; the
 * hull/inner structure is rediscovered from the geometry.
 */
dcg_status dcg_verify_double_circle(const dcg_point_set* set, dcg_verify_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DCGRID_H */
