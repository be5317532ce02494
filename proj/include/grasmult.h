/* grasmult: multiplicities of T-fixed points on Schubert varieties in
 * Grassmannians, and the (conjectural) Hilbert series of their tangent
 * cones.
 *
 * All functions are thread-safe as long as each handle is used from one
 * thread at a time; handles are immutable after creation. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with grasmult_string_free(). Numeric results are decimal strings because
 * multiplicities outgrow machine words.
 */

#ifndef GRASMULT_H
#define GRASMULT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef GRASMULT_API
#define GRASMULT_API
#endif

#define GRASMULT_API_VERSION 1u

typedef enum grasmult_status {
  GRASMULT_OK = 0,
  GRASMULT_ERR_INVALID_ARGUMENT = 1,
  GRASMULT_ERR_NOT_ON_VARIETY = 2,
  GRASMULT_ERR_BUDGET_EXCEEDED = 3,
  GRASMULT_ERR_CHAIN_CONDITION = 4,
  GRASMULT_ERR_INTERNAL = 5,
} grasmult_status;

typedef enum grasmult_method {
  GRASMULT_METHOD_DETERMINANT = 0,  /* LGV determinant */
  GRASMULT_METHOD_PATHS = 1,        /* exhaustive nonintersecting-family count */
  GRASMULT_METHOD_REFLECTIONS = 2,  /* (S1)+(S2) reflection-set count */
} grasmult_method;

typedef struct grasmult_instance grasmult_instance;
typedef struct grasmult_families grasmult_families;
typedef struct grasmult_series grasmult_series;

GRASMULT_API const char* grasmult_version(void);
GRASMULT_API uint32_t grasmult_api_version(void);

/* Message for the most recent failure on the calling thread; valid until the
 * next grasmult call on that thread. */
GRASMULT_API const char* grasmult_last_error(void);

GRASMULT_API void grasmult_string_free(char* s);

/* ---- instance: a pair tau <= w on the Grassmannian Gr_d(n) ---- */

/* w and tau are the strictly increasing d-vectors of column indices
 * (entries in [1, n]); either pointer may be NULL when d == 0. */
GRASMULT_API grasmult_status grasmult_instance_create(int n, int d, const int* w, const int* tau,
                                                      grasmult_instance** out);
GRASMULT_API void grasmult_instance_destroy(grasmult_instance* inst);

GRASMULT_API int grasmult_instance_n(const grasmult_instance* inst);
GRASMULT_API int grasmult_instance_d(const grasmult_instance* inst);

/* kappa[q-1] = #{ l : w_q < tau_l }; out must hold d ints. */
GRASMULT_API grasmult_status grasmult_instance_kappa(const grasmult_instance* inst, int* out);
/* sigma[l-1] = 1-based index of the end point joined to the l-th start point. */
GRASMULT_API grasmult_status grasmult_instance_sigma(const grasmult_instance* inst, int* out);
/* Start point A_l = (d+1-l, d) and end point E_q = (d-kappa_q, kappa_q + w_q);
 * l and q are 1-based. */
GRASMULT_API grasmult_status grasmult_instance_start_point(const grasmult_instance* inst, int l,
                                                           int* x, int* y);
GRASMULT_API grasmult_status grasmult_instance_end_point(const grasmult_instance* inst, int q,
                                                         int* x, int* y);
/* Dimension of the variety: sum of w entries minus d(d+1)/2. */
GRASMULT_API grasmult_status grasmult_instance_pole_order(const grasmult_instance* inst,
                                                          int64_t* out);

/* ---- multiplicity ---- */

/* Multiplicity of the point tau on the Schubert variety X(w) by the chosen
 * method, as a decimal string. The budget caps the number of search-tree
 * nodes for the enumerative methods (0 means the built-in default); the
 * determinant method ignores it. */
GRASMULT_API grasmult_status grasmult_multiplicity(const grasmult_instance* inst,
                                                   grasmult_method method, uint64_t budget,
                                                   char** result);

/* ---- Hilbert series of the tangent cone (conjectural) ---- */

GRASMULT_API grasmult_status grasmult_hilbert_series(const grasmult_instance* inst,
                                                     uint64_t budget, grasmult_series** out);
GRASMULT_API void grasmult_series_destroy(grasmult_series* series);

/* Numerator coefficients, constant term first, as comma-separated decimals. */
GRASMULT_API grasmult_status grasmult_series_numerator(const grasmult_series* series, char** out);
GRASMULT_API int64_t grasmult_series_pole_order(const grasmult_series* series);
/* Nonzero: the closed form rests on an unproven conjecture. */
GRASMULT_API int grasmult_series_conjectural(const grasmult_series* series);
/* Coefficient of z^m in the expansion, as a decimal string. */
GRASMULT_API grasmult_status grasmult_series_value(const grasmult_series* series, uint32_t m,
                                                   char** out);

/* ---- nonintersecting path families ---- */

GRASMULT_API grasmult_status grasmult_enumerate_families(const grasmult_instance* inst,
                                                         uint64_t budget,
                                                         grasmult_families** out);
GRASMULT_API void grasmult_families_destroy(grasmult_families* families);

GRASMULT_API uint64_t grasmult_families_count(const grasmult_families* families);
GRASMULT_API grasmult_status grasmult_family_en_turns(const grasmult_families* families,
                                                      uint64_t index, uint32_t* out);
/* Steps of the family's l-th path (1-based), as a string over {N, E};
 * zero-length paths give "". */
GRASMULT_API grasmult_status grasmult_family_steps(const grasmult_families* families,
                                                   uint64_t index, int l, char** out);

/* ---- cross-engine verification ---- */

/* Runs every engine against every other on all instances with n <= max_n.
 * *ok is set to 1 when everything agrees, 0 otherwise; the report describes
 * the sweep and any minimal failing instance. */
GRASMULT_API grasmult_status grasmult_verify(int max_n, uint64_t budget, int* ok, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRASMULT_H */
