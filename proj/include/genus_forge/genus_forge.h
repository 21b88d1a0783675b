#ifndef GENUS_FORGE_H
#define GENUS_FORGE_H

#include <stddef.h>

#if defined(_WIN32)
#define GF_API __declspec(dllexport)
#else
#define GF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_PARSE = 1,
  GF_ERR_DOMAIN = 2,
  GF_ERR_STRUCTURAL = 3,
  GF_ERR_INVARIANT = 4,
  GF_ERR_ARGUMENT = 5,  /* null pointer, unknown genus or suite */
  GF_ERR_INTERNAL = 6
} gf_status;

typedef struct gf_manifold gf_manifold;

GF_API const char* gf_version(void);

/* Message and (for parse errors) character offset of the last failure on this thread. */
GF_API const char* gf_last_error(void);
GF_API size_t gf_last_error_position(void);

/* Strings returned through char** are owned by the caller. */
GF_API void gf_string_free(char* s);

GF_API gf_status gf_manifold_parse(const char* expr, gf_manifold** out);
GF_API void gf_manifold_free(gf_manifold* m);
GF_API int gf_manifold_dim(const gf_manifold* m);
GF_API gf_status gf_manifold_label(const gf_manifold* m, char** out);

/* genus: psi, chi_y, kh, ochanine, ahat, psi_deg. order <= 0 picks 2*dim + 2. */
GF_API gf_status gf_eval(const gf_manifold* m, const char* genus, int order, char** out);

/* JSON object {"dim": n, "numbers": {"c1^2": "9", "c2": "3"}}, partitions in a fixed order. */
GF_API gf_status gf_chern_numbers(const gf_manifold* m, char** json_out);

/* Thom-Milnor number s_n as an exact rational. */
GF_API gf_status gf_milnor(const gf_manifold* m, char** out);

/* q-layers {"q^l": {"coeff_of": {"x^k": "..."}}} of the product expansion. */
GF_API gf_status gf_q_expansion(int q_max, int x_order, char** json_out);

/* suite: dual, cy3, gcd-odd, gcd-even, kh-psi, qexp, hrr, milnor, chi_y, degenerate, all.
   options: JSON object with optional max_dim, m_from, m_to, qmax, manifold; may be NULL.
   json_out receives an array of {check, params, expected, got, verdict}. */
GF_API gf_status gf_check(const char* suite, const char* options, char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
