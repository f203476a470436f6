/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the shearlet toolkit: band-limited cone-adapted shearlet
 * frames on periodic grids, analysis/synthesis transforms, anisotropic
 * Besov / Triebel-Lizorkin norms, and the numerical verification suite.
 *
 * All objects are opaque handles owned by the library; every function
 * returns a status code and reports details through slt_last_error().
 */
#ifndef SHEARLET_H
#define SHEARLET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slt_status {
  SLT_OK = 0,
  SLT_ERR_INVALID_ARGUMENT = 1,
  SLT_ERR_INCOMPATIBLE = 2,
  SLT_ERR_IO = 3,
  SLT_ERR_INTERNAL = 4
} slt_status;

typedef struct slt_frame slt_frame;
typedef struct slt_signal slt_signal;
typedef struct slt_field slt_field;
typedef struct slt_sequence slt_sequence;

/* Message for the most recent failure on this thread. */
const char* slt_last_error(void);

/* ---- frames ---------------------------------------------------------- */

/* variant: "smooth" or "cone_projected"; j_max < 0 selects the default. */
slt_status slt_frame_build(int d, int n, int j_max, const char* variant, slt_frame** out);
slt_status slt_frame_load(const char* path, slt_frame** out);
slt_status slt_frame_save(const slt_frame* frame, const char* path);
void slt_frame_free(slt_frame* frame);
int slt_frame_band_count(const slt_frame* frame);
slt_status slt_frame_parseval(const slt_frame* frame, double* max_deviation);

/* ---- signals ---------------------------------------------------------- */

slt_status slt_signal_create(int d, int n, const double* real_samples, slt_signal** out);
slt_status slt_signal_random(int d, int n, uint64_t seed, int bandlimited, slt_signal** out);
/* .csv loads the d=2 text format, anything else the raw binary + sidecar. */
slt_status slt_signal_load(const char* path, slt_signal** out);
slt_status slt_signal_save(const slt_signal* sig, const char* path);
slt_status slt_signal_info(const slt_signal* sig, int* d, int* n);
void slt_signal_free(slt_signal* sig);
slt_status slt_rel_error(const slt_signal* a, const slt_signal* b, double* out);

/* ---- transforms -------------------------------------------------------- */

slt_status slt_forward(const slt_frame* frame, const slt_signal* sig, slt_field** out);
slt_status slt_inverse(const slt_frame* frame, const slt_field* field, slt_signal** out);
slt_status slt_field_save(const slt_frame* frame, const slt_field* field, const char* path);
slt_status slt_field_load(const slt_frame* frame, const char* path, slt_field** out);
void slt_field_free(slt_field* field);

slt_status slt_subsample(const slt_frame* frame, const slt_field* field, slt_sequence** out);
slt_status slt_synthesize(const slt_frame* frame, const slt_sequence* seq, slt_signal** out);
slt_status slt_sequence_save(const slt_sequence* seq, const char* path);
slt_status slt_sequence_load(const char* path, slt_sequence** out);
void slt_sequence_free(slt_sequence* seq);

/* ---- norms ------------------------------------------------------------- */

/* space: "BAB" | "FAB" (shear-anisotropic) or "B" | "F" (dyadic). */
slt_status slt_norm_distribution(const slt_frame* frame, const slt_signal* sig,
                                 const char* space, double alpha, double p, double q,
                                 double* out);
/* space: "bAB" | "fAB" | "b" | "f"; quad_n: quadrature grid for f-type norms. */
slt_status slt_norm_sequence(const slt_sequence* seq, const char* space, double alpha, double p,
                             double q, int quad_n, double* out);

/* ---- dumps used by the CLI --------------------------------------------- */

slt_status slt_windows_dump_csv(int grid_n, int meyer_degree, const char* path);
/* JSON document with the smoothstep degree and the window breakpoints. */
slt_status slt_windows_config_json(int meyer_degree, const char* path);
slt_status slt_lattice_enumerate_csv(int d, int j_max, const char* path);

/* ---- verification ------------------------------------------------------ */

/* suite: "all" or a single check name; writes the JSON report when
 * report_path is non-NULL; *all_passed set to 1 when every check passed. */
slt_status slt_verify(const char* suite, int d, int n, int j_max, const char* variant,
                      uint64_t seed, const char* report_path, int* all_passed);
/* Space-separated list of the available check names (static storage). */
const char* slt_verify_suites(void);

#ifdef __cplusplus
}
#endif

#endif /* SHEARLET_H */
