/* SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the ambient-backscatter tag simulator. The library models a
 * source / tag / reader dipole link (optionally with wire scatterers and a
 * perfect ground plane) with a thin-wire moment-method solver and derives
 * detection metrics: SNR contrast maps over tag positions, best-polarization
 * selection, coverage outage curves and captured-SNR curves, plus the
 * analytic optimum-orientation model with exhaustive-search validation.
 *
 * All handles are opaque; every fallible call returns ambtag_status and the
 * thread-local ambtag_last_error() holds the matching message. Angles cross
 * this interface in degrees, lengths in meters, powers in watts.
 */

#ifndef AMBTAG_H
#define AMBTAG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ambtag_status {
  AMBTAG_OK = 0,
  AMBTAG_E_INVALID = 1,    /* bad argument or broken invariant */
  AMBTAG_E_PARSE = 2,      /* malformed scene / set file */
  AMBTAG_E_IO = 3,         /* filesystem failure */
  AMBTAG_E_GEOMETRY = 4,   /* distance rules, overlaps, ground violations */
  AMBTAG_E_NUMERIC = 5,    /* ill-conditioned system */
  AMBTAG_E_INFEASIBLE = 6, /* constraint set cannot be satisfied */
  AMBTAG_E_UNSUPPORTED = 7,
  AMBTAG_E_INTERNAL = 8
} ambtag_status;

typedef struct ambtag_scene ambtag_scene;
typedef struct ambtag_polset ambtag_polset;
typedef struct ambtag_session ambtag_session; /* factorized solver for one scene */
typedef struct ambtag_map ambtag_map;
typedef struct ambtag_curveset ambtag_curveset;

const char* ambtag_version(void);
const char* ambtag_status_string(ambtag_status s);
const char* ambtag_last_error(void); /* thread-local; empty when no error */
void ambtag_string_free(char* s);

/* ------------------------------------------------------------- scenes --- */

/* name: "table1" | "los-crosspol" | "chamber"; seed drives scatterer draws */
ambtag_status ambtag_scene_preset(const char* name, uint64_t seed, ambtag_scene** out);
ambtag_status ambtag_scene_load(const char* path, ambtag_scene** out);
ambtag_status ambtag_scene_from_json(const char* json_text, ambtag_scene** out);
ambtag_status ambtag_scene_save(const ambtag_scene* s, const char* path);
ambtag_status ambtag_scene_to_json(const ambtag_scene* s, char** out_text);
void ambtag_scene_free(ambtag_scene* s);

double ambtag_scene_frequency_hz(const ambtag_scene* s);
double ambtag_scene_wavelength_m(const ambtag_scene* s);
int ambtag_scene_scatterer_count(const ambtag_scene* s);
void ambtag_scene_reader_position(const ambtag_scene* s, double* x, double* y, double* z);
void ambtag_scene_tag_position(const ambtag_scene* s, double* x, double* y, double* z);
/* FNV-1a of the canonical JSON form, as used in run manifests */
ambtag_status ambtag_scene_hash(const ambtag_scene* s, char out_hex17[17]);

/* --------------------------------------------------- polarization sets --- */

/* kind: "nr" | "nr-worst" | "4pr" | "ipr" */
ambtag_status ambtag_polset_named(const char* kind, ambtag_polset** out);
ambtag_status ambtag_polset_load(const char* path, ambtag_polset** out);
void ambtag_polset_free(ambtag_polset* p);
int ambtag_polset_size(const ambtag_polset* p);
const char* ambtag_polset_label(const ambtag_polset* p);
ambtag_status ambtag_polset_get(const ambtag_polset* p, int i, double* phi_deg, double* theta_deg);

/* ------------------------------------------------------------- solver --- */

typedef struct ambtag_solver_params {
  int segments_per_halfwave; /* odd, >= 5; 0 -> 11 */
  double open_circuit_ohms;  /* 0 -> 1e6 */
  double condition_limit;    /* 0 -> 1e12 */
} ambtag_solver_params;

void ambtag_solver_params_init(ambtag_solver_params* p);

/* Meshes and factorizes the tag-free environment once; tag poses are then
 * solved against it. Sessions are immutable and safe to share across threads. */
ambtag_status ambtag_session_create(const ambtag_scene* s, const ambtag_solver_params* params,
                                    ambtag_session** out);
void ambtag_session_free(ambtag_session* s);

/* Reader-load power for both tag states at one pose. */
ambtag_status ambtag_session_tag_transfer(const ambtag_session* s, double x, double y, double z,
                                          double phi_deg, double theta_deg, double* p_on_w,
                                          double* p_off_w);
/* 1 V feed power of the tag-free environment (SNR calibration reference). */
double ambtag_session_source_power_ref_w(const ambtag_session* s);

/* Debug dump of the full loaded system at the template tag pose (tag open):
 * "AMBZ" magic, u32 version, u32 N, N*N complex doubles row-major, then the
 * N solved currents. Little-endian. */
ambtag_status ambtag_session_dump(const ambtag_session* s, const char* path);

/* ------------------------------------------------------------- sweeps --- */

typedef struct ambtag_grid {
  double x_min, x_max, y_min, y_max;
  double step;
  double z_fixed;
} ambtag_grid;

typedef struct ambtag_budget {
  double p_noise_w;  /* 0 -> 1.0 */
  double snr_tx_db;
} ambtag_budget;

ambtag_status ambtag_map_run(const ambtag_session* s, const ambtag_grid* grid,
                             const ambtag_polset* pols, const ambtag_budget* budget, int threads,
                             ambtag_map** out);
void ambtag_map_free(ambtag_map* m);
int ambtag_map_nx(const ambtag_map* m);
int ambtag_map_ny(const ambtag_map* m);
int ambtag_map_layers(const ambtag_map* m);
double ambtag_map_value(const ambtag_map* m, int layer, int ix, int iy); /* dB */
int ambtag_map_masked(const ambtag_map* m, int ix, int iy);
double ambtag_map_best_value(const ambtag_map* m, int ix, int iy);
int ambtag_map_best_index(const ambtag_map* m, int ix, int iy);

ambtag_status ambtag_map_write_layer_csv(const ambtag_map* m, int layer, const char* path);
ambtag_status ambtag_map_write_best_csv(const ambtag_map* m, const char* path);
ambtag_status ambtag_map_write_velvet_csv(const ambtag_map* m, const char* path);
/* layer = -1 renders the best map */
ambtag_status ambtag_map_write_png(const ambtag_map* m, int layer, const char* path, double db_lo,
                                   double db_hi);

/* Outage and captured-SNR curves over the coverage annulus around the reader
 * (planar distance in (lambda/2, 3 lambda), tag at reader height). All sets
 * share one batch of solver runs, so nested sets are directly comparable. */
ambtag_status ambtag_outage_run(const ambtag_session* s, const ambtag_polset* const* sets,
                                int n_sets, const ambtag_budget* noise_only,
                                double snr_lo_db, double snr_hi_db, double snr_step_db,
                                double threshold_db, double coverage_step_m, int threads,
                                ambtag_curveset** out);
void ambtag_curveset_free(ambtag_curveset* c);
int ambtag_curveset_count(const ambtag_curveset* c);
const char* ambtag_curveset_label(const ambtag_curveset* c, int set);
int ambtag_curveset_points(const ambtag_curveset* c);
ambtag_status ambtag_curveset_outage(const ambtag_curveset* c, int set, int i, double* snr_tx_db,
                                     double* outage);
ambtag_status ambtag_curveset_captured(const ambtag_curveset* c, int set, int i,
                                       double* snr_tx_db, double* captured_db);
ambtag_status ambtag_curveset_write_outage_csv(const ambtag_curveset* c, int set,
                                               const char* path);
ambtag_status ambtag_curveset_write_captured_csv(const ambtag_curveset* c, int set,
                                                 const char* path);
/* 1 when every nested pair of the requested sets kept outage dominance */
int ambtag_curveset_dominance_ok(const ambtag_curveset* c);

/* ----------------------------------------------- analytic orientation --- */

/* Closed form for a vertical source: theta_t = theta_r, phi_t = phi_r / 2.
 * Fails with AMBTAG_E_UNSUPPORTED when phi_source != 0. tie_flag reports a
 * 90-degree-shifted branch scoring within 1e-9 of the principal one. */
ambtag_status ambtag_best_orientation_closed_form(double phi_source_deg, double theta_source_deg,
                                                  double phi_reader_deg, double theta_reader_deg,
                                                  double* phi_tag_deg, double* theta_tag_deg,
                                                  int* tie_flag);
/* Grid argmax of |(S.T)(T.R)| over phi in [0,90], theta in [0,180]. */
ambtag_status ambtag_best_orientation_exhaustive(double phi_source_deg, double theta_source_deg,
                                                 double phi_reader_deg, double theta_reader_deg,
                                                 double phi_step_deg, double theta_step_deg,
                                                 double* phi_tag_deg, double* theta_tag_deg,
                                                 double* objective);
/* |axis(a) . axis(b)| */
double ambtag_orientation_match(double phi_a_deg, double theta_a_deg, double phi_b_deg,
                                double theta_b_deg);

/* ------------------------------------------------------------ metrics --- */

double ambtag_delta_power_w(double p_on_w, double p_off_w);
double ambtag_ber_from_delta_snr(double delta_snr_linear);

/* ---------------------------------------------------------- selfcheck --- */

/* Runs the invariant battery; report is malloc'd text for the caller to free
 * with ambtag_string_free. *passed is 1 on a clean run. scene_path may be
 * NULL. */
ambtag_status ambtag_selfcheck(const ambtag_solver_params* params, const char* scene_path,
                               char** report, int* passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AMBTAG_H */
