/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#ifndef DYNADAPT_DYNADAPT_H
#define DYNADAPT_DYNADAPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dyn_status {
  DYN_OK = 0,
  DYN_ERR_INVALID_INSTANCE = 1,
  DYN_ERR_INVALID_PARAMETER = 2,
  DYN_ERR_DIMENSION = 3,
  DYN_ERR_RESOURCE = 4,
  DYN_ERR_UNSUPPORTED_MIXER = 5,
  DYN_ERR_IO = 6,
  DYN_ERR_PARSE = 7,
  DYN_ERR_NULL_ARGUMENT = 8,
  DYN_ERR_INTERNAL = 9
} dyn_status;

typedef struct dyn_instance dyn_instance;
typedef struct dyn_record dyn_record;
typedef struct dyn_config dyn_config;

const char *dyn_version(void);
const char *dyn_status_name(dyn_status status);
/* Diagnostic of the last failing call on this thread ("" if none). */
const char *dyn_last_error(void);

/* Strings are returned by copying at most cap - 1 bytes plus a NUL into buf;
 * *len (when non-null) receives the full length. */

/* ---- instances ---- */
dyn_status dyn_instance_generate(size_t n, uint64_t seed, dyn_instance **out);
/* Row-major n*n symmetric weights in [0, 1] with zero diagonal. */
dyn_status dyn_instance_from_weights(size_t n, const double *weights,
                                     dyn_instance **out);
dyn_status dyn_instance_load(const char *path, dyn_instance **out);
dyn_status dyn_instance_save(const dyn_instance *inst, const char *path);
void dyn_instance_free(dyn_instance *inst);
size_t dyn_instance_size(const dyn_instance *inst);
dyn_status dyn_instance_weight(const dyn_instance *inst, size_t i, size_t j,
                               double *out);
dyn_status dyn_cut_value(const dyn_instance *inst, const uint8_t *bits,
                         size_t len, double *out);
/* bits receives n entries. */
dyn_status dyn_max_cut(const dyn_instance *inst, uint8_t *bits, double *value);
dyn_status dyn_energy_to_cut(const dyn_instance *inst, double energy,
                             double *out);

/* ---- configuration (flat key/value settings) ---- */
dyn_status dyn_config_create(dyn_config **out);
void dyn_config_free(dyn_config *cfg);
dyn_status dyn_config_set(dyn_config *cfg, const char *key, const char *value);
dyn_status dyn_config_get(const dyn_config *cfg, const char *key, char *buf,
                          size_t cap, size_t *len);
dyn_status dyn_config_load_file(dyn_config *cfg, const char *path);

/* ---- runs ---- */
/* Noiseless run of the configured algorithm (not "gw") with the config seed
 * as optimizer seed. */
dyn_status dyn_run(const dyn_instance *inst, const dyn_config *cfg,
                   dyn_record **out);
/* Noisy growth of the configured algorithm at p_gate. */
dyn_status dyn_run_noisy(const dyn_instance *inst, const dyn_config *cfg,
                         double p_gate, dyn_record **out);
void dyn_record_free(dyn_record *rec);
size_t dyn_record_iterations(const dyn_record *rec);
/* Iteration p in [1, iterations]; p = 0 reports the empty circuit. */
dyn_status dyn_record_energy(const dyn_record *rec, size_t p, double *out);
dyn_status dyn_record_alpha(const dyn_record *rec, size_t p, double *out);
dyn_status dyn_record_cnot_count(const dyn_record *rec, size_t p, size_t *out);
dyn_status dyn_record_has_cost(const dyn_record *rec, size_t p, int *out);
dyn_status dyn_record_mixer(const dyn_record *rec, size_t p, char *buf,
                            size_t cap, size_t *len);
dyn_status dyn_record_final_alpha(const dyn_record *rec, double *out);
dyn_status dyn_record_to_json(const dyn_record *rec, char *buf, size_t cap,
                              size_t *len);
dyn_status dyn_record_save(const dyn_record *rec, const char *path);
dyn_status dyn_record_load(const char *path, dyn_record **out);

/* alphas[k] = alpha of prefix k + 1 under per-CNOT depolarizing noise;
 * *count receives the number of prefixes. */
dyn_status dyn_replay(const dyn_record *rec, double p_gate, double *alphas,
                      size_t cap, size_t *count);

/* ---- classical baseline and mitigation ---- */
dyn_status dyn_gw(const dyn_instance *inst, size_t rounds, uint64_t seed,
                  double *alpha, double *v_gw, double *objective);
dyn_status dyn_richardson(double alpha_p, double alpha_cp, double c,
                          double *out);

/* ---- experiments ---- */
dyn_status dyn_cmd_run(const dyn_config *cfg, char *buf, size_t cap,
                       size_t *len);
/* sub: convergence, critical, histogram, variants, mitigate, noisy-growth. */
dyn_status dyn_cmd_bench(const dyn_config *cfg, const char *sub, char *buf,
                         size_t cap, size_t *len);

#ifdef __cplusplus
}
#endif

#endif /* DYNADAPT_DYNADAPT_H */
