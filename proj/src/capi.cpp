/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/dynadapt.h"

#include "dynadapt/adapt.hpp"
#include "dynadapt/bench.hpp"
#include "dynadapt/error.hpp"
#include "dynadapt/experiment.hpp"
#include "dynadapt/gw.hpp"
#include "dynadapt/maxcut.hpp"
#include "dynadapt/record.hpp"

#include <cstring>
#include <new>
#include <string>

struct dyn_instance {
  dynadapt::MaxCutInstance inst;
};

struct dyn_record {
  dynadapt::RunRecord rec;
};

struct dyn_config {
  dynadapt::ExperimentConfig cfg;
};

namespace {

thread_local std::string last_error;

dyn_status status_of(dynadapt::ErrorCode code) {
  using dynadapt::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidInstance:
    return DYN_ERR_INVALID_INSTANCE;
  case ErrorCode::InvalidParameter:
    return DYN_ERR_INVALID_PARAMETER;
  case ErrorCode::Dimension:
    return DYN_ERR_DIMENSION;
  case ErrorCode::ResourceLimit:
    return DYN_ERR_RESOURCE;
  case ErrorCode::UnsupportedMixer:
    return DYN_ERR_UNSUPPORTED_MIXER;
  case ErrorCode::Io:
    return DYN_ERR_IO;
  case ErrorCode::Parse:
    return DYN_ERR_PARSE;
  }
  return DYN_ERR_INTERNAL;
}

template <typename F> dyn_status guard(F &&f) {
  try {
    last_error.clear();
    f();
    return DYN_OK;
  } catch (const dynadapt::Error &e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    last_error = "out of memory";
    return DYN_ERR_RESOURCE;
  } catch (const std::exception &e) {
    last_error = e.what();
    return DYN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DYN_ERR_INTERNAL;
  }
}

dyn_status null_status() {
  last_error = "null argument";
  return DYN_ERR_NULL_ARGUMENT;
}

void copy_out(const std::string &s, char *buf, size_t cap, size_t *len) {
  if (len)
    *len = s.size();
  if (buf && cap > 0) {
    const size_t k = std::min(cap - 1, s.size());
    std::memcpy(buf, s.data(), k);
    buf[k] = '\0';
  }
}

const dynadapt::IterationRecord &iteration(const dyn_record *r, size_t p) {
  if (p == 0 || p > r->rec.iterations.size())
    throw dynadapt::Error(dynadapt::ErrorCode::InvalidParameter,
                          "iteration " + std::to_string(p) + " out of range");
  return r->rec.iterations[p - 1];
}

} // namespace

extern "C" {

const char *dyn_version(void) { return DYNADAPT_VERSION_STRING; }

const char *dyn_status_name(dyn_status status) {
  switch (status) {
  case DYN_OK:
    return "ok";
  case DYN_ERR_INVALID_INSTANCE:
    return "invalid instance";
  case DYN_ERR_INVALID_PARAMETER:
    return "invalid parameter";
  case DYN_ERR_DIMENSION:
    return "dimension mismatch";
  case DYN_ERR_RESOURCE:
    return "resource limit";
  case DYN_ERR_UNSUPPORTED_MIXER:
    return "unsupported mixer";
  case DYN_ERR_IO:
    return "i/o error";
  case DYN_ERR_PARSE:
    return "parse error";
  case DYN_ERR_NULL_ARGUMENT:
    return "null argument";
  case DYN_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *dyn_last_error(void) { return last_error.c_str(); }

dyn_status dyn_instance_generate(size_t n, uint64_t seed, dyn_instance **out) {
  if (!out)
    return null_status();
  return guard([&] { *out = new dyn_instance{dynadapt::generate_instance(n, seed)}; });
}

dyn_status dyn_instance_from_weights(size_t n, const double *weights,
                                     dyn_instance **out) {
  if (!out || !weights)
    return null_status();
  return guard([&] {
    *out = new dyn_instance{
        dynadapt::MaxCutInstance(n, std::vector<double>(weights, weights + n * n))};
  });
}

dyn_status dyn_instance_load(const char *path, dyn_instance **out) {
  if (!out || !path)
    return null_status();
  return guard([&] {
    *out = new dyn_instance{dynadapt::instance_from_json(dynadapt::read_file(path))};
  });
}

dyn_status dyn_instance_save(const dyn_instance *inst, const char *path) {
  if (!inst || !path)
    return null_status();
  return guard([&] { dynadapt::write_file(path, dynadapt::instance_to_json(inst->inst)); });
}

void dyn_instance_free(dyn_instance *inst) { delete inst; }

size_t dyn_instance_size(const dyn_instance *inst) {
  return inst ? inst->inst.size() : 0;
}

dyn_status dyn_instance_weight(const dyn_instance *inst, size_t i, size_t j,
                               double *out) {
  if (!inst || !out)
    return null_status();
  return guard([&] {
    if (i >= inst->inst.size() || j >= inst->inst.size())
      throw dynadapt::Error(dynadapt::ErrorCode::Dimension, "vertex out of range");
    *out = inst->inst.weight(i, j);
  });
}

dyn_status dyn_cut_value(const dyn_instance *inst, const uint8_t *bits,
                         size_t len, double *out) {
  if (!inst || !out || (!bits && len))
    return null_status();
  return guard([&] {
    *out = dynadapt::cut_value(inst->inst, std::span<const uint8_t>(bits, len));
  });
}

dyn_status dyn_max_cut(const dyn_instance *inst, uint8_t *bits, double *value) {
  if (!inst || !bits || !value)
    return null_status();
  return guard([&] {
    const dynadapt::Cut c = dynadapt::brute_force_max_cut(inst->inst);
    std::copy(c.bits.begin(), c.bits.end(), bits);
    *value = c.value;
  });
}

dyn_status dyn_energy_to_cut(const dyn_instance *inst, double energy,
                             double *out) {
  if (!inst || !out)
    return null_status();
  return guard([&] { *out = dynadapt::energy_to_cut(inst->inst, energy); });
}

dyn_status dyn_config_create(dyn_config **out) {
  if (!out)
    return null_status();
  return guard([&] { *out = new dyn_config{}; });
}

void dyn_config_free(dyn_config *cfg) { delete cfg; }

dyn_status dyn_config_set(dyn_config *cfg, const char *key, const char *value) {
  if (!cfg || !key || !value)
    return null_status();
  return guard([&] { cfg->cfg.set(key, value); });
}

dyn_status dyn_config_get(const dyn_config *cfg, const char *key, char *buf,
                          size_t cap, size_t *len) {
  if (!cfg || !key)
    return null_status();
  return guard([&] { copy_out(cfg->cfg.get(key), buf, cap, len); });
}

dyn_status dyn_config_load_file(dyn_config *cfg, const char *path) {
  if (!cfg || !path)
    return null_status();
  return guard([&] { cfg->cfg.load_file(path); });
}

dyn_status dyn_run(const dyn_instance *inst, const dyn_config *cfg,
                   dyn_record **out) {
  if (!inst || !cfg || !out)
    return null_status();
  return guard([&] {
    if (cfg->cfg.is_gw())
      throw dynadapt::Error(dynadapt::ErrorCode::InvalidParameter,
                            "dyn_run needs a quantum algorithm");
    const dynadapt::AdaptConfig c = cfg->cfg.adapt_config();
    *out = new dyn_record{dynadapt::run_algorithm(inst->inst, c)};
  });
}

dyn_status dyn_run_noisy(const dyn_instance *inst, const dyn_config *cfg,
                         double p_gate, dyn_record **out) {
  if (!inst || !cfg || !out)
    return null_status();
  return guard([&] {
    if (cfg->cfg.is_gw())
      throw dynadapt::Error(dynadapt::ErrorCode::InvalidParameter,
                            "dyn_run_noisy needs a quantum algorithm");
    *out = new dyn_record{
        dynadapt::noisy_growth(inst->inst, cfg->cfg.adapt_config(), p_gate)};
  });
}

void dyn_record_free(dyn_record *rec) { delete rec; }

size_t dyn_record_iterations(const dyn_record *rec) {
  return rec ? rec->rec.iterations.size() : 0;
}

dyn_status dyn_record_energy(const dyn_record *rec, size_t p, double *out) {
  if (!rec || !out)
    return null_status();
  return guard([&] {
    *out = p == 0 ? rec->rec.initial_energy : iteration(rec, p).energy;
  });
}

dyn_status dyn_record_alpha(const dyn_record *rec, size_t p, double *out) {
  if (!rec || !out)
    return null_status();
  return guard([&] {
    *out = p == 0 ? dynadapt::energy_to_cut(rec->rec.instance, rec->rec.initial_energy) /
                        rec->rec.v_max
                  : iteration(rec, p).alpha;
  });
}

dyn_status dyn_record_cnot_count(const dyn_record *rec, size_t p, size_t *out) {
  if (!rec || !out)
    return null_status();
  return guard([&] { *out = p == 0 ? 0 : iteration(rec, p).cnot_count; });
}

dyn_status dyn_record_has_cost(const dyn_record *rec, size_t p, int *out) {
  if (!rec || !out)
    return null_status();
  return guard([&] { *out = iteration(rec, p).has_cost ? 1 : 0; });
}

dyn_status dyn_record_mixer(const dyn_record *rec, size_t p, char *buf,
                            size_t cap, size_t *len) {
  if (!rec)
    return null_status();
  return guard([&] { copy_out(iteration(rec, p).mixer.to_string(), buf, cap, len); });
}

dyn_status dyn_record_final_alpha(const dyn_record *rec, double *out) {
  if (!rec || !out)
    return null_status();
  return guard([&] { *out = rec->rec.final_alpha(); });
}

dyn_status dyn_record_to_json(const dyn_record *rec, char *buf, size_t cap,
                              size_t *len) {
  if (!rec)
    return null_status();
  return guard([&] { copy_out(dynadapt::record_to_json(rec->rec), buf, cap, len); });
}

dyn_status dyn_record_save(const dyn_record *rec, const char *path) {
  if (!rec || !path)
    return null_status();
  return guard([&] { dynadapt::write_file(path, dynadapt::record_to_json(rec->rec)); });
}

dyn_status dyn_record_load(const char *path, dyn_record **out) {
  if (!path || !out)
    return null_status();
  return guard([&] {
    *out = new dyn_record{dynadapt::record_from_json(dynadapt::read_file(path))};
  });
}

dyn_status dyn_replay(const dyn_record *rec, double p_gate, double *alphas,
                      size_t cap, size_t *count) {
  if (!rec || (!alphas && cap))
    return null_status();
  return guard([&] {
    const auto a = dynadapt::replay_with_noise(rec->rec, p_gate);
    if (count)
      *count = a.size();
    std::copy_n(a.begin(), std::min(cap, a.size()), alphas);
  });
}

dyn_status dyn_gw(const dyn_instance *inst, size_t rounds, uint64_t seed,
                  double *alpha, double *v_gw, double *objective) {
  if (!inst)
    return null_status();
  return guard([&] {
    dynadapt::GwParams params;
    params.rounds = rounds;
    params.seed = seed;
    const dynadapt::GwRecord r = dynadapt::run_gw(inst->inst, params);
    if (alpha)
      *alpha = r.alpha;
    if (v_gw)
      *v_gw = r.v_gw;
    if (objective)
      *objective = r.objective;
  });
}

dyn_status dyn_richardson(double alpha_p, double alpha_cp, double c,
                          double *out) {
  if (!out)
    return null_status();
  return guard([&] { *out = dynadapt::richardson_mitigate(alpha_p, alpha_cp, c); });
}

dyn_status dyn_cmd_run(const dyn_config *cfg, char *buf, size_t cap,
                       size_t *len) {
  if (!cfg)
    return null_status();
  return guard([&] { copy_out(dynadapt::cmd_run(cfg->cfg), buf, cap, len); });
}

dyn_status dyn_cmd_bench(const dyn_config *cfg, const char *sub, char *buf,
                         size_t cap, size_t *len) {
  if (!cfg || !sub)
    return null_status();
  return guard([&] { copy_out(dynadapt::cmd_bench(sub, cfg->cfg), buf, cap, len); });
}

} // extern "C"
