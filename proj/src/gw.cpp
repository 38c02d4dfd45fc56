/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/gw.hpp"

#include "dynadapt/error.hpp"
#include "dynadapt/record.hpp"
#include "dynadapt/rng.hpp"

#include "json.hpp"

#include <cmath>
#include <random>

namespace dynadapt {

double relaxation_objective(const MaxCutInstance &inst,
                            std::span<const double> vectors, std::size_t k) {
  const std::size_t n = inst.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = inst.weight(i, j);
      if (w == 0.0)
        continue;
      double dot = 0.0;
      for (std::size_t a = 0; a < k; ++a)
        dot += vectors[i * k + a] * vectors[j * k + a];
      total += w * (1.0 - dot) / 2.0;
    }
  return total;
}

std::size_t minimum_rank(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n))));
}

namespace {

void normalize_rows(std::vector<double> &v, std::size_t n, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t a = 0; a < k; ++a)
      s += v[i * k + a] * v[i * k + a];
    s = std::sqrt(s);
    for (std::size_t a = 0; a < k; ++a)
      v[i * k + a] /= s;
  }
}

EmbeddingSolution ascend(const MaxCutInstance &inst, std::size_t k,
                         std::size_t max_iterations, Rng &rng) {
  const std::size_t n = inst.size();
  EmbeddingSolution sol{n, k, std::vector<double>(n * k), 0.0, false};
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double &x : sol.vectors)
    x = gauss(rng);
  normalize_rows(sol.vectors, n, k);
  sol.objective = relaxation_objective(inst, sol.vectors, k);

  std::vector<double> grad(n * k);
  std::vector<double> trial(n * k);
  double step = 0.5;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    // Euclidean gradient -1/2 sum_j W_ij v_j projected on each tangent plane.
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double *g = &grad[i * k];
      const double *vi = &sol.vectors[i * k];
      for (std::size_t a = 0; a < k; ++a)
        g[a] = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = inst.weight(i, j);
        if (j == i || w == 0.0)
          continue;
        for (std::size_t a = 0; a < k; ++a)
          g[a] -= 0.5 * w * sol.vectors[j * k + a];
      }
      double radial = 0.0;
      for (std::size_t a = 0; a < k; ++a)
        radial += g[a] * vi[a];
      for (std::size_t a = 0; a < k; ++a) {
        g[a] -= radial * vi[a];
        norm2 += g[a] * g[a];
      }
    }
    if (std::sqrt(norm2) < 1e-10) {
      sol.converged = true;
      break;
    }
    for (;;) {
      for (std::size_t x = 0; x < n * k; ++x)
        trial[x] = sol.vectors[x] + step * grad[x];
      normalize_rows(trial, n, k);
      const double f = relaxation_objective(inst, trial, k);
      if (f >= sol.objective) {
        sol.vectors.swap(trial);
        sol.objective = f;
        step = std::min(step * 1.5, 1e3);
        break;
      }
      step *= 0.5;
      if (step < 1e-16)
        break;
    }
    if (step < 1e-16) {
      sol.converged = std::sqrt(norm2) < 1e-6;
      break;
    }
  }
  return sol;
}

} // namespace

EmbeddingSolution solve_relaxation(const MaxCutInstance &inst, std::size_t rank,
                                   std::size_t max_iterations,
                                   std::uint64_t seed, std::size_t restarts) {
  const std::size_t n = inst.size();
  const std::size_t k = rank == 0 ? n : rank;
  if (k < minimum_rank(n))
    throw Error(ErrorCode::InvalidParameter,
                "rank must be at least ceil(sqrt(2n)) = " +
                    std::to_string(minimum_rank(n)));
  if (restarts == 0)
    throw Error(ErrorCode::InvalidParameter, "at least one start required");
  EmbeddingSolution best;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, SeedStream::Relaxation, r));
    EmbeddingSolution s = ascend(inst, k, max_iterations, rng);
    if (r == 0 || s.objective > best.objective)
      best = std::move(s);
  }
  return best;
}

RoundingResult hyperplane_round(const EmbeddingSolution &sol,
                                const MaxCutInstance &inst, std::size_t samples,
                                std::uint64_t seed) {
  if (samples == 0)
    throw Error(ErrorCode::InvalidParameter, "need at least one rounding sample");
  if (sol.n != inst.size() || sol.vectors.size() != sol.n * sol.k)
    throw Error(ErrorCode::Dimension, "embedding does not match instance");
  Rng rng(derive_seed(seed, SeedStream::Rounding, 0));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> r(sol.k);
  std::vector<std::uint8_t> bits(sol.n);
  RoundingResult out;
  out.samples = samples;
  double sum = 0.0;
  double sum2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (double &x : r)
      x = gauss(rng);
    for (std::size_t i = 0; i < sol.n; ++i) {
      double dot = 0.0;
      for (std::size_t a = 0; a < sol.k; ++a)
        dot += r[a] * sol.vectors[i * sol.k + a];
      bits[i] = dot < 0.0 ? 1 : 0;
    }
    const double v = cut_value(inst, bits);
    sum += v;
    sum2 += v * v;
    if (s == 0 || v > out.best.value)
      out.best = {bits, v};
  }
  const double m = sum / static_cast<double>(samples);
  out.mean_cut = m;
  if (samples > 1) {
    const double var =
        std::max(0.0, (sum2 - samples * m * m) / static_cast<double>(samples - 1));
    out.stderr_cut = std::sqrt(var / static_cast<double>(samples));
  }
  return out;
}

GwRecord run_gw(const MaxCutInstance &inst, const GwParams &params) {
  const EmbeddingSolution sol = solve_relaxation(
      inst, params.rank, params.max_iterations, params.seed, params.restarts);
  const RoundingResult rr = hyperplane_round(sol, inst, params.rounds, params.seed);
  GwRecord rec;
  rec.params = params;
  rec.objective = sol.objective;
  rec.v_gw = rr.mean_cut;
  rec.v_gw_stderr = rr.stderr_cut;
  rec.best = rr.best;
  rec.v_max = brute_force_max_cut(inst).value;
  // Every sample is a cut, so a ratio above 1 is summation round-off.
  rec.alpha = rec.v_max > 0.0 ? std::min(1.0, rec.v_gw / rec.v_max) : 1.0;
  rec.converged = sol.converged;
  return rec;
}

double gw_ratio(const MaxCutInstance &inst, const GwParams &params) {
  return run_gw(inst, params).alpha;
}

std::string gw_record_to_json(const MaxCutInstance &inst, const GwRecord &rec,
                              const std::map<std::string, std::string> &metadata) {
  nlohmann::json j = nlohmann::json::parse(instance_to_json(inst));
  nlohmann::json doc;
  doc["kind"] = "gw";
  doc["version"] = version_string();
  if (!metadata.empty())
    doc["experiment"] = metadata;
  doc["instance"] = std::move(j);
  doc["params"] = {{"rank", rec.params.rank == 0 ? inst.size() : rec.params.rank},
                   {"max_iterations", rec.params.max_iterations},
                   {"restarts", rec.params.restarts},
                   {"rounds", rec.params.rounds},
                   {"seed", rec.params.seed}};
  doc["objective"] = rec.objective;
  doc["v_gw"] = rec.v_gw;
  doc["v_gw_stderr"] = rec.v_gw_stderr;
  std::vector<int> bits(rec.best.bits.begin(), rec.best.bits.end());
  doc["best_cut"] = {{"bits", bits}, {"value", rec.best.value}};
  doc["v_max"] = rec.v_max;
  doc["alpha_gw"] = rec.alpha;
  doc["converged"] = rec.converged;
  return doc.dump(1) + "\n";
}

} // namespace dynadapt
