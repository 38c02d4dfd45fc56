/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/maxcut.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dynadapt {

/// n unit vectors of dimension k, row-major.
struct EmbeddingSolution {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> vectors;
  /// sum_{i<j} W_ij (1 - v_i . v_j) / 2.
  double objective = 0.0;
  bool converged = false;

  std::span<const double> vector(std::size_t i) const {
    return std::span<const double>(vectors).subspan(i * k, k);
  }
};

/// Relaxation objective of the unit vectors in `vectors` (n x k, row-major).
double relaxation_objective(const MaxCutInstance &inst,
                            std::span<const double> vectors, std::size_t k);

/// Smallest admissible rank, ceil(sqrt(2 n)).
std::size_t minimum_rank(std::size_t n);

/// Low-rank (Burer-Monteiro) relaxation of the Max-Cut SDP solved by
/// Riemannian gradient ascent on the product of spheres; best of `restarts`
/// seeded starts. rank = 0 selects k = n.
EmbeddingSolution solve_relaxation(const MaxCutInstance &inst,
                                   std::size_t rank = 0,
                                   std::size_t max_iterations = 5000,
                                   std::uint64_t seed = 0,
                                   std::size_t restarts = 3);

struct RoundingResult {
  /// Mean cut value over the samples (V_GW).
  double mean_cut = 0.0;
  /// Standard error of that mean.
  double stderr_cut = 0.0;
  Cut best;
  std::size_t samples = 0;
};

/// Random-hyperplane rounding with `samples` Gaussian normals.
RoundingResult hyperplane_round(const EmbeddingSolution &sol,
                                const MaxCutInstance &inst,
                                std::size_t samples, std::uint64_t seed);

struct GwParams {
  std::size_t rank = 0;
  std::size_t max_iterations = 5000;
  std::size_t restarts = 3;
  std::size_t rounds = 1000;
  std::uint64_t seed = 0;
};

struct GwRecord {
  GwParams params;
  double objective = 0.0;
  double v_gw = 0.0;
  double v_gw_stderr = 0.0;
  Cut best;
  double v_max = 0.0;
  double alpha = 0.0;
  bool converged = false;
};

GwRecord run_gw(const MaxCutInstance &inst, const GwParams &params);

/// V_GW / V_max.
double gw_ratio(const MaxCutInstance &inst, const GwParams &params);

/// Document with the instance, parameters and results (kind "gw").
std::string gw_record_to_json(const MaxCutInstance &inst, const GwRecord &rec,
                              const std::map<std::string, std::string> &metadata = {});

} // namespace dynadapt
