/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/adapt.hpp"
#include "dynadapt/gw.hpp"
#include "dynadapt/maxcut.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dynadapt {

// ----------------------------------------------------------------- batches

/// Optimizer seed of batch element `index`.
AdaptConfig instance_config(const AdaptConfig &base, std::size_t index);

/// generate_instance(n, derive_seed(seed, Instance, i)) for i < count.
std::vector<MaxCutInstance> generate_batch(std::size_t n, std::size_t count,
                                           std::uint64_t seed);

/// Noiseless runs of config.variant, one per instance.
std::vector<RunRecord> run_batch(std::span<const MaxCutInstance> instances,
                                 const AdaptConfig &config, std::size_t jobs);

/// GW per instance with seed derive_seed(params.seed, Relaxation, i).
std::vector<GwRecord> gw_batch(std::span<const MaxCutInstance> instances,
                               const GwParams &params, std::size_t jobs);

struct MeanStderr {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

/// Sample mean and standard error (sd / sqrt(N)); zero error for N < 2.
MeanStderr mean_stderr(std::span<const double> values);

/// sqrt((N - 1) / N * sum_i (theta_i - mean)^2) over leave-one-out values.
double jackknife_stderr(std::span<const double> leave_one_out);

// ------------------------------------------------------------------ replay

/// alpha of every prefix U_0 .. U_P with the CNOT count of each prefix.
struct AlphaTrace {
  std::vector<std::size_t> cnots;
  std::vector<double> alphas;
};

/// <H> of each recorded prefix U_1 .. U_P under per-CNOT depolarizing noise.
std::vector<double> replay_energies(const RunRecord &record, double p_gate);

/// alpha_p = energy_to_cut(<H>) / V_max for p = 1 .. P.
std::vector<double> replay_with_noise(const RunRecord &record, double p_gate);

/// Replayed trace including the empty prefix.
AlphaTrace replay_trace(const RunRecord &record, double p_gate);

/// Trace of the alphas stored in the record (the growth-time values).
AlphaTrace record_trace(const RunRecord &record);

// ------------------------------------------------------------------ curves

struct CurvePoint {
  std::size_t cnot_count = 0;
  double mean_alpha = 0.0;
  double stderr_alpha = 0.0;
};

struct NoiseCurve {
  double p_gate = 0.0;
  /// Ordered by CNOT count.
  std::vector<CurvePoint> points;
  double alpha_star = 0.0;
  std::size_t cnot_at_star = 0;
};

/// Mean alpha versus CNOT budget: at every budget c seen in any trace, each
/// instance contributes the alpha of its longest prefix with at most c
/// CNOTs.
NoiseCurve aggregate_curve(std::span<const AlphaTrace> traces, double p_gate);

/// Replays every record at p_gate and aggregates.
NoiseCurve noise_curve(std::span<const RunRecord> records, double p_gate,
                       std::size_t jobs);

/// First CNOT count at which the mean alpha exceeds `threshold`.
std::optional<std::size_t> first_cnot_exceeding(const NoiseCurve &curve,
                                                double threshold);

struct DepthPoint {
  std::size_t p = 0;
  double mean_alpha = 0.0;
  double stderr_alpha = 0.0;
};

/// Mean alpha per prefix index; shorter traces carry their last value.
std::vector<DepthPoint> depth_curve(std::span<const AlphaTrace> traces);

// ------------------------------------------------------------- noisy growth

/// Growth with selection, B/C/D and optimisation all on noisy states.
RunRecord noisy_growth(const MaxCutInstance &inst, const AdaptConfig &config,
                       double p_gate);

// ---------------------------------------------------------------- critical

struct CriticalSettings {
  double p_lo = 1e-4;
  double p_hi = 1e-1;
  /// Log-spaced grid points between the bounds.
  std::size_t grid_points = 13;
  /// Bisection stops once (hi - lo) / lo falls below this.
  double rel_tol = 0.05;
  std::size_t jobs = 1;
};

struct CriticalErrorResult {
  std::size_t n = 0;
  Variant algorithm = Variant::Dynamic;
  double p_star = 0.0;
  double stderr_p = 0.0;
  double alpha_gw_mean = 0.0;
  /// No crossing inside [p_lo, p_hi]; p_star is the bound.
  bool boundary = false;
  /// Every evaluated noise level with its alpha* (mean curve maximum).
  std::vector<double> p_evaluated;
  std::vector<double> alpha_star;
};

/// Noise level where alpha*(p) of the mean replay curve falls below the
/// mean GW ratio. `alpha_gw` holds one ratio per record.
CriticalErrorResult critical_error_probability(std::span<const RunRecord> records,
                                               std::span<const double> alpha_gw,
                                               const CriticalSettings &settings);

/// First downward crossing of d(p) (p ascending) by linear interpolation in
/// log p; empty when d never changes sign from > 0 to <= 0.
std::optional<double> log_crossing(std::span<const double> ps,
                                   std::span<const double> d);

// --------------------------------------------------------------- histogram

struct GammaHistogram {
  double bin_width = 0.05;
  std::vector<double> bin_left;
  std::vector<std::size_t> counts;
  std::size_t total = 0;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  std::size_t near_zero = 0;
  /// Share of values with |gamma*| < bin_width.
  double near_zero_fraction = 0.0;
};

/// Bins every optimised cost angle of each record's final circuit on
/// [-pi, pi]. An empty record set gives an empty histogram.
GammaHistogram gamma_histogram(std::span<const RunRecord> records,
                               double bin_width = 0.05);

// -------------------------------------------------------------- mitigation

/// alpha(p) + (alpha(p) - alpha(c p)) / (c - 1); c <= 1 is rejected.
double richardson_mitigate(double alpha_p, double alpha_cp, double c);

/// Per-instance Richardson extrapolation of every prefix from replays at
/// p_gate and c * p_gate, then aggregated like noise_curve.
NoiseCurve mitigated_curve(std::span<const RunRecord> records, double p_gate,
                           double c, std::size_t jobs);

// ---------------------------------------------------------------- variants

struct VariantRow {
  std::size_t p = 0;
  Variant variant = Variant::Dynamic;
  double mean_one_minus_alpha = 0.0;
  double stderr_value = 0.0;
};

/// Dynamic, DynamicNoCost and DynamicNoReselect on every instance; mean
/// 1 - alpha per iteration. Runs are appended to `records` when given.
std::vector<VariantRow> variant_comparison(std::span<const MaxCutInstance> instances,
                                           const AdaptConfig &config,
                                           std::size_t jobs,
                                           std::vector<RunRecord> *records = nullptr);

} // namespace dynadapt
