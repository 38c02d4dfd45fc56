/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/bench.hpp"

#include "dynadapt/circuit.hpp"
#include "dynadapt/error.hpp"
#include "dynadapt/parallel.hpp"
#include "dynadapt/rng.hpp"
#include "dynadapt/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace dynadapt {

AdaptConfig instance_config(const AdaptConfig &base, std::size_t index) {
  AdaptConfig c = base;
  c.seed = derive_seed(base.seed, SeedStream::Optimizer, index);
  return c;
}

std::vector<MaxCutInstance> generate_batch(std::size_t n, std::size_t count,
                                           std::uint64_t seed) {
  std::vector<MaxCutInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(generate_instance(n, derive_seed(seed, SeedStream::Instance, i)));
  return out;
}

std::vector<RunRecord> run_batch(std::span<const MaxCutInstance> instances,
                                 const AdaptConfig &config, std::size_t jobs) {
  std::vector<std::optional<RunRecord>> slots(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    slots[i].emplace(run_algorithm(instances[i], instance_config(config, i)));
  });
  std::vector<RunRecord> out;
  out.reserve(slots.size());
  for (auto &s : slots)
    out.push_back(std::move(*s));
  return out;
}

std::vector<GwRecord> gw_batch(std::span<const MaxCutInstance> instances,
                               const GwParams &params, std::size_t jobs) {
  std::vector<GwRecord> out(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    GwParams p = params;
    p.seed = derive_seed(params.seed, SeedStream::Relaxation, i);
    out[i] = run_gw(instances[i], p);
  });
  return out;
}

MeanStderr mean_stderr(std::span<const double> values) {
  MeanStderr out;
  const std::size_t n = values.size();
  if (n == 0)
    return out;
  double sum = 0.0;
  for (double v : values)
    sum += v;
  out.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : values)
      ss += (v - out.mean) * (v - out.mean);
    out.stderr_mean = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  return out;
}

double jackknife_stderr(std::span<const double> loo) {
  const std::size_t n = loo.size();
  if (n < 2)
    return 0.0;
  double mean = 0.0;
  for (double v : loo)
    mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : loo)
    ss += (v - mean) * (v - mean);
  return std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n) * ss);
}

// ------------------------------------------------------------------ replay

std::vector<double> replay_energies(const RunRecord &record, double p_gate) {
  if (!(p_gate >= 0.0 && p_gate <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  const IsingHamiltonian h = build_hamiltonian(record.instance);
  std::vector<double> out;
  out.reserve(record.iterations.size());
  for (std::size_t p = 1; p <= record.iterations.size(); ++p) {
    const auto gates = compile(record.ansatz_at(p), record.instance);
    out.push_back(expectation(simulate_noisy(gates, record.instance.size(), p_gate), h));
  }
  return out;
}

std::vector<double> replay_with_noise(const RunRecord &record, double p_gate) {
  std::vector<double> alphas = replay_energies(record, p_gate);
  for (double &a : alphas)
    a = energy_to_cut(record.instance, a) / record.v_max;
  return alphas;
}

AlphaTrace replay_trace(const RunRecord &record, double p_gate) {
  AlphaTrace t;
  t.cnots.push_back(0);
  t.alphas.push_back(energy_to_cut(record.instance, record.initial_energy) /
                     record.v_max);
  const std::vector<double> alphas = replay_with_noise(record, p_gate);
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    t.cnots.push_back(record.iterations[k].cnot_count);
    t.alphas.push_back(alphas[k]);
  }
  return t;
}

AlphaTrace record_trace(const RunRecord &record) {
  AlphaTrace t;
  t.cnots.push_back(0);
  t.alphas.push_back(energy_to_cut(record.instance, record.initial_energy) /
                     record.v_max);
  for (const auto &it : record.iterations) {
    t.cnots.push_back(it.cnot_count);
    t.alphas.push_back(it.alpha);
  }
  return t;
}

// ------------------------------------------------------------------ curves

NoiseCurve aggregate_curve(std::span<const AlphaTrace> traces, double p_gate) {
  NoiseCurve curve;
  curve.p_gate = p_gate;
  if (traces.empty())
    return curve;
  std::set<std::size_t> budgets;
  for (const auto &t : traces)
    budgets.insert(t.cnots.begin(), t.cnots.end());
  std::vector<double> column(traces.size());
  bool first = true;
  for (std::size_t c : budgets) {
    for (std::size_t i = 0; i < traces.size(); ++i) {
      const AlphaTrace &t = traces[i];
      std::size_t k = 0;
      while (k + 1 < t.cnots.size() && t.cnots[k + 1] <= c)
        ++k;
      column[i] = t.alphas[k];
    }
    const MeanStderr ms = mean_stderr(column);
    curve.points.push_back({c, ms.mean, ms.stderr_mean});
    if (first || ms.mean > curve.alpha_star) {
      curve.alpha_star = ms.mean;
      curve.cnot_at_star = c;
      first = false;
    }
  }
  return curve;
}

namespace {

std::vector<AlphaTrace> replay_all(std::span<const RunRecord> records,
                                   double p_gate, std::size_t jobs) {
  std::vector<AlphaTrace> traces(records.size());
  parallel_for(records.size(), jobs,
               [&](std::size_t i) { traces[i] = replay_trace(records[i], p_gate); });
  return traces;
}

} // namespace

NoiseCurve noise_curve(std::span<const RunRecord> records, double p_gate,
                       std::size_t jobs) {
  const auto traces = replay_all(records, p_gate, jobs);
  return aggregate_curve(traces, p_gate);
}

std::optional<std::size_t> first_cnot_exceeding(const NoiseCurve &curve,
                                                double threshold) {
  for (const auto &pt : curve.points)
    if (pt.mean_alpha > threshold)
      return pt.cnot_count;
  return std::nullopt;
}

std::vector<DepthPoint> depth_curve(std::span<const AlphaTrace> traces) {
  std::size_t len = 0;
  for (const auto &t : traces)
    len = std::max(len, t.alphas.size());
  std::vector<DepthPoint> out;
  std::vector<double> column(traces.size());
  for (std::size_t p = 0; p < len; ++p) {
    for (std::size_t i = 0; i < traces.size(); ++i)
      column[i] = traces[i].alphas[std::min(p, traces[i].alphas.size() - 1)];
    const MeanStderr ms = mean_stderr(column);
    out.push_back({p, ms.mean, ms.stderr_mean});
  }
  return out;
}

// ------------------------------------------------------------- noisy growth

RunRecord noisy_growth(const MaxCutInstance &inst, const AdaptConfig &config,
                       double p_gate) {
  const NoisyBackend backend(inst, p_gate);
  return run_adapt(inst, config, backend);
}

// ---------------------------------------------------------------- critical

std::optional<double> log_crossing(std::span<const double> ps,
                                   std::span<const double> d) {
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] > 0.0)
      continue;
    if (j == 0)
      return std::nullopt;
    const double t = d[j - 1] / (d[j - 1] - d[j]);
    const double lo = std::log(ps[j - 1]);
    const double hi = std::log(ps[j]);
    return std::exp(lo + t * (hi - lo));
  }
  return std::nullopt;
}

CriticalErrorResult critical_error_probability(std::span<const RunRecord> records,
                                               std::span<const double> alpha_gw,
                                               const CriticalSettings &s) {
  if (records.empty() || alpha_gw.size() != records.size())
    throw Error(ErrorCode::InvalidParameter,
                "need one GW ratio per record and at least one record");
  if (!(s.p_lo > 0.0 && s.p_hi > s.p_lo && s.p_hi <= 1.0) || s.grid_points < 2 ||
      !(s.rel_tol > 0.0))
    throw Error(ErrorCode::InvalidParameter, "bad critical search settings");

  const std::size_t m = records.size();
  std::map<double, std::vector<AlphaTrace>> evals;
  const double gw_mean = mean_stderr(alpha_gw).mean;

  auto alpha_star = [&](const std::vector<AlphaTrace> &traces,
                        std::optional<std::size_t> drop) {
    std::vector<AlphaTrace> kept;
    kept.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      if (!drop || *drop != i)
        kept.push_back(traces[i]);
    return aggregate_curve(kept, 0.0).alpha_star;
  };
  auto difference = [&](double p) {
    auto it = evals.find(p);
    if (it == evals.end())
      it = evals.emplace(p, replay_all(records, p, s.jobs)).first;
    return alpha_star(it->second, std::nullopt) - gw_mean;
  };

  CriticalErrorResult out;
  out.n = records.front().instance.size();
  out.algorithm = records.front().variant();
  out.alpha_gw_mean = gw_mean;

  const double ratio = s.p_hi / s.p_lo;
  std::vector<double> grid(s.grid_points);
  for (std::size_t k = 0; k < s.grid_points; ++k)
    grid[k] = k + 1 == s.grid_points
                  ? s.p_hi
                  : s.p_lo * std::pow(ratio, static_cast<double>(k) /
                                                 static_cast<double>(s.grid_points - 1));
  // The whole grid is evaluated so leave-one-out crossings past the first
  // full-batch crossing still have a bracket.
  std::optional<std::size_t> cross;
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (difference(grid[k]) <= 0.0 && !cross)
      cross = k;

  if (cross && *cross > 0) {
    double lo = grid[*cross - 1];
    double hi = grid[*cross];
    while ((hi - lo) / lo >= s.rel_tol) {
      const double mid = std::sqrt(lo * hi);
      (difference(mid) > 0.0 ? lo : hi) = mid;
    }
  }

  std::vector<double> ps;
  std::vector<double> ds;
  for (const auto &[p, traces] : evals) {
    ps.push_back(p);
    const double a = alpha_star(traces, std::nullopt);
    out.alpha_star.push_back(a);
    ds.push_back(a - gw_mean);
  }
  out.p_evaluated = ps;

  if (!cross || *cross == 0) {
    out.boundary = true;
    out.p_star = cross ? s.p_lo : s.p_hi;
    return out;
  }
  out.p_star = *log_crossing(ps, ds);

  std::vector<double> loo(m);
  for (std::size_t i = 0; i < m; ++i) {
    double gw = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i)
        gw += alpha_gw[j];
    gw /= static_cast<double>(m - 1);
    std::vector<double> di;
    for (const auto &[p, traces] : evals)
      di.push_back(alpha_star(traces, i) - gw);
    const auto c = log_crossing(ps, di);
    loo[i] = c ? *c : (di.front() <= 0.0 ? s.p_lo : s.p_hi);
  }
  out.stderr_p = m > 1 ? jackknife_stderr(loo) : 0.0;
  return out;
}

// --------------------------------------------------------------- histogram

GammaHistogram gamma_histogram(std::span<const RunRecord> records,
                               double bin_width) {
  if (!(bin_width > 0.0))
    throw Error(ErrorCode::InvalidParameter, "bin width must be positive");
  GammaHistogram hist;
  hist.bin_width = bin_width;
  std::vector<double> values;
  for (const auto &r : records)
    if (!r.iterations.empty())
      values.insert(values.end(), r.iterations.back().gammas.begin(),
                    r.iterations.back().gammas.end());
  if (values.empty())
    return hist;
  constexpr double pi = std::numbers::pi;
  const auto bins = static_cast<std::size_t>(std::ceil(2.0 * pi / bin_width));
  hist.counts.assign(bins, 0);
  for (std::size_t b = 0; b < bins; ++b)
    hist.bin_left.push_back(-pi + static_cast<double>(b) * bin_width);
  for (double g : values) {
    ++hist.total;
    if (std::abs(g) < bin_width)
      ++hist.near_zero;
    if (g < -pi) {
      ++hist.underflow;
    } else if (g > pi) {
      ++hist.overflow;
    } else {
      const auto b = static_cast<std::size_t>(std::floor((g + pi) / bin_width));
      ++hist.counts[std::min(b, bins - 1)];
    }
  }
  hist.near_zero_fraction =
      static_cast<double>(hist.near_zero) / static_cast<double>(hist.total);
  return hist;
}

// -------------------------------------------------------------- mitigation

double richardson_mitigate(double alpha_p, double alpha_cp, double c) {
  if (!(c > 1.0) || !std::isfinite(c))
    throw Error(ErrorCode::InvalidParameter, "Richardson factor must exceed 1");
  return alpha_p + (alpha_p - alpha_cp) / (c - 1.0);
}

NoiseCurve mitigated_curve(std::span<const RunRecord> records, double p_gate,
                           double c, std::size_t jobs) {
  if (!(c > 1.0))
    throw Error(ErrorCode::InvalidParameter, "Richardson factor must exceed 1");
  if (!(c * p_gate <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "c * p_gate must not exceed 1");
  std::vector<AlphaTrace> traces(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) {
    AlphaTrace t = replay_trace(records[i], p_gate);
    const AlphaTrace scaled = replay_trace(records[i], c * p_gate);
    for (std::size_t k = 0; k < t.alphas.size(); ++k)
      t.alphas[k] = richardson_mitigate(t.alphas[k], scaled.alphas[k], c);
    traces[i] = std::move(t);
  });
  return aggregate_curve(traces, p_gate);
}

// ---------------------------------------------------------------- variants

std::vector<VariantRow> variant_comparison(std::span<const MaxCutInstance> instances,
                                           const AdaptConfig &config,
                                           std::size_t jobs,
                                           std::vector<RunRecord> *records) {
  std::vector<VariantRow> rows;
  for (const Variant v : {Variant::Dynamic, Variant::DynamicNoCost,
                          Variant::DynamicNoReselect}) {
    AdaptConfig c = config;
    c.variant = v;
    std::vector<RunRecord> runs = run_batch(instances, c, jobs);
    std::vector<double> column(runs.size());
    for (std::size_t p = 1; p <= c.max_layers; ++p) {
      for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto &its = runs[i].iterations;
        const double a = its.empty() ? 0.0 : its[std::min(p, its.size()) - 1].alpha;
        column[i] = 1.0 - a;
      }
      const MeanStderr ms = mean_stderr(column);
      rows.push_back({p, v, ms.mean, ms.stderr_mean});
    }
    if (records)
      for (auto &r : runs)
        records->push_back(std::move(r));
  }
  return rows;
}

} // namespace dynadapt
