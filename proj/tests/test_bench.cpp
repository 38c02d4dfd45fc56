/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/bench.hpp"
#include "dynadapt/error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace dynadapt;

namespace {

AdaptConfig config(Variant v, std::size_t layers) {
  AdaptConfig c;
  c.variant = v;
  c.max_layers = layers;
  c.seed = 5;
  return c;
}

const std::vector<RunRecord> &small_batch() {
  static const std::vector<RunRecord> batch =
      run_batch(generate_batch(5, 4, 77), config(Variant::Dynamic, 6), 1);
  return batch;
}

// Record with `layers` cost layers on a fixed mixer, for replay tests.
RunRecord synthetic(const MaxCutInstance &inst, std::size_t layers) {
  RunRecord r(inst, config(Variant::Standard, layers));
  r.v_max = brute_force_max_cut(inst).value;
  for (std::size_t p = 1; p <= layers; ++p) {
    IterationRecord it;
    it.p = p;
    it.mixer = Mixer::parse("X0*Y1");
    it.has_cost = true;
    it.betas.assign(p, 0.3);
    it.gammas.assign(p, 0.4);
    it.cnot_count = p * (inst.size() * (inst.size() - 1) + 2);
    r.iterations.push_back(it);
  }
  return r;
}

RunRecord with_final_gammas(std::vector<double> gammas) {
  RunRecord r(generate_instance(3, 1), config(Variant::Standard, 1));
  IterationRecord it;
  it.p = 1;
  it.gammas = std::move(gammas);
  r.iterations.push_back(it);
  return r;
}

} // namespace

TEST(Statistics, MeanAndStandardError) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto m = mean_stderr(v);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_NEAR(m.stderr_mean, std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  EXPECT_EQ(mean_stderr(std::vector<double>{7}).stderr_mean, 0.0);
}

TEST(Statistics, JackknifeOfMeanEqualsStandardError) {
  // Leave-one-out means reproduce sd / sqrt(N) exactly.
  const std::vector<double> v{0.3, 1.9, -2.0, 4.4, 0.7};
  std::vector<double> loo;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i)
        s += v[j];
    loo.push_back(s / (v.size() - 1));
  }
  EXPECT_NEAR(jackknife_stderr(loo), mean_stderr(v).stderr_mean, 1e-14);
  auto shuffled = loo;
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_NEAR(jackknife_stderr(shuffled), jackknife_stderr(loo), 1e-15);
}

TEST(Batches, SeedsAreDerivedPerElement) {
  const auto a = generate_batch(5, 6, 3);
  const auto b = generate_batch(5, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(a[i], b[i]);
  EXPECT_NE(a[0], a[1]);
  EXPECT_NE(instance_config(AdaptConfig{}, 0).seed, instance_config(AdaptConfig{}, 1).seed);
}

TEST(Replay, ZeroNoiseMatchesRecord) {
  for (const auto &r : small_batch()) {
    const auto alphas = replay_with_noise(r, 0.0);
    ASSERT_EQ(alphas.size(), r.iterations.size());
    for (std::size_t k = 0; k < alphas.size(); ++k)
      EXPECT_NEAR(alphas[k], r.iterations[k].alpha, 1e-10);
  }
}

TEST(Replay, Deterministic) {
  const auto &r = small_batch().front();
  EXPECT_EQ(replay_with_noise(r, 0.003), replay_with_noise(r, 0.003));
}

TEST(Replay, EnergyMagnitudeShrinksWithNoise) {
  const std::vector<double> ps{0.0, 1e-4, 1e-3, 3e-3, 1e-2, 3e-2, 0.1};
  for (const auto &r : small_batch()) {
    std::vector<double> prev;
    for (double p : ps) {
      const auto e = replay_energies(r, p);
      if (!prev.empty())
        for (std::size_t k = 0; k < e.size(); ++k)
          EXPECT_LE(std::abs(e[k]), std::abs(prev[k]) + 1e-12);
      prev = e;
    }
  }
}

TEST(Replay, LongCircuitsReachMixedPlateau) {
  const auto inst = generate_instance(4, 12);
  const auto alphas = replay_with_noise(synthetic(inst, 100), 0.01);
  const double plateau = inst.total_weight() / 4.0 / brute_force_max_cut(inst).value;
  EXPECT_NEAR(alphas.back(), plateau, 1e-3);
}

TEST(Replay, TraceIncludesEmptyCircuit) {
  const auto &r = small_batch().front();
  const auto t = replay_trace(r, 0.001);
  ASSERT_EQ(t.alphas.size(), r.iterations.size() + 1);
  EXPECT_EQ(t.cnots.front(), 0u);
  EXPECT_NEAR(t.alphas.front(), r.instance.total_weight() / 4.0 / r.v_max, 1e-12);
  const auto rt = record_trace(r);
  EXPECT_EQ(rt.cnots, t.cnots);
}

TEST(Curves, AggregateByCnotBudget) {
  const std::vector<AlphaTrace> traces{{{0, 10, 30}, {0.5, 0.7, 0.9}},
                                       {{0, 20}, {0.4, 0.8}}};
  const auto c = aggregate_curve(traces, 0.01);
  ASSERT_EQ(c.points.size(), 4u);
  const std::vector<std::size_t> budgets{0, 10, 20, 30};
  const std::vector<double> means{0.45, 0.55, 0.75, 0.85};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(c.points[k].cnot_count, budgets[k]);
    EXPECT_NEAR(c.points[k].mean_alpha, means[k], 1e-15);
  }
  EXPECT_NEAR(c.alpha_star, 0.85, 1e-15);
  EXPECT_EQ(c.cnot_at_star, 30u);
  EXPECT_EQ(first_cnot_exceeding(c, 0.6), std::optional<std::size_t>(20));
  EXPECT_FALSE(first_cnot_exceeding(c, 0.9));
  const auto d = depth_curve(traces);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_NEAR(d[2].mean_alpha, (0.9 + 0.8) / 2, 1e-15);
}

TEST(Curves, NoisyCurvesTurnOver) {
  // With enough noise the best point sits before the end of the curve.
  const auto c = noise_curve(small_batch(), 0.02, 1);
  ASSERT_GE(c.points.size(), 2u);
  EXPECT_LT(c.cnot_at_star, c.points.back().cnot_count);
  EXPECT_GT(c.alpha_star, c.points.back().mean_alpha);
}

TEST(Critical, LogCrossing) {
  const std::vector<double> ps{1e-3, 1e-2, 1e-1};
  EXPECT_NEAR(*log_crossing(ps, std::vector<double>{1.0, 1.0, -1.0}), std::sqrt(1e-3), 1e-12);
  EXPECT_FALSE(log_crossing(ps, std::vector<double>{1, 1, 1}));
  EXPECT_FALSE(log_crossing(ps, std::vector<double>{-1, -1, -1}));
}

TEST(Critical, DegenerateBaselines) {
  const auto &batch = small_batch();
  CriticalSettings s;
  s.grid_points = 5;
  const std::vector<double> zero(batch.size(), 0.0);
  const auto hi = critical_error_probability(batch, zero, s);
  EXPECT_TRUE(hi.boundary);
  EXPECT_EQ(hi.p_star, s.p_hi);
  const std::vector<double> above(batch.size(), 1.5);
  const auto lo = critical_error_probability(batch, above, s);
  EXPECT_TRUE(lo.boundary);
  EXPECT_EQ(lo.p_star, s.p_lo);
  EXPECT_THROW(critical_error_probability(batch, std::vector<double>{0.9}, s), Error);
}

TEST(Critical, CrossingAndJackknifeOrderInvariance) {
  const auto &batch = small_batch();
  const std::vector<double> gw{0.95, 0.93, 0.97, 0.94};
  CriticalSettings s;
  s.grid_points = 7;
  const auto r = critical_error_probability(batch, gw, s);
  ASSERT_FALSE(r.boundary);
  EXPECT_GT(r.p_star, s.p_lo);
  EXPECT_LT(r.p_star, s.p_hi);
  EXPECT_GT(r.stderr_p, 0.0);
  // Grid points on either side of the crossing obey the sign convention.
  for (std::size_t k = 0; k < r.p_evaluated.size(); ++k) {
    if (r.p_evaluated[k] < r.p_star - r.stderr_p)
      EXPECT_GT(r.alpha_star[k], r.alpha_gw_mean);
    if (r.p_evaluated[k] > r.p_star + r.stderr_p)
      EXPECT_LT(r.alpha_star[k], r.alpha_gw_mean);
  }
  std::vector<RunRecord> reversed(batch.rbegin(), batch.rend());
  std::vector<double> gw_rev(gw.rbegin(), gw.rend());
  const auto r2 = critical_error_probability(reversed, gw_rev, s);
  EXPECT_NEAR(r2.p_star, r.p_star, 1e-12 * r.p_star);
  EXPECT_NEAR(r2.stderr_p, r.stderr_p, 1e-12 * r.p_star);
}

TEST(Histogram, EmptyInput) {
  const auto h = gamma_histogram(std::vector<RunRecord>{});
  EXPECT_TRUE(h.counts.empty());
  EXPECT_TRUE(h.bin_left.empty());
  EXPECT_EQ(h.total, 0u);
  EXPECT_THROW(gamma_histogram(std::vector<RunRecord>{}, 0.0), Error);
}

TEST(Histogram, BinsAndNearZeroFraction) {
  const std::vector<RunRecord> recs{with_final_gammas({0.01, -0.02, 0.07}),
                                    with_final_gammas({3.5, -3.2, 0.049})};
  const auto h = gamma_histogram(recs, 0.05);
  EXPECT_EQ(h.total, 6u);
  EXPECT_EQ(h.near_zero, 3u);
  EXPECT_NEAR(h.near_zero_fraction, 0.5, 1e-15);
  EXPECT_EQ(h.overflow, 1u);
  EXPECT_EQ(h.underflow, 1u);
  EXPECT_EQ(h.counts.size(), static_cast<std::size_t>(std::ceil(2 * std::numbers::pi / 0.05)));
  EXPECT_NEAR(h.bin_left.front(), -std::numbers::pi, 1e-15);
  std::size_t binned = 0;
  for (auto c : h.counts)
    binned += c;
  EXPECT_EQ(binned, 4u);
  const auto bin = [&](double g) {
    return static_cast<std::size_t>(std::floor((g + std::numbers::pi) / 0.05));
  };
  EXPECT_EQ(h.counts[bin(0.07)], 1u);
}

TEST(Richardson, AffineAndTwoPoint) {
  const double a = 0.97, b = 3.1;
  for (double p : {1e-3, 5e-3, 2e-2})
    for (double c : {1.5, 2.0, 3.0})
      EXPECT_NEAR(richardson_mitigate(a - b * p, a - b * c * p, c), a, 1e-12);
  EXPECT_DOUBLE_EQ(richardson_mitigate(0.9, 0.85, 2.0), 2 * 0.9 - 0.85);
  EXPECT_THROW(richardson_mitigate(0.9, 0.8, 1.0), Error);
  EXPECT_THROW(richardson_mitigate(0.9, 0.8, 0.5), Error);
}

TEST(Richardson, MitigatedCurveNotBelowRaw) {
  for (double p : {1e-3, 1e-2}) {
    const auto raw = noise_curve(small_batch(), p, 1);
    const auto mit = mitigated_curve(small_batch(), p, 2.0, 1);
    ASSERT_EQ(raw.points.size(), mit.points.size());
    EXPECT_GE(mit.points.back().mean_alpha, raw.points.back().mean_alpha);
  }
}

TEST(Variants, TableShape) {
  const auto inst = generate_batch(4, 2, 9);
  std::vector<RunRecord> recs;
  const auto rows = variant_comparison(inst, config(Variant::Dynamic, 3), 1, &recs);
  EXPECT_EQ(recs.size(), 6u);
  EXPECT_EQ(rows.size(), 9u);
  for (const auto &row : rows) {
    EXPECT_GE(row.mean_one_minus_alpha, -1e-12);
    EXPECT_LE(row.mean_one_minus_alpha, 1.0);
    EXPECT_GE(row.p, 1u);
    EXPECT_LE(row.p, 3u);
  }
}

TEST(NoisyGrowth, NoisyIterationsStaySane) {
  const auto inst = generate_instance(4, 13);
  const auto r = noisy_growth(inst, config(Variant::Dynamic, 4), 0.01);
  EXPECT_EQ(r.p_gate, 0.01);
  for (const auto &it : r.iterations) {
    EXPECT_GT(it.alpha, 0.0);
    EXPECT_LE(it.alpha, 1.0 + 1e-12);
  }
}
