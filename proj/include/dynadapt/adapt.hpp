/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/circuit.hpp"
#include "dynadapt/hamiltonian.hpp"
#include "dynadapt/maxcut.hpp"
#include "dynadapt/optimizer.hpp"
#include "dynadapt/pauli.hpp"
#include "dynadapt/state.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dynadapt {

// ------------------------------------------------------------------ mixers

/// GlobalX, GlobalY, X_i and Y_i ascending, then every sigma_i sigma'_j with
/// i < j and sigma, sigma' in {X, Y, Z} in lexicographic (i, j, sigma,
/// sigma') order. Size 2 + 2n + 9 n (n - 1) / 2.
std::vector<Mixer> mixer_pool(std::size_t n);

struct PoolGradient {
  Mixer mixer;
  /// <[iA, H]> at gamma = 0.
  double grad0 = 0.0;
  /// Gradients on exp(-/+ i gamma_offset H)|psi>, when evaluated.
  std::optional<double> grad_plus;
  std::optional<double> grad_minus;
};

/// B = <i A H+>, C = <A H+^2>, D = <i A H+^3>.
struct BCD {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

/// <[iA, H]> on `state` as given.
double commutator_expectation(const QuantumState &state,
                              const IsingHamiltonian &h, const Mixer &mixer);

/// d/dbeta of <H> on exp(-i beta A) exp(-i gamma H)|state> at beta = 0. For a
/// Pauli mixer at gamma = 0 this is 2 B.
double gradient_at(const QuantumState &state, const IsingHamiltonian &h,
                   const Mixer &mixer, double gamma);

/// `h_plus` must be the anticommuting part of split_hamiltonian(H, mixer).
BCD bcd_coefficients(const QuantumState &state, const Mixer &mixer,
                     const IsingHamiltonian &h_plus);

/// |C| <= delta1 and B * D > delta2.
bool skip_condition(const BCD &bcd, double delta1, double delta2);

struct ZeroSelection {
  std::size_t index = 0;
  std::vector<PoolGradient> gradients;
};

/// argmax_A |grad(0; A)|, ties to the earliest pool entry.
ZeroSelection select_mixer_zero(const QuantumState &state,
                                const IsingHamiltonian &h,
                                std::span<const Mixer> pool);

struct OffsetSelection {
  std::size_t index = 0;
  /// +1 when |grad(+offset)| >= |grad(-offset)| for the winner, else -1.
  int sign = 1;
  std::vector<PoolGradient> gradients;
};

/// argmax_A max(|grad(+offset; A)|, |grad(-offset; A)|), ties to the
/// earliest pool entry.
OffsetSelection select_mixer_offset(const QuantumState &state,
                                    const IsingHamiltonian &h,
                                    std::span<const Mixer> pool,
                                    double gamma_offset);

/// Same selection from already prepared offset states (used when the cost
/// unitary itself is noisy).
OffsetSelection select_mixer_offset(const QuantumState &plus_state,
                                    const QuantumState &minus_state,
                                    const IsingHamiltonian &h,
                                    std::span<const Mixer> pool);

/// <H> on exp(-i beta A) exp(-i gamma H)|psi>, simulated directly.
double energy_variation(const StateVector &psi, const IsingHamiltonian &h,
                        const Mixer &mixer, double beta, double gamma);

// ------------------------------------------------------------------ config

enum class Variant { Standard, Dynamic, DynamicNoCost, DynamicNoReselect };

std::string_view variant_name(Variant v);
/// Accepts "standard", "dynamic", "dynamic-nocost", "dynamic-noreselect".
Variant parse_variant(std::string_view text);

struct AdaptConfig {
  Variant variant = Variant::Dynamic;
  /// Maximum number of iterations P.
  std::size_t max_layers = 12;
  /// Stop when |E_{p-1} - E_p| < epsilon.
  double epsilon = 0.0;
  double gamma_offset = 0.1;
  /// Magnitude of a new gamma_p before optimisation (sign from the offset
  /// selection); empty means gamma_offset.
  std::optional<double> gamma_init;
  double delta1 = 1e-9;
  double delta2 = 1e-5;
  /// Run every delta2 in `delta2_grid` and keep the lowest final energy.
  bool delta2_search = false;
  std::vector<double> delta2_grid{1e-7, 1e-6, 1e-5, 1e-4};
  OptimizerSettings optimizer;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidParameter) on out-of-range values.
  void validate() const;
};

// ---------------------------------------------------------------- backends

/// Evaluates trial states of an ansatz for one instance.
class EnergyBackend {
public:
  virtual ~EnergyBackend() = default;

  virtual QuantumState initial_state() const = 0;
  virtual void apply_layer(QuantumState &state, const AnsatzLayer &layer) const = 0;
  QuantumState prepare(const Ansatz &ansatz) const;
  /// exp(-i gamma H) applied to `state`, including any gate noise.
  virtual QuantumState apply_cost(const QuantumState &state,
                                  double gamma) const = 0;
  virtual double p_gate() const = 0;

  double energy(const Ansatz &ansatz) const;
  /// Central differences of energy() in the flattened parameters. States
  /// before the perturbed layer are computed once and reused.
  std::vector<double> energy_gradient(const Ansatz &ansatz, double step) const;
  const MaxCutInstance &instance() const noexcept { return instance_; }
  const IsingHamiltonian &hamiltonian() const noexcept { return hamiltonian_; }

protected:
  explicit EnergyBackend(const MaxCutInstance &inst);

private:
  MaxCutInstance instance_;
  IsingHamiltonian hamiltonian_;
};

/// Exact state vectors, layers applied without gate compilation.
class PureBackend final : public EnergyBackend {
public:
  explicit PureBackend(const MaxCutInstance &inst) : EnergyBackend(inst) {}
  QuantumState initial_state() const override;
  void apply_layer(QuantumState &state, const AnsatzLayer &layer) const override;
  QuantumState apply_cost(const QuantumState &state,
                          double gamma) const override;
  double p_gate() const override { return 0.0; }
};

/// Compiled circuits on density matrices with per-CNOT depolarizing noise.
class NoisyBackend final : public EnergyBackend {
public:
  NoisyBackend(const MaxCutInstance &inst, double p_gate);
  QuantumState initial_state() const override;
  void apply_layer(QuantumState &state, const AnsatzLayer &layer) const override;
  QuantumState apply_cost(const QuantumState &state,
                          double gamma) const override;
  double p_gate() const override { return p_gate_; }

private:
  double p_gate_;
};

// -------------------------------------------------------------- optimizing

struct OptimizeResult {
  Ansatz ansatz;
  double energy = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

/// Local minimisation of the energy over every parameter of `init`, warm
/// started from the parameters it carries.
OptimizeResult optimize_parameters(const Ansatz &init,
                                   const EnergyBackend &backend,
                                   const OptimizerSettings &settings, Rng &rng);

// ------------------------------------------------------------------ records

struct SkipTest {
  bool evaluated = false;
  bool fired = false;
  BCD bcd;
};

struct IterationRecord {
  std::size_t p = 0;
  Mixer mixer = Mixer::global_x();
  bool has_cost = false;
  /// Optimised mixer angles, one per layer, layer 1 first.
  std::vector<double> betas;
  /// Optimised cost angles, one per cost layer, layer order.
  std::vector<double> gammas;
  double energy = 0.0;
  /// Cumulative CNOT count of the compiled ansatz U_p.
  std::size_t cnot_count = 0;
  /// Mean cut of the grown state divided by V_max.
  double alpha = 0.0;
  /// Magnitude of the winning selection gradient.
  double selected_gradient = 0.0;
  /// Sign of the offset that initialised gamma_p, 0 if no offset selection.
  int offset_sign = 0;
  SkipTest skip;
  bool optimizer_converged = true;
  /// E_p <= E_{p-1} + 1e-8.
  bool monotone = true;
};

/// Full trace of one run, replayable from the recorded layers and
/// parameters.
struct RunRecord {
  RunRecord(MaxCutInstance inst, AdaptConfig cfg)
      : instance(std::move(inst)), config(std::move(cfg)) {}

  MaxCutInstance instance;
  AdaptConfig config;
  /// Noise level the circuits were grown under (0 for noiseless growth).
  double p_gate = 0.0;
  double v_max = 0.0;
  double initial_energy = 0.0;
  std::vector<IterationRecord> iterations;

  Variant variant() const noexcept { return config.variant; }
  double final_energy() const;
  double final_mean_cut() const;
  double final_alpha() const;
  std::size_t final_cnot_count() const;
  /// Ansatz U_p with the parameters optimised at iteration p; p = 0 is empty.
  Ansatz ansatz_at(std::size_t p) const;
};

/// One ADAPT growth loop for the variant in `config`, evaluated on `backend`.
RunRecord run_adapt(const MaxCutInstance &inst, const AdaptConfig &config,
                    const EnergyBackend &backend);

/// Standard ADAPT-QAOA: a cost layer every iteration, mixer chosen at the
/// +/- gamma_offset gradients.
RunRecord run_standard(const MaxCutInstance &inst, AdaptConfig config);

/// Dynamic-ADAPT-QAOA (or one of its two ablations if `config.variant` says
/// so), with the optional per-instance delta2 search.
RunRecord run_dynamic(const MaxCutInstance &inst, AdaptConfig config);

/// Dispatches on config.variant.
RunRecord run_algorithm(const MaxCutInstance &inst, const AdaptConfig &config);

} // namespace dynadapt
