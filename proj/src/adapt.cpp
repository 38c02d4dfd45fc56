/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/adapt.hpp"

#include "dynadapt/error.hpp"

#include <cmath>
#include <string>

namespace dynadapt {

std::vector<Mixer> mixer_pool(std::size_t n) {
  std::vector<Mixer> pool;
  pool.reserve(2 + 2 * n + 9 * n * (n - 1) / 2);
  pool.push_back(Mixer::global_x());
  pool.push_back(Mixer::global_y());
  for (const PauliOp op : {PauliOp::X, PauliOp::Y})
    for (std::size_t q = 0; q < n; ++q)
      pool.emplace_back(PauliString({{q, op}}));
  constexpr PauliOp kOps[] = {PauliOp::X, PauliOp::Y, PauliOp::Z};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (const PauliOp a : kOps)
        for (const PauliOp b : kOps)
          pool.emplace_back(PauliString({{i, a}, {j, b}}));
  return pool;
}

double commutator_expectation(const QuantumState &state,
                              const IsingHamiltonian &h, const Mixer &mixer) {
  // <[iA, H]> = i <AH> - i <HA> = -2 Im <AH> for Hermitian A, H.
  double total = 0.0;
  for (const auto &term : mixer.terms(state.qubits()))
    total += -2.0 * state.pauli_diagonal_expectation(term, h.diagonal()).imag();
  return total;
}

double gradient_at(const QuantumState &state, const IsingHamiltonian &h,
                   const Mixer &mixer, double gamma) {
  if (gamma == 0.0)
    return commutator_expectation(state, h, mixer);
  QuantumState shifted = state;
  shifted.apply_phase(h.diagonal(), gamma);
  return commutator_expectation(shifted, h, mixer);
}

BCD bcd_coefficients(const QuantumState &state, const Mixer &mixer,
                     const IsingHamiltonian &h_plus) {
  const PauliString &a = mixer.pauli();
  const auto d1 = h_plus.diagonal();
  std::vector<double> d2(d1.size());
  std::vector<double> d3(d1.size());
  for (std::size_t k = 0; k < d1.size(); ++k) {
    d2[k] = d1[k] * d1[k];
    d3[k] = d2[k] * d1[k];
  }
  BCD out;
  out.b = -state.pauli_diagonal_expectation(a, d1).imag();
  out.c = state.pauli_diagonal_expectation(a, d2).real();
  out.d = -state.pauli_diagonal_expectation(a, d3).imag();
  return out;
}

bool skip_condition(const BCD &bcd, double delta1, double delta2) {
  return std::abs(bcd.c) <= delta1 && bcd.b * bcd.d > delta2;
}

ZeroSelection select_mixer_zero(const QuantumState &state,
                                const IsingHamiltonian &h,
                                std::span<const Mixer> pool) {
  if (pool.empty())
    throw Error(ErrorCode::InvalidParameter, "empty mixer pool");
  ZeroSelection sel;
  sel.gradients.reserve(pool.size());
  double best = -1.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    PoolGradient g{pool[k], commutator_expectation(state, h, pool[k]), {}, {}};
    if (std::abs(g.grad0) > best) {
      best = std::abs(g.grad0);
      sel.index = k;
    }
    sel.gradients.push_back(std::move(g));
  }
  return sel;
}

OffsetSelection select_mixer_offset(const QuantumState &plus_state,
                                    const QuantumState &minus_state,
                                    const IsingHamiltonian &h,
                                    std::span<const Mixer> pool) {
  if (pool.empty())
    throw Error(ErrorCode::InvalidParameter, "empty mixer pool");
  OffsetSelection sel;
  sel.gradients.reserve(pool.size());
  double best = -1.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const double gp = commutator_expectation(plus_state, h, pool[k]);
    const double gm = commutator_expectation(minus_state, h, pool[k]);
    const double score = std::max(std::abs(gp), std::abs(gm));
    if (score > best) {
      best = score;
      sel.index = k;
      sel.sign = std::abs(gm) > std::abs(gp) ? -1 : 1;
    }
    sel.gradients.push_back({pool[k], 0.0, gp, gm});
  }
  return sel;
}

OffsetSelection select_mixer_offset(const QuantumState &state,
                                    const IsingHamiltonian &h,
                                    std::span<const Mixer> pool,
                                    double gamma_offset) {
  QuantumState plus = state;
  plus.apply_phase(h.diagonal(), gamma_offset);
  QuantumState minus = state;
  minus.apply_phase(h.diagonal(), -gamma_offset);
  return select_mixer_offset(plus, minus, h, pool);
}

double energy_variation(const StateVector &psi, const IsingHamiltonian &h,
                        const Mixer &mixer, double beta, double gamma) {
  StateVector phi = psi;
  phi.apply_phase(h.diagonal(), gamma);
  phi.apply_mixer(mixer, beta);
  return phi.diagonal_expectation(h.diagonal());
}

// ------------------------------------------------------------------ config

std::string_view variant_name(Variant v) {
  switch (v) {
  case Variant::Standard:
    return "standard";
  case Variant::Dynamic:
    return "dynamic";
  case Variant::DynamicNoCost:
    return "dynamic-nocost";
  case Variant::DynamicNoReselect:
    return "dynamic-noreselect";
  }
  return "unknown";
}

Variant parse_variant(std::string_view text) {
  for (const Variant v : {Variant::Standard, Variant::Dynamic,
                          Variant::DynamicNoCost, Variant::DynamicNoReselect})
    if (text == variant_name(v))
      return v;
  throw Error(ErrorCode::InvalidParameter,
              "unknown algorithm '" + std::string(text) + "'");
}

void AdaptConfig::validate() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::InvalidParameter, what);
  };
  if (max_layers == 0)
    fail("P must be at least 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
    fail("epsilon must be a finite value >= 0");
  if (!(gamma_offset > 0.0) || !std::isfinite(gamma_offset))
    fail("gamma offset must be a finite value > 0");
  if (gamma_init && !std::isfinite(*gamma_init))
    fail("gamma init must be finite");
  if (!(delta1 >= 0.0) || !std::isfinite(delta1))
    fail("delta1 must be a finite value >= 0");
  if (!(delta2 >= 0.0) || !std::isfinite(delta2))
    fail("delta2 must be a finite value >= 0");
  if (delta2_search && delta2_grid.empty())
    fail("delta2 search needs a non-empty grid");
  for (double d : delta2_grid)
    if (!(d >= 0.0) || !std::isfinite(d))
      fail("delta2 grid values must be finite and >= 0");
  if (!(optimizer.fd_step > 0.0) || !(optimizer.gradient_tolerance > 0.0))
    fail("optimizer step and tolerance must be positive");
}

// ---------------------------------------------------------------- backends

EnergyBackend::EnergyBackend(const MaxCutInstance &inst)
    : instance_(inst), hamiltonian_(build_hamiltonian(inst)) {}

QuantumState EnergyBackend::prepare(const Ansatz &ansatz) const {
  if (ansatz.n != instance_.size())
    throw Error(ErrorCode::Dimension, "ansatz and instance sizes differ");
  QuantumState state = initial_state();
  for (const auto &layer : ansatz.layers)
    apply_layer(state, layer);
  return state;
}

double EnergyBackend::energy(const Ansatz &ansatz) const {
  return expectation(prepare(ansatz), hamiltonian());
}

std::vector<double> EnergyBackend::energy_gradient(const Ansatz &ansatz,
                                                   double step) const {
  if (ansatz.n != instance_.size())
    throw Error(ErrorCode::Dimension, "ansatz and instance sizes differ");
  const auto &layers = ansatz.layers;
  std::vector<QuantumState> prefix;
  prefix.reserve(layers.size());
  prefix.push_back(initial_state());
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    prefix.push_back(prefix.back());
    apply_layer(prefix.back(), layers[l]);
  }
  auto shifted = [&](std::size_t l, const AnsatzLayer &changed) {
    QuantumState s = prefix[l];
    apply_layer(s, changed);
    for (std::size_t m = l + 1; m < layers.size(); ++m)
      apply_layer(s, layers[m]);
    return expectation(s, hamiltonian());
  };
  std::vector<double> grad;
  grad.reserve(2 * layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const AnsatzLayer &layer = layers[l];
    AnsatzLayer probe = layer;
    if (layer.gamma) {
      probe.gamma = *layer.gamma + step;
      const double up = shifted(l, probe);
      probe.gamma = *layer.gamma - step;
      const double down = shifted(l, probe);
      probe.gamma = layer.gamma;
      grad.push_back((up - down) / (2.0 * step));
    }
    probe.beta = layer.beta + step;
    const double up = shifted(l, probe);
    probe.beta = layer.beta - step;
    const double down = shifted(l, probe);
    grad.push_back((up - down) / (2.0 * step));
  }
  return grad;
}

QuantumState PureBackend::initial_state() const {
  return StateVector::plus_state(instance().size());
}

void PureBackend::apply_layer(QuantumState &state,
                              const AnsatzLayer &layer) const {
  StateVector &psi = state.vector();
  if (layer.gamma)
    psi.apply_phase(hamiltonian().diagonal(), *layer.gamma);
  psi.apply_mixer(layer.mixer, layer.beta);
}

QuantumState PureBackend::apply_cost(const QuantumState &state,
                                     double gamma) const {
  QuantumState out = state;
  out.apply_phase(hamiltonian().diagonal(), gamma);
  return out;
}

NoisyBackend::NoisyBackend(const MaxCutInstance &inst, double p_gate)
    : EnergyBackend(inst), p_gate_(p_gate) {
  if (!(p_gate >= 0.0 && p_gate <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  if (inst.size() > kDensityQubitLimit)
    throw Error(ErrorCode::ResourceLimit,
                "density matrices limited to " +
                    std::to_string(kDensityQubitLimit) + " qubits");
}

QuantumState NoisyBackend::initial_state() const {
  return DensityMatrix::plus_state(instance().size());
}

void NoisyBackend::apply_layer(QuantumState &state,
                               const AnsatzLayer &layer) const {
  std::vector<Gate> gates;
  if (layer.gamma)
    append_cost_gates(gates, instance(), *layer.gamma);
  append_mixer_gates(gates, layer.mixer, instance().size(), layer.beta);
  apply_noisy(state.density(), gates, p_gate_);
}

QuantumState NoisyBackend::apply_cost(const QuantumState &state,
                                      double gamma) const {
  std::vector<Gate> gates;
  append_cost_gates(gates, instance(), gamma);
  DensityMatrix rho = state.is_pure() ? DensityMatrix::from_pure(state.vector())
                                      : state.density();
  apply_noisy(rho, gates, p_gate_);
  return rho;
}

// -------------------------------------------------------------- optimizing

OptimizeResult optimize_parameters(const Ansatz &init,
                                   const EnergyBackend &backend,
                                   const OptimizerSettings &settings,
                                   Rng &rng) {
  Ansatz work = init;
  const Objective f = [&](std::span<const double> x) {
    work.set_parameters(x);
    return backend.energy(work);
  };
  const Gradient g = [&](std::span<const double> x, double step) {
    work.set_parameters(x);
    return backend.energy_gradient(work, step);
  };
  const MinimizeResult m = minimize(f, init.parameters(), settings, rng, g);
  OptimizeResult out{init, m.value, m.converged, m.evaluations};
  out.ansatz.set_parameters(m.x);
  return out;
}

// ------------------------------------------------------------------ records

double RunRecord::final_energy() const {
  return iterations.empty() ? initial_energy : iterations.back().energy;
}

double RunRecord::final_mean_cut() const {
  return energy_to_cut(instance, final_energy());
}

double RunRecord::final_alpha() const {
  return v_max > 0.0 ? final_mean_cut() / v_max : 0.0;
}

std::size_t RunRecord::final_cnot_count() const {
  return iterations.empty() ? 0 : iterations.back().cnot_count;
}

Ansatz RunRecord::ansatz_at(std::size_t p) const {
  if (p > iterations.size())
    throw Error(ErrorCode::InvalidParameter,
                "iteration " + std::to_string(p) + " not in record");
  Ansatz a{instance.size(), {}};
  if (p == 0)
    return a;
  const IterationRecord &it = iterations[p - 1];
  std::size_t g = 0;
  for (std::size_t k = 0; k < p; ++k) {
    AnsatzLayer layer{std::nullopt, iterations[k].mixer, it.betas.at(k)};
    if (iterations[k].has_cost)
      layer.gamma = it.gammas.at(g++);
    a.layers.push_back(std::move(layer));
  }
  return a;
}

namespace {

void record_parameters(const Ansatz &a, IterationRecord &it) {
  it.betas.clear();
  it.gammas.clear();
  for (const auto &layer : a.layers) {
    it.betas.push_back(layer.beta);
    if (layer.gamma)
      it.gammas.push_back(*layer.gamma);
  }
}

} // namespace

RunRecord run_adapt(const MaxCutInstance &inst, const AdaptConfig &config,
                    const EnergyBackend &backend) {
  config.validate();
  if (!(backend.instance() == inst))
    throw Error(ErrorCode::InvalidParameter,
                "backend built for a different instance");
  const std::size_t n = inst.size();
  const IsingHamiltonian &h = backend.hamiltonian();
  const std::vector<Mixer> pool = mixer_pool(n);
  const double gt = config.gamma_offset;
  const double g_init = config.gamma_init.value_or(gt);

  RunRecord rec(inst, config);
  rec.p_gate = backend.p_gate();
  rec.v_max = brute_force_max_cut(inst).value;

  Rng rng(config.seed);
  Ansatz ansatz{n, {}};
  QuantumState state = backend.prepare(ansatz);
  double e_prev = expectation(state, h);
  rec.initial_energy = e_prev;

  for (std::size_t p = 1; p <= config.max_layers; ++p) {
    IterationRecord it;
    it.p = p;
    AnsatzLayer layer{std::nullopt, Mixer::global_x(), 0.0};

    auto offset_pick = [&](std::span<const Mixer> candidates) {
      const QuantumState plus = backend.apply_cost(state, gt);
      const QuantumState minus = backend.apply_cost(state, -gt);
      const OffsetSelection sel =
          select_mixer_offset(plus, minus, h, candidates);
      const PoolGradient &g = sel.gradients[sel.index];
      layer.mixer = candidates[sel.index];
      layer.gamma = sel.sign * g_init;
      it.offset_sign = sel.sign;
      it.selected_gradient =
          std::max(std::abs(*g.grad_plus), std::abs(*g.grad_minus));
    };

    if (config.variant == Variant::Standard) {
      offset_pick(pool);
    } else {
      const ZeroSelection zs = select_mixer_zero(state, h, pool);
      const Mixer &a = pool[zs.index];
      layer.mixer = a;
      it.selected_gradient = std::abs(zs.gradients[zs.index].grad0);
      if (config.variant != Variant::DynamicNoCost && a.is_pauli_string()) {
        const IsingHamiltonian h_plus = split_hamiltonian(h, a).anticommuting;
        it.skip.evaluated = true;
        it.skip.bcd = bcd_coefficients(state, a, h_plus);
        it.skip.fired =
            skip_condition(it.skip.bcd, config.delta1, config.delta2);
      }
      if (config.variant == Variant::DynamicNoCost || it.skip.fired) {
        // Mixer-only layer.
      } else if (config.variant == Variant::Dynamic) {
        offset_pick(pool);
      } else {
        offset_pick(std::span<const Mixer>(&a, 1));
      }
    }

    it.mixer = layer.mixer;
    it.has_cost = layer.has_cost();
    ansatz.layers.push_back(std::move(layer));

    const OptimizeResult opt =
        optimize_parameters(ansatz, backend, config.optimizer, rng);
    ansatz = opt.ansatz;
    state = backend.prepare(ansatz);
    const double e = opt.energy;

    record_parameters(ansatz, it);
    it.energy = e;
    it.cnot_count = cnot_count(ansatz, inst);
    it.alpha = rec.v_max > 0.0 ? energy_to_cut(inst, e) / rec.v_max : 0.0;
    it.optimizer_converged = opt.converged;
    it.monotone = e <= e_prev + 1e-8;
    rec.iterations.push_back(std::move(it));

    if (std::abs(e_prev - e) < config.epsilon)
      break;
    e_prev = e;
  }
  return rec;
}

RunRecord run_standard(const MaxCutInstance &inst, AdaptConfig config) {
  config.variant = Variant::Standard;
  return run_adapt(inst, config, PureBackend(inst));
}

RunRecord run_dynamic(const MaxCutInstance &inst, AdaptConfig config) {
  if (config.variant == Variant::Standard)
    config.variant = Variant::Dynamic;
  const PureBackend backend(inst);
  if (!config.delta2_search)
    return run_adapt(inst, config, backend);
  config.validate();
  std::optional<RunRecord> best;
  for (double d2 : config.delta2_grid) {
    AdaptConfig c = config;
    c.delta2 = d2;
    RunRecord r = run_adapt(inst, c, backend);
    // Ties within 1e-12 prefer fewer CNOTs, then the earlier grid value.
    if (!best || r.final_energy() < best->final_energy() - 1e-12 ||
        (std::abs(r.final_energy() - best->final_energy()) <= 1e-12 &&
         r.final_cnot_count() < best->final_cnot_count()))
      best = std::move(r);
  }
  return std::move(*best);
}

RunRecord run_algorithm(const MaxCutInstance &inst, const AdaptConfig &config) {
  return config.variant == Variant::Standard ? run_standard(inst, config)
                                             : run_dynamic(inst, config);
}

} // namespace dynadapt
