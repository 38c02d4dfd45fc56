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
#include "dynadapt/pauli.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace dynadapt {

using Amplitude = std::complex<double>;

class StateVector {
public:
  /// |+>^n.
  static StateVector plus_state(std::size_t n);
  StateVector(std::size_t n, std::vector<Amplitude> amplitudes);

  std::size_t qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }

  void apply(const Gate &gate);
  /// |psi> <- exp(-i gamma diag)|psi>.
  void apply_phase(std::span<const double> diagonal, double gamma);
  /// |psi> <- exp(-i beta P)|psi> = cos(beta)|psi> - i sin(beta) P|psi>.
  void apply_pauli_rotation(const PauliString &pauli, double beta);
  void apply_mixer(const Mixer &mixer, double beta);

  double norm() const;
  double diagonal_expectation(std::span<const double> diagonal) const;
  /// <psi| P F |psi> for diagonal F.
  Amplitude pauli_diagonal_expectation(const PauliString &pauli,
                                       std::span<const double> diagonal) const;

private:
  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Full 2^n x 2^n density matrix, row-major.
class DensityMatrix {
public:
  static DensityMatrix plus_state(std::size_t n);
  static DensityMatrix from_pure(const StateVector &psi);
  DensityMatrix(std::size_t n, std::vector<Amplitude> elements);

  std::size_t qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const Amplitude> elements() const noexcept { return rho_; }
  const Amplitude &operator()(std::size_t r, std::size_t c) const {
    return rho_[r * dim_ + c];
  }

  /// rho <- U rho U^dag.
  void apply(const Gate &gate);
  /// (1-p) rho + (p/3) sum_{s in X,Y,Z} s_q rho s_q.
  void depolarize(std::size_t qubit, double p);
  /// The noisy edge block CNOT(c,t) RZ_t(theta) CNOT(c,t) with a
  /// depolarizing channel on t after each CNOT, applied in one pass.
  void apply_noisy_zz(std::size_t control, std::size_t target, double theta,
                      double p);
  void apply_phase(std::span<const double> diagonal, double gamma);

  Amplitude trace() const;
  double diagonal_expectation(std::span<const double> diagonal) const;
  /// tr(rho P F) for diagonal F.
  Amplitude pauli_diagonal_expectation(const PauliString &pauli,
                                       std::span<const double> diagonal) const;
  /// tr(rho_a rho_b) for Hermitian operands.
  double overlap(const DensityMatrix &other) const;

private:
  void apply_single(std::size_t q, const Amplitude (&u)[2][2]);

  std::size_t n_;
  std::size_t dim_;
  std::vector<Amplitude> rho_;
};

/// Either a pure state vector or a density matrix.
class QuantumState {
public:
  QuantumState(StateVector psi) : repr_(std::move(psi)) {}
  QuantumState(DensityMatrix rho) : repr_(std::move(rho)) {}

  bool is_pure() const noexcept {
    return std::holds_alternative<StateVector>(repr_);
  }
  std::size_t qubits() const;
  const StateVector &vector() const { return std::get<StateVector>(repr_); }
  const DensityMatrix &density() const { return std::get<DensityMatrix>(repr_); }
  StateVector &vector() { return std::get<StateVector>(repr_); }
  DensityMatrix &density() { return std::get<DensityMatrix>(repr_); }

  void apply_phase(std::span<const double> diagonal, double gamma);
  double diagonal_expectation(std::span<const double> diagonal) const;
  Amplitude pauli_diagonal_expectation(const PauliString &pauli,
                                       std::span<const double> diagonal) const;

private:
  std::variant<StateVector, DensityMatrix> repr_;
};

inline constexpr std::size_t kDensityQubitLimit = 12;

/// Applies `gates` left to right to |+>^n.
QuantumState simulate_pure(std::span<const Gate> gates, std::size_t n);
/// Density-matrix run from |+><+|^n with a depolarizing channel on the target
/// of every CNOT. Single-qubit gates are noiseless.
QuantumState simulate_noisy(std::span<const Gate> gates, std::size_t n,
                            double p_gate);
void apply_noisy(DensityMatrix &rho, std::span<const Gate> gates,
                 double p_gate);

double expectation(const QuantumState &state, const IsingHamiltonian &h);

/// Exact layer-by-layer evolution without gate compilation: cost layers are
/// diagonal phases, mixers exact Pauli rotations.
StateVector evolve_layers(const Ansatz &ansatz, const IsingHamiltonian &h);

} // namespace dynadapt
