/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/maxcut.hpp"
#include "dynadapt/pauli.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace dynadapt {

/// coefficient * Z_i Z_j with i < j.
struct IsingTerm {
  std::size_t i;
  std::size_t j;
  double coefficient;
  bool operator==(const IsingTerm &) const = default;
};

inline constexpr std::size_t kStateVectorQubitLimit = 24;

/// Diagonal ZZ Hamiltonian sum_t c_t Z_i Z_j with its 2^n eigenvalues
/// cached. Eigenvalue convention: Z|0> = +|0>, so z_q(k) = 1 - 2 * bit_q(k).
class IsingHamiltonian {
public:
  IsingHamiltonian(std::size_t n, std::vector<IsingTerm> terms);

  std::size_t qubits() const noexcept { return n_; }
  std::span<const IsingTerm> terms() const noexcept { return terms_; }
  std::span<const double> diagonal() const noexcept { return diagonal_; }
  bool empty() const noexcept { return terms_.empty(); }
  double ground_energy() const;

private:
  std::size_t n_;
  std::vector<IsingTerm> terms_;
  std::vector<double> diagonal_;
};

/// H = (1/4) sum_{i,j} W_ij Z_i Z_j written per edge as (W_ij / 2) Z_i Z_j,
/// edges in lexicographic order, zero-weight edges omitted.
IsingHamiltonian build_hamiltonian(const MaxCutInstance &inst);

/// H = H_minus + H_plus with [A, H_minus] = 0 and {A, H_plus} = 0.
struct HamiltonianSplit {
  IsingHamiltonian commuting;
  IsingHamiltonian anticommuting;
};

/// An edge Z_i Z_j anticommutes with a Pauli string exactly when an odd
/// number of the string's X/Y factors sit on {i, j}. Throws
/// Error(UnsupportedMixer) for the global mixers.
HamiltonianSplit split_hamiltonian(const IsingHamiltonian &h, const Mixer &mixer);

bool anticommutes(const IsingTerm &term, const PauliString &pauli);

} // namespace dynadapt
