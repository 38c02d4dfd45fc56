/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/hamiltonian.hpp"

#include "dynadapt/error.hpp"

#include <algorithm>
#include <string>

namespace dynadapt {

IsingHamiltonian::IsingHamiltonian(std::size_t n, std::vector<IsingTerm> terms)
    : n_(n), terms_(std::move(terms)) {
  if (n_ > kStateVectorQubitLimit)
    throw Error(ErrorCode::ResourceLimit,
                "Hamiltonian limited to " +
                    std::to_string(kStateVectorQubitLimit) + " qubits");
  for (const auto &t : terms_)
    if (t.i >= t.j || t.j >= n_)
      throw Error(ErrorCode::Dimension,
                  "Ising term (" + std::to_string(t.i) + "," +
                      std::to_string(t.j) + ") invalid for " +
                      std::to_string(n_) + " qubits");
  const std::size_t dim = std::size_t{1} << n_;
  diagonal_.assign(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    double e = 0.0;
    for (const auto &t : terms_) {
      const bool anti = (((k >> t.i) ^ (k >> t.j)) & 1u) != 0;
      e += anti ? -t.coefficient : t.coefficient;
    }
    diagonal_[k] = e;
  }
}

double IsingHamiltonian::ground_energy() const {
  return *std::min_element(diagonal_.begin(), diagonal_.end());
}

IsingHamiltonian build_hamiltonian(const MaxCutInstance &inst) {
  const std::size_t n = inst.size();
  std::vector<IsingTerm> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (inst.weight(i, j) != 0.0)
        terms.push_back({i, j, inst.weight(i, j) / 2.0});
  return IsingHamiltonian(n, std::move(terms));
}

bool anticommutes(const IsingTerm &term, const PauliString &pauli) {
  const std::uint64_t edge = (1ull << term.i) | (1ull << term.j);
  return (std::popcount(pauli.flip_mask() & edge) & 1) != 0;
}

HamiltonianSplit split_hamiltonian(const IsingHamiltonian &h,
                                   const Mixer &mixer) {
  const PauliString &pauli = mixer.pauli();
  std::vector<IsingTerm> minus, plus;
  for (const auto &t : h.terms())
    (anticommutes(t, pauli) ? plus : minus).push_back(t);
  return {IsingHamiltonian(h.qubits(), std::move(minus)),
          IsingHamiltonian(h.qubits(), std::move(plus))};
}

} // namespace dynadapt
