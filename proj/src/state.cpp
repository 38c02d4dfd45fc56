/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/state.hpp"

#include "dynadapt/error.hpp"

#include <cmath>
#include <string>

namespace dynadapt {

namespace {

constexpr Amplitude kI{0.0, 1.0};

struct Single {
  Amplitude u[2][2];
  bool diagonal;
};

Single single_qubit_matrix(const Gate &g) {
  const double c = std::cos(g.angle / 2.0);
  const double s = std::sin(g.angle / 2.0);
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
  case GateKind::RZ:
    return {{{std::polar(1.0, -g.angle / 2.0), 0.0},
             {0.0, std::polar(1.0, g.angle / 2.0)}},
            true};
  case GateKind::RX:
    return {{{c, -kI * s}, {-kI * s, c}}, false};
  case GateKind::RY:
    return {{{c, -s}, {s, c}}, false};
  case GateKind::H:
    return {{{r, r}, {r, -r}}, false};
  case GateKind::S:
    return {{{1.0, 0.0}, {0.0, kI}}, true};
  case GateKind::Sdg:
    return {{{1.0, 0.0}, {0.0, -kI}}, true};
  case GateKind::CNOT:
    break;
  }
  throw Error(ErrorCode::InvalidParameter, "CNOT is not a single-qubit gate");
}

void check_gate(const Gate &g, std::size_t n) {
  if (g.qubit >= n || (g.kind == GateKind::CNOT &&
                       (g.target >= n || g.target == g.qubit)))
    throw Error(ErrorCode::Dimension,
                "gate acts outside the " + std::to_string(n) + "-qubit register");
  if (!std::isfinite(g.angle))
    throw Error(ErrorCode::InvalidParameter, "gate angle is not finite");
}

std::size_t checked_dim(std::size_t n, std::size_t limit, const char *what) {
  if (n > limit)
    throw Error(ErrorCode::ResourceLimit, std::string(what) + " limited to " +
                                              std::to_string(limit) +
                                              " qubits, requested " +
                                              std::to_string(n));
  return std::size_t{1} << n;
}

} // namespace

// ---------------------------------------------------------------- StateVector

StateVector StateVector::plus_state(std::size_t n) {
  const std::size_t dim = checked_dim(n, kStateVectorQubitLimit, "state vectors");
  return StateVector(n, std::vector<Amplitude>(dim, 1.0 / std::sqrt(double(dim))));
}

StateVector::StateVector(std::size_t n, std::vector<Amplitude> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
  if (amps_.size() != checked_dim(n, kStateVectorQubitLimit, "state vectors"))
    throw Error(ErrorCode::Dimension, "amplitude count does not match 2^n");
}

void StateVector::apply(const Gate &g) {
  check_gate(g, n_);
  if (g.kind == GateKind::CNOT) {
    const std::size_t cm = std::size_t{1} << g.qubit;
    const std::size_t tm = std::size_t{1} << g.target;
    for (std::size_t k = 0; k < amps_.size(); ++k)
      if ((k & cm) && !(k & tm))
        std::swap(amps_[k], amps_[k | tm]);
    return;
  }
  const Single m = single_qubit_matrix(g);
  const std::size_t bit = std::size_t{1} << g.qubit;
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    if (k & bit)
      continue;
    const Amplitude a = amps_[k];
    const Amplitude b = amps_[k | bit];
    amps_[k] = m.u[0][0] * a + m.u[0][1] * b;
    amps_[k | bit] = m.u[1][0] * a + m.u[1][1] * b;
  }
}

void StateVector::apply_phase(std::span<const double> diagonal, double gamma) {
  if (diagonal.size() != amps_.size())
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  for (std::size_t k = 0; k < amps_.size(); ++k)
    amps_[k] *= std::polar(1.0, -gamma * diagonal[k]);
}

void StateVector::apply_pauli_rotation(const PauliString &pauli, double beta) {
  if (pauli.support_end() > n_)
    throw Error(ErrorCode::Dimension, "Pauli string " + pauli.to_string() +
                                          " exceeds the register");
  const double c = std::cos(beta);
  const Amplitude ms = -kI * std::sin(beta);
  const std::uint64_t flip = pauli.flip_mask();
  if (flip == 0) {
    for (std::size_t k = 0; k < amps_.size(); ++k)
      amps_[k] *= c + ms * pauli.phase(k);
    return;
  }
  for (std::size_t k = 0; k < amps_.size(); ++k) {
    const std::size_t j = k ^ flip;
    if (j < k)
      continue;
    const Amplitude a = amps_[k];
    const Amplitude b = amps_[j];
    // (P psi)_k = phase(j) psi_j and (P psi)_j = phase(k) psi_k.
    amps_[k] = c * a + ms * pauli.phase(j) * b;
    amps_[j] = c * b + ms * pauli.phase(k) * a;
  }
}

void StateVector::apply_mixer(const Mixer &mixer, double beta) {
  for (const auto &term : mixer.terms(n_))
    apply_pauli_rotation(term, beta);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &a : amps_)
    s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::diagonal_expectation(std::span<const double> diagonal) const {
  if (diagonal.size() != amps_.size())
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  double e = 0.0;
  for (std::size_t k = 0; k < amps_.size(); ++k)
    e += std::norm(amps_[k]) * diagonal[k];
  return e;
}

Amplitude StateVector::pauli_diagonal_expectation(
    const PauliString &pauli, std::span<const double> diagonal) const {
  if (diagonal.size() != amps_.size())
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  const std::uint64_t flip = pauli.flip_mask();
  Amplitude sum = 0.0;
  for (std::size_t k = 0; k < amps_.size(); ++k)
    sum += std::conj(amps_[k ^ flip]) * pauli.phase(k) * (diagonal[k] * amps_[k]);
  return sum;
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix DensityMatrix::plus_state(std::size_t n) {
  const std::size_t dim = checked_dim(n, kDensityQubitLimit, "density matrices");
  return DensityMatrix(n, std::vector<Amplitude>(dim * dim, 1.0 / double(dim)));
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
  const std::size_t dim =
      checked_dim(psi.qubits(), kDensityQubitLimit, "density matrices");
  std::vector<Amplitude> rho(dim * dim);
  const auto a = psi.amplitudes();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      rho[r * dim + c] = a[r] * std::conj(a[c]);
  return DensityMatrix(psi.qubits(), std::move(rho));
}

DensityMatrix::DensityMatrix(std::size_t n, std::vector<Amplitude> elements)
    : n_(n), dim_(checked_dim(n, kDensityQubitLimit, "density matrices")),
      rho_(std::move(elements)) {
  if (rho_.size() != dim_ * dim_)
    throw Error(ErrorCode::Dimension, "density matrix must have 4^n elements");
}

void DensityMatrix::apply_single(std::size_t q, const Amplitude (&u)[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  // Left multiplication: mix row pairs.
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & bit)
      continue;
    Amplitude *row0 = &rho_[r * dim_];
    Amplitude *row1 = &rho_[(r | bit) * dim_];
    for (std::size_t c = 0; c < dim_; ++c) {
      const Amplitude a = row0[c];
      const Amplitude b = row1[c];
      row0[c] = u[0][0] * a + u[0][1] * b;
      row1[c] = u[1][0] * a + u[1][1] * b;
    }
  }
  // Right multiplication by U^dag: mix column pairs with conj(U).
  const Amplitude v00 = std::conj(u[0][0]), v01 = std::conj(u[0][1]);
  const Amplitude v10 = std::conj(u[1][0]), v11 = std::conj(u[1][1]);
  for (std::size_t r = 0; r < dim_; ++r) {
    Amplitude *row = &rho_[r * dim_];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & bit)
        continue;
      const Amplitude a = row[c];
      const Amplitude b = row[c | bit];
      row[c] = a * v00 + b * v01;
      row[c | bit] = a * v10 + b * v11;
    }
  }
}

void DensityMatrix::apply(const Gate &g) {
  check_gate(g, n_);
  if (g.kind == GateKind::CNOT) {
    const std::size_t cm = std::size_t{1} << g.qubit;
    const std::size_t tm = std::size_t{1} << g.target;
    auto perm = [&](std::size_t k) { return (k & cm) ? (k ^ tm) : k; };
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t pr = perm(r);
      for (std::size_t c = 0; c < dim_; ++c) {
        const std::size_t from = r * dim_ + c;
        const std::size_t to = pr * dim_ + perm(c);
        if (from < to)
          std::swap(rho_[from], rho_[to]);
      }
    }
    return;
  }
  const Single m = single_qubit_matrix(g);
  if (m.diagonal) {
    const std::size_t bit = std::size_t{1} << g.qubit;
    const Amplitude d[2] = {m.u[0][0], m.u[1][1]};
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        rho_[r * dim_ + c] *= d[(r & bit) ? 1 : 0] * std::conj(d[(c & bit) ? 1 : 0]);
    return;
  }
  apply_single(g.qubit, m.u);
}

void DensityMatrix::depolarize(std::size_t qubit, double p) {
  if (qubit >= n_)
    throw Error(ErrorCode::Dimension, "depolarizing qubit outside register");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  if (p == 0.0)
    return;
  // sum_s s rho s = 2 I (x) tr_q(rho) - rho on the 2x2 blocks of qubit q.
  const double keep = 1.0 - 2.0 * p / 3.0;
  const double move = 2.0 * p / 3.0;
  const double coherence = 1.0 - 4.0 * p / 3.0;
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & bit)
      continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & bit)
        continue;
      Amplitude &a00 = rho_[r * dim_ + c];
      Amplitude &a01 = rho_[r * dim_ + (c | bit)];
      Amplitude &a10 = rho_[(r | bit) * dim_ + c];
      Amplitude &a11 = rho_[(r | bit) * dim_ + (c | bit)];
      const Amplitude x00 = a00, x11 = a11;
      a00 = keep * x00 + move * x11;
      a11 = keep * x11 + move * x00;
      a01 *= coherence;
      a10 *= coherence;
    }
  }
}

void DensityMatrix::apply_noisy_zz(std::size_t control, std::size_t target,
                                   double theta, double p) {
  if (control >= n_ || target >= n_ || control == target)
    throw Error(ErrorCode::Dimension, "bad qubit pair for ZZ block");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  // Depolarizing on t commutes with RZ_t, and moving the first channel past
  // the second CNOT turns its Kraus set into {I, X_t, Z_c Y_t, Z_c Z_t}. The
  // block is then exp(-i theta/2 Z_c Z_t) followed by both Pauli channels.
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  const double q = p / 3.0;
  const double keep = 1.0 - 2.0 * q;
  const double coherence = 1.0 - 4.0 * q;
  // Coefficients per (control bit of r, control bit of c). Within a 2x2
  // block over t the map is a00' = k[0] a00 + k[1] a11, a11' = k[2] a11 +
  // k[3] a00, a01' = k[4] a01 + k[5] a10, a10' = k[6] a10 + k[7] a01.
  Amplitude coef[2][2][8];
  for (int rc = 0; rc < 2; ++rc)
    for (int cc = 0; cc < 2; ++cc) {
      // Parity of (control, target=0) gives the ZZ sign; entries pick up
      // exp(i theta (zz(r) - zz(c))) with zz in {0, 1}.
      const int d = rc - cc;
      const int e = rc + cc - 1;
      const Amplitude f00 = std::polar(1.0, theta * d);
      const Amplitude f11 = std::polar(1.0, -theta * d);
      const Amplitude f01 = std::polar(1.0, theta * e);
      const Amplitude f10 = std::polar(1.0, -theta * e);
      const double sg = rc == cc ? 1.0 : -1.0;
      const double diag = 1.0 - p + q * sg, swap_d = q * (1.0 + sg);
      const double off = 1.0 - p - q * sg, swap_o = q * (1.0 - sg);
      Amplitude *k = coef[rc][cc];
      k[0] = (keep * diag + 2.0 * q * swap_d) * f00;
      k[1] = (keep * swap_d + 2.0 * q * diag) * f11;
      k[2] = (keep * diag + 2.0 * q * swap_d) * f11;
      k[3] = (keep * swap_d + 2.0 * q * diag) * f00;
      k[4] = coherence * off * f01;
      k[5] = coherence * swap_o * f10;
      k[6] = coherence * off * f10;
      k[7] = coherence * swap_o * f01;
    }
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & tb)
      continue;
    Amplitude *row0 = &rho_[r * dim_];
    Amplitude *row1 = &rho_[(r | tb) * dim_];
    const auto &byc = coef[(r & cb) ? 1 : 0];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & tb)
        continue;
      const Amplitude *k = byc[(c & cb) ? 1 : 0];
      const Amplitude x00 = row0[c], x01 = row0[c | tb];
      const Amplitude x10 = row1[c], x11 = row1[c | tb];
      row0[c] = k[0] * x00 + k[1] * x11;
      row1[c | tb] = k[2] * x11 + k[3] * x00;
      row0[c | tb] = k[4] * x01 + k[5] * x10;
      row1[c] = k[6] * x10 + k[7] * x01;
    }
  }
}

void DensityMatrix::apply_phase(std::span<const double> diagonal, double gamma) {
  if (diagonal.size() != dim_)
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  std::vector<Amplitude> phase(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    phase[k] = std::polar(1.0, -gamma * diagonal[k]);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      rho_[r * dim_ + c] *= phase[r] * std::conj(phase[c]);
}

Amplitude DensityMatrix::trace() const {
  Amplitude t = 0.0;
  for (std::size_t k = 0; k < dim_; ++k)
    t += rho_[k * dim_ + k];
  return t;
}

double DensityMatrix::diagonal_expectation(std::span<const double> diagonal) const {
  if (diagonal.size() != dim_)
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  double e = 0.0;
  for (std::size_t k = 0; k < dim_; ++k)
    e += rho_[k * dim_ + k].real() * diagonal[k];
  return e;
}

Amplitude DensityMatrix::pauli_diagonal_expectation(
    const PauliString &pauli, std::span<const double> diagonal) const {
  if (diagonal.size() != dim_)
    throw Error(ErrorCode::Dimension, "diagonal size does not match state");
  const std::uint64_t flip = pauli.flip_mask();
  Amplitude sum = 0.0;
  for (std::size_t k = 0; k < dim_; ++k)
    sum += diagonal[k] * pauli.phase(k) * rho_[k * dim_ + (k ^ flip)];
  return sum;
}

double DensityMatrix::overlap(const DensityMatrix &other) const {
  if (other.dim_ != dim_)
    throw Error(ErrorCode::Dimension, "density matrices differ in size");
  double s = 0.0;
  for (std::size_t k = 0; k < rho_.size(); ++k)
    s += (rho_[k] * std::conj(other.rho_[k])).real();
  return s;
}

// --------------------------------------------------------------- QuantumState

std::size_t QuantumState::qubits() const {
  return std::visit([](const auto &s) { return s.qubits(); }, repr_);
}

void QuantumState::apply_phase(std::span<const double> diagonal, double gamma) {
  std::visit([&](auto &s) { s.apply_phase(diagonal, gamma); }, repr_);
}

double QuantumState::diagonal_expectation(std::span<const double> diagonal) const {
  return std::visit([&](const auto &s) { return s.diagonal_expectation(diagonal); },
                    repr_);
}

Amplitude QuantumState::pauli_diagonal_expectation(
    const PauliString &pauli, std::span<const double> diagonal) const {
  return std::visit(
      [&](const auto &s) { return s.pauli_diagonal_expectation(pauli, diagonal); },
      repr_);
}

// ----------------------------------------------------------------- simulation

QuantumState simulate_pure(std::span<const Gate> gates, std::size_t n) {
  StateVector psi = StateVector::plus_state(n);
  for (const auto &g : gates)
    psi.apply(g);
  return psi;
}

void apply_noisy(DensityMatrix &rho, std::span<const Gate> gates, double p_gate) {
  if (!(p_gate >= 0.0 && p_gate <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate &g = gates[k];
    if (g.kind == GateKind::CNOT && k + 2 < gates.size()) {
      const Gate &mid = gates[k + 1];
      const Gate &last = gates[k + 2];
      if (mid.kind == GateKind::RZ && mid.qubit == g.target &&
          last.kind == GateKind::CNOT && last.qubit == g.qubit &&
          last.target == g.target) {
        check_gate(mid, rho.qubits());
        rho.apply_noisy_zz(g.qubit, g.target, mid.angle, p_gate);
        k += 2;
        continue;
      }
    }
    rho.apply(g);
    if (g.kind == GateKind::CNOT)
      rho.depolarize(g.target, p_gate);
  }
}

QuantumState simulate_noisy(std::span<const Gate> gates, std::size_t n,
                            double p_gate) {
  if (!(p_gate >= 0.0 && p_gate <= 1.0))
    throw Error(ErrorCode::InvalidParameter, "p_gate must lie in [0, 1]");
  DensityMatrix rho = DensityMatrix::plus_state(n);
  apply_noisy(rho, gates, p_gate);
  return rho;
}

double expectation(const QuantumState &state, const IsingHamiltonian &h) {
  if (state.qubits() != h.qubits())
    throw Error(ErrorCode::Dimension, "state and Hamiltonian sizes differ");
  return state.diagonal_expectation(h.diagonal());
}

StateVector evolve_layers(const Ansatz &ansatz, const IsingHamiltonian &h) {
  if (ansatz.n != h.qubits())
    throw Error(ErrorCode::Dimension, "ansatz and Hamiltonian sizes differ");
  StateVector psi = StateVector::plus_state(ansatz.n);
  for (const auto &layer : ansatz.layers) {
    if (layer.gamma)
      psi.apply_phase(h.diagonal(), *layer.gamma);
    psi.apply_mixer(layer.mixer, layer.beta);
  }
  return psi;
}

} // namespace dynadapt
