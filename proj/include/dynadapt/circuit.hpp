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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dynadapt {

enum class GateKind { CNOT, RZ, RX, RY, H, S, Sdg };

/// Rotations follow R_P(theta) = exp(-i theta P / 2). For CNOT, `qubit` is
/// the control.
struct Gate {
  GateKind kind;
  std::size_t qubit;
  std::size_t target = 0;
  double angle = 0.0;

  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, control, target, 0.0};
  }
  static Gate rz(std::size_t q, double a) { return {GateKind::RZ, q, 0, a}; }
  static Gate rx(std::size_t q, double a) { return {GateKind::RX, q, 0, a}; }
  static Gate ry(std::size_t q, double a) { return {GateKind::RY, q, 0, a}; }
  static Gate h(std::size_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate s(std::size_t q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdg(std::size_t q) { return {GateKind::Sdg, q, 0, 0.0}; }

  bool operator==(const Gate &) const = default;
};

/// One round exp(-i beta A) exp(-i gamma H); the cost factor is absent when
/// `gamma` is empty.
struct AnsatzLayer {
  std::optional<double> gamma;
  Mixer mixer;
  double beta = 0.0;

  bool has_cost() const noexcept { return gamma.has_value(); }
};

/// Layers in application order (layer 1 acts first on |+...+>).
struct Ansatz {
  std::size_t n = 0;
  std::vector<AnsatzLayer> layers;

  std::size_t cost_layer_count() const;
  /// Flattened parameters, per layer [gamma (if present), beta].
  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> values);
  std::size_t parameter_count() const;
};

/// Per edge i<j (lexicographic): CNOT(i,j) RZ(j, gamma W_ij) CNOT(i,j).
void append_cost_gates(std::vector<Gate> &gates, const MaxCutInstance &inst,
                       double gamma);
void append_mixer_gates(std::vector<Gate> &gates, const Mixer &mixer,
                        std::size_t n, double beta);

std::vector<Gate> compile(const Ansatz &ansatz, const MaxCutInstance &inst);
std::size_t cnot_count(const Ansatz &ansatz, const MaxCutInstance &inst);
std::size_t cnot_count(std::span<const Gate> gates);

/// Text dump, one gate per line ("CNOT c t", "RZ q angle", "H q", ...),
/// angles with 17 significant digits.
std::string dump_gates(std::span<const Gate> gates);
std::vector<Gate> parse_gates(std::string_view text);

} // namespace dynadapt
