/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/circuit.hpp"

#include "dynadapt/error.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dynadapt {

std::size_t Ansatz::cost_layer_count() const {
  std::size_t count = 0;
  for (const auto &layer : layers)
    count += layer.has_cost() ? 1 : 0;
  return count;
}

std::size_t Ansatz::parameter_count() const {
  return layers.size() + cost_layer_count();
}

std::vector<double> Ansatz::parameters() const {
  std::vector<double> out;
  out.reserve(parameter_count());
  for (const auto &layer : layers) {
    if (layer.gamma)
      out.push_back(*layer.gamma);
    out.push_back(layer.beta);
  }
  return out;
}

void Ansatz::set_parameters(std::span<const double> values) {
  if (values.size() != parameter_count())
    throw Error(ErrorCode::Dimension,
                "ansatz expects " + std::to_string(parameter_count()) +
                    " parameters, got " + std::to_string(values.size()));
  std::size_t k = 0;
  for (auto &layer : layers) {
    if (layer.gamma)
      layer.gamma = values[k++];
    layer.beta = values[k++];
  }
}

void append_cost_gates(std::vector<Gate> &gates, const MaxCutInstance &inst,
                       double gamma) {
  const std::size_t n = inst.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = inst.weight(i, j);
      if (w == 0.0)
        continue;
      gates.push_back(Gate::cnot(i, j));
      gates.push_back(Gate::rz(j, gamma * w));
      gates.push_back(Gate::cnot(i, j));
    }
}

namespace {

// Clifford V with V Z V^dag = P, emitted as the gates for V^dag (before the
// ZZ rotation) and V (after).
void basis_in(std::vector<Gate> &gates, PauliOp op, std::size_t q) {
  if (op == PauliOp::X) {
    gates.push_back(Gate::h(q));
  } else if (op == PauliOp::Y) {
    gates.push_back(Gate::sdg(q));
    gates.push_back(Gate::h(q));
  }
}

void basis_out(std::vector<Gate> &gates, PauliOp op, std::size_t q) {
  if (op == PauliOp::X) {
    gates.push_back(Gate::h(q));
  } else if (op == PauliOp::Y) {
    gates.push_back(Gate::h(q));
    gates.push_back(Gate::s(q));
  }
}

void append_single_rotation(std::vector<Gate> &gates, PauliOp op,
                            std::size_t q, double angle) {
  switch (op) {
  case PauliOp::X:
    gates.push_back(Gate::rx(q, angle));
    break;
  case PauliOp::Y:
    gates.push_back(Gate::ry(q, angle));
    break;
  case PauliOp::Z:
    gates.push_back(Gate::rz(q, angle));
    break;
  }
}

} // namespace

void append_mixer_gates(std::vector<Gate> &gates, const Mixer &mixer,
                        std::size_t n, double beta) {
  switch (mixer.kind()) {
  case Mixer::Kind::GlobalX:
    for (std::size_t q = 0; q < n; ++q)
      gates.push_back(Gate::rx(q, 2.0 * beta));
    return;
  case Mixer::Kind::GlobalY:
    for (std::size_t q = 0; q < n; ++q)
      gates.push_back(Gate::ry(q, 2.0 * beta));
    return;
  case Mixer::Kind::Single:
    break;
  }
  const auto factors = mixer.pauli().factors();
  if (mixer.pauli().support_end() > n)
    throw Error(ErrorCode::Dimension,
                "mixer " + mixer.to_string() + " does not fit on " +
                    std::to_string(n) + " qubits");
  if (factors.size() == 1) {
    append_single_rotation(gates, factors[0].op, factors[0].qubit, 2.0 * beta);
    return;
  }
  const auto &a = factors[0];
  const auto &b = factors[1];
  basis_in(gates, a.op, a.qubit);
  basis_in(gates, b.op, b.qubit);
  gates.push_back(Gate::cnot(a.qubit, b.qubit));
  gates.push_back(Gate::rz(b.qubit, 2.0 * beta));
  gates.push_back(Gate::cnot(a.qubit, b.qubit));
  basis_out(gates, a.op, a.qubit);
  basis_out(gates, b.op, b.qubit);
}

std::vector<Gate> compile(const Ansatz &ansatz, const MaxCutInstance &inst) {
  if (ansatz.n != inst.size())
    throw Error(ErrorCode::Dimension,
                "ansatz has " + std::to_string(ansatz.n) +
                    " qubits, instance has " + std::to_string(inst.size()));
  std::vector<Gate> gates;
  for (const auto &layer : ansatz.layers) {
    if (layer.gamma)
      append_cost_gates(gates, inst, *layer.gamma);
    append_mixer_gates(gates, layer.mixer, ansatz.n, layer.beta);
  }
  return gates;
}

std::size_t cnot_count(std::span<const Gate> gates) {
  std::size_t count = 0;
  for (const auto &g : gates)
    count += g.kind == GateKind::CNOT ? 1 : 0;
  return count;
}

std::size_t cnot_count(const Ansatz &ansatz, const MaxCutInstance &inst) {
  if (ansatz.n != inst.size())
    throw Error(ErrorCode::Dimension, "ansatz/instance size mismatch");
  std::size_t edges = 0;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = i + 1; j < inst.size(); ++j)
      edges += inst.weight(i, j) != 0.0 ? 1 : 0;
  std::size_t count = 0;
  for (const auto &layer : ansatz.layers) {
    if (layer.has_cost())
      count += 2 * edges;
    if (layer.mixer.is_two_qubit())
      count += 2;
  }
  return count;
}

namespace {

const char *gate_name(GateKind kind) {
  switch (kind) {
  case GateKind::CNOT:
    return "CNOT";
  case GateKind::RZ:
    return "RZ";
  case GateKind::RX:
    return "RX";
  case GateKind::RY:
    return "RY";
  case GateKind::H:
    return "H";
  case GateKind::S:
    return "S";
  case GateKind::Sdg:
    return "SDG";
  }
  return "?";
}

} // namespace

std::string dump_gates(std::span<const Gate> gates) {
  std::string out;
  char buf[64];
  for (const auto &g : gates) {
    out += gate_name(g.kind);
    switch (g.kind) {
    case GateKind::CNOT:
      std::snprintf(buf, sizeof buf, " %zu %zu\n", g.qubit, g.target);
      break;
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
      std::snprintf(buf, sizeof buf, " %zu %.17g\n", g.qubit, g.angle);
      break;
    default:
      std::snprintf(buf, sizeof buf, " %zu\n", g.qubit);
      break;
    }
    out += buf;
  }
  return out;
}

std::vector<Gate> parse_gates(std::string_view text) {
  std::vector<Gate> gates;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream fields(line);
    std::string name;
    fields >> name;
    auto fail = [&] {
      return Error(ErrorCode::Parse, "bad gate on line " +
                                         std::to_string(line_no) + ": " + line);
    };
    std::size_t q = 0;
    if (!(fields >> q))
      throw fail();
    if (name == "CNOT") {
      std::size_t t = 0;
      if (!(fields >> t))
        throw fail();
      gates.push_back(Gate::cnot(q, t));
    } else if (name == "RZ" || name == "RX" || name == "RY") {
      double a = 0.0;
      if (!(fields >> a))
        throw fail();
      gates.push_back(name == "RZ"   ? Gate::rz(q, a)
                      : name == "RX" ? Gate::rx(q, a)
                                     : Gate::ry(q, a));
    } else if (name == "H") {
      gates.push_back(Gate::h(q));
    } else if (name == "S") {
      gates.push_back(Gate::s(q));
    } else if (name == "SDG") {
      gates.push_back(Gate::sdg(q));
    } else {
      throw fail();
    }
  }
  return gates;
}

} // namespace dynadapt
