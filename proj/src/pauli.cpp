/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/pauli.hpp"

#include "dynadapt/error.hpp"

#include <algorithm>
#include <charconv>

namespace dynadapt {

namespace {

char op_letter(PauliOp op) {
  switch (op) {
  case PauliOp::X:
    return 'X';
  case PauliOp::Y:
    return 'Y';
  case PauliOp::Z:
    return 'Z';
  }
  return '?';
}

} // namespace

PauliString::PauliString(std::vector<PauliFactor> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto &a, const auto &b) { return a.qubit < b.qubit; });
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const auto &f = factors_[k];
    if (f.qubit >= 64)
      throw Error(ErrorCode::InvalidParameter,
                  "Pauli factor qubit index out of range: " +
                      std::to_string(f.qubit));
    if (k > 0 && factors_[k - 1].qubit == f.qubit)
      throw Error(ErrorCode::InvalidParameter,
                  "Pauli string has two factors on qubit " +
                      std::to_string(f.qubit));
    const std::uint64_t bit = 1ull << f.qubit;
    if (f.op != PauliOp::Z)
      flip_mask_ |= bit;
    if (f.op != PauliOp::X)
      sign_mask_ |= bit;
    if (f.op == PauliOp::Y)
      ++y_count_;
  }
  static constexpr std::complex<double> powers[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  y_phase_ = powers[y_count_ % 4];
}

PauliString PauliString::parse(std::string_view text) {
  if (text == "I" || text.empty())
    return PauliString();
  std::vector<PauliFactor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('*', pos), text.size());
    const std::string_view token = text.substr(pos, end - pos);
    if (token.size() < 2)
      throw Error(ErrorCode::Parse,
                  "malformed Pauli factor '" + std::string(token) + "'");
    PauliOp op;
    switch (token[0]) {
    case 'X':
      op = PauliOp::X;
      break;
    case 'Y':
      op = PauliOp::Y;
      break;
    case 'Z':
      op = PauliOp::Z;
      break;
    default:
      throw Error(ErrorCode::Parse,
                  "unknown Pauli letter in '" + std::string(token) + "'");
    }
    std::size_t qubit = 0;
    const auto digits = token.substr(1);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), qubit);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw Error(ErrorCode::Parse,
                  "bad qubit index in '" + std::string(token) + "'");
    factors.push_back({qubit, op});
    pos = end + 1;
  }
  try {
    return PauliString(std::move(factors));
  } catch (const Error &e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string PauliString::to_string() const {
  if (factors_.empty())
    return "I";
  std::string out;
  for (const auto &f : factors_) {
    if (!out.empty())
      out += '*';
    out += op_letter(f.op);
    out += std::to_string(f.qubit);
  }
  return out;
}

std::optional<PauliOp> PauliString::at(std::size_t qubit) const {
  for (const auto &f : factors_)
    if (f.qubit == qubit)
      return f.op;
  return std::nullopt;
}

std::size_t PauliString::support_end() const noexcept {
  return factors_.empty() ? 0 : factors_.back().qubit + 1;
}

Mixer::Mixer(PauliString pauli) : kind_(Kind::Single), pauli_(std::move(pauli)) {
  if (pauli_.length() < 1 || pauli_.length() > 2)
    throw Error(ErrorCode::UnsupportedMixer,
                "Pauli mixers must have length 1 or 2, got '" +
                    pauli_.to_string() + "'");
}

Mixer Mixer::parse(std::string_view text) {
  if (text == "GlobalX")
    return global_x();
  if (text == "GlobalY")
    return global_y();
  return Mixer(PauliString::parse(text));
}

std::string Mixer::to_string() const {
  switch (kind_) {
  case Kind::GlobalX:
    return "GlobalX";
  case Kind::GlobalY:
    return "GlobalY";
  case Kind::Single:
    break;
  }
  return pauli_.to_string();
}

const PauliString &Mixer::pauli() const {
  if (kind_ != Kind::Single)
    throw Error(ErrorCode::UnsupportedMixer,
                to_string() + " is not a single Pauli string");
  return pauli_;
}

std::vector<PauliString> Mixer::terms(std::size_t n) const {
  if (kind_ == Kind::Single)
    return {pauli_};
  const PauliOp op = kind_ == Kind::GlobalX ? PauliOp::X : PauliOp::Y;
  std::vector<PauliString> out;
  out.reserve(n);
  for (std::size_t q = 0; q < n; ++q)
    out.emplace_back(std::vector<PauliFactor>{{q, op}});
  return out;
}

DenseMatrix pauli_matrix(const PauliString &pauli, std::size_t n) {
  if (n > kDenseQubitLimit)
    throw Error(ErrorCode::ResourceLimit,
                "dense operators limited to " +
                    std::to_string(kDenseQubitLimit) + " qubits");
  if (pauli.support_end() > n)
    throw Error(ErrorCode::Dimension, "Pauli string " + pauli.to_string() +
                                          " does not fit on " +
                                          std::to_string(n) + " qubits");
  DenseMatrix m;
  m.dim = std::size_t{1} << n;
  m.data.assign(m.dim * m.dim, 0.0);
  for (std::uint64_t k = 0; k < m.dim; ++k)
    m(k ^ pauli.flip_mask(), k) = pauli.phase(k);
  return m;
}

DenseMatrix pauli_matrix(const Mixer &mixer, std::size_t n) {
  DenseMatrix sum;
  for (const auto &term : mixer.terms(n)) {
    DenseMatrix m = pauli_matrix(term, n);
    if (sum.dim == 0) {
      sum = std::move(m);
      continue;
    }
    for (std::size_t k = 0; k < sum.data.size(); ++k)
      sum.data[k] += m.data[k];
  }
  return sum;
}

} // namespace dynadapt
