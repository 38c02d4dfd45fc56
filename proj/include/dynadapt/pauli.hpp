/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dynadapt {

enum class PauliOp : std::uint8_t { X, Y, Z };

struct PauliFactor {
  std::size_t qubit;
  PauliOp op;
  bool operator==(const PauliFactor &) const = default;
};

/// Sparse tensor product of single-qubit Paulis, factors kept sorted by
/// qubit. The empty string is the identity.
///
/// On a computational basis state the string acts as
///   P|k> = i^{#Y} (-1)^{popcount(k & sign_mask)} |k ^ flip_mask>
/// with flip_mask = X|Y qubits and sign_mask = Y|Z qubits. Qubit q is bit q
/// of the basis index.
class PauliString {
public:
  PauliString() = default;
  /// Throws Error(InvalidParameter) on duplicate qubits or qubit >= 64.
  explicit PauliString(std::vector<PauliFactor> factors);

  /// Parses the text form "X0*Y3"; "I" is the identity.
  static PauliString parse(std::string_view text);
  std::string to_string() const;

  std::span<const PauliFactor> factors() const noexcept { return factors_; }
  std::size_t length() const noexcept { return factors_.size(); }
  bool is_identity() const noexcept { return factors_.empty(); }
  std::optional<PauliOp> at(std::size_t qubit) const;
  /// One past the largest qubit index, 0 for the identity.
  std::size_t support_end() const noexcept;

  std::uint64_t flip_mask() const noexcept { return flip_mask_; }
  std::uint64_t sign_mask() const noexcept { return sign_mask_; }
  int y_count() const noexcept { return y_count_; }

  /// Phase picked up by basis state k.
  std::complex<double> phase(std::uint64_t k) const noexcept {
    const bool negative = (std::popcount(k & sign_mask_) & 1) != 0;
    return (negative ? -1.0 : 1.0) * y_phase_;
  }

  bool operator==(const PauliString &other) const {
    return factors_ == other.factors_;
  }

private:
  std::vector<PauliFactor> factors_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t sign_mask_ = 0;
  int y_count_ = 0;
  std::complex<double> y_phase_{1.0, 0.0};
};

/// Generator of a mixer unitary exp(-i beta A).
class Mixer {
public:
  enum class Kind { GlobalX, GlobalY, Single };

  static Mixer global_x() { return Mixer(Kind::GlobalX, {}); }
  static Mixer global_y() { return Mixer(Kind::GlobalY, {}); }
  /// Single Pauli string of length 1 or 2.
  explicit Mixer(PauliString pauli);

  /// Accepts "GlobalX", "GlobalY" or a Pauli string text form.
  static Mixer parse(std::string_view text);
  std::string to_string() const;

  Kind kind() const noexcept { return kind_; }
  bool is_pauli_string() const noexcept { return kind_ == Kind::Single; }
  bool is_two_qubit() const noexcept {
    return kind_ == Kind::Single && pauli_.length() == 2;
  }
  /// Throws Error(UnsupportedMixer) for the global mixers.
  const PauliString &pauli() const;

  /// Unit-coefficient Pauli terms whose sum is the generator.
  std::vector<PauliString> terms(std::size_t n) const;

  bool operator==(const Mixer &other) const {
    return kind_ == other.kind_ && pauli_ == other.pauli_;
  }

private:
  Mixer(Kind kind, PauliString pauli) : kind_(kind), pauli_(std::move(pauli)) {}

  Kind kind_;
  PauliString pauli_;
};

inline constexpr std::size_t kDenseQubitLimit = 12;

/// Row-major dense complex matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> data;

  std::complex<double> &operator()(std::size_t r, std::size_t c) {
    return data[r * dim + c];
  }
  const std::complex<double> &operator()(std::size_t r, std::size_t c) const {
    return data[r * dim + c];
  }
};

/// Dense 2^n x 2^n matrix of the operator; n <= 12. Intended for oracles.
DenseMatrix pauli_matrix(const PauliString &pauli, std::size_t n);
DenseMatrix pauli_matrix(const Mixer &mixer, std::size_t n);

} // namespace dynadapt
