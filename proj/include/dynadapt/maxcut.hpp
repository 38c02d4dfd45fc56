/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dynadapt {

/// Weighted Max-Cut problem on n vertices. The weight matrix is stored
/// row-major, symmetric, zero on the diagonal and with entries in [0, 1].
/// Instances are immutable once constructed.
class MaxCutInstance {
public:
  /// Validates the invariants; throws Error(InvalidInstance) otherwise.
  MaxCutInstance(std::size_t n, std::vector<double> weights,
                 std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t size() const noexcept { return n_; }
  double weight(std::size_t i, std::size_t j) const noexcept {
    return weights_[i * n_ + j];
  }
  std::span<const double> weights() const noexcept { return weights_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  /// Sum over all ordered pairs, W_tot = sum_{i,j} W[i][j].
  double total_weight() const noexcept { return total_weight_; }

  bool operator==(const MaxCutInstance &) const = default;

private:
  std::size_t n_;
  std::vector<double> weights_;
  std::optional<std::uint64_t> seed_;
  double total_weight_;
};

struct Cut {
  std::vector<std::uint8_t> bits;
  double value = 0.0;
};

/// Complete graph with i.i.d. uniform [0,1) upper-triangle weights.
MaxCutInstance generate_instance(std::size_t n, std::uint64_t seed);

/// V(b) = sum_{i,j} W[i][j] b_i (1 - b_j).
double cut_value(const MaxCutInstance &inst, std::span<const std::uint8_t> bits);

inline constexpr std::size_t kBruteForceLimit = 24;

/// Exhaustive maximum cut. Ties go to the lexicographically smallest bit
/// vector (b_0 is the most significant digit), so b_0 = 0 always.
Cut brute_force_max_cut(const MaxCutInstance &inst,
                        std::size_t max_vertices = kBruteForceLimit);

/// Mean cut value of a state with energy expectation `energy`:
/// W_tot / 4 - energy.
double energy_to_cut(const MaxCutInstance &inst, double energy);

} // namespace dynadapt
