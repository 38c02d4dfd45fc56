/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/maxcut.hpp"

#include "dynadapt/error.hpp"
#include "dynadapt/rng.hpp"

#include <cmath>
#include <string>

namespace dynadapt {

MaxCutInstance::MaxCutInstance(std::size_t n, std::vector<double> weights,
                               std::optional<std::uint64_t> seed)
    : n_(n), weights_(std::move(weights)), seed_(seed), total_weight_(0.0) {
  if (n_ < 2)
    throw Error(ErrorCode::InvalidInstance,
                "instance needs at least 2 vertices, got " + std::to_string(n_));
  if (weights_.size() != n_ * n_)
    throw Error(ErrorCode::InvalidInstance,
                "weight matrix must have n*n = " + std::to_string(n_ * n_) +
                    " entries, got " + std::to_string(weights_.size()));
  for (std::size_t i = 0; i < n_; ++i) {
    if (weight(i, i) != 0.0)
      throw Error(ErrorCode::InvalidInstance,
                  "nonzero diagonal weight at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < n_; ++j) {
      const double w = weight(i, j);
      if (!std::isfinite(w) || w < 0.0 || w > 1.0)
        throw Error(ErrorCode::InvalidInstance,
                    "weight W[" + std::to_string(i) + "][" + std::to_string(j) +
                        "] outside [0,1]");
      if (w != weight(j, i))
        throw Error(ErrorCode::InvalidInstance,
                    "weight matrix is not symmetric at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      total_weight_ += w;
    }
  }
}

MaxCutInstance generate_instance(std::size_t n, std::uint64_t seed) {
  if (n < 2)
    throw Error(ErrorCode::InvalidInstance,
                "instance needs at least 2 vertices, got " + std::to_string(n));
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = uniform(rng);
      w[i * n + j] = x;
      w[j * n + i] = x;
    }
  return MaxCutInstance(n, std::move(w), seed);
}

double cut_value(const MaxCutInstance &inst,
                 std::span<const std::uint8_t> bits) {
  const std::size_t n = inst.size();
  if (bits.size() != n)
    throw Error(ErrorCode::Dimension, "bit vector has length " +
                                          std::to_string(bits.size()) +
                                          ", instance has " + std::to_string(n));
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((bits[i] != 0) != (bits[j] != 0))
        value += inst.weight(i, j);
  return value;
}

Cut brute_force_max_cut(const MaxCutInstance &inst, std::size_t max_vertices) {
  const std::size_t n = inst.size();
  if (n > max_vertices)
    throw Error(ErrorCode::ResourceLimit,
                "brute force limited to " + std::to_string(max_vertices) +
                    " vertices, instance has " + std::to_string(n));
  // Fixing b_0 = 0 loses nothing (complement symmetry) and the smaller of a
  // complementary pair is the one with b_0 = 0. Enumerating key = b_1..b_{n-1}
  // read as a binary number in increasing order and keeping only strict
  // improvements yields the lexicographically smallest maximiser.
  Cut best;
  best.bits.assign(n, 0);
  best.value = -1.0;
  std::vector<std::uint8_t> bits(n, 0);
  const std::uint64_t count = 1ull << (n - 1);
  for (std::uint64_t key = 0; key < count; ++key) {
    for (std::size_t i = 1; i < n; ++i)
      bits[i] = static_cast<std::uint8_t>((key >> (n - 1 - i)) & 1u);
    const double v = cut_value(inst, bits);
    if (v > best.value) {
      best.value = v;
      best.bits = bits;
    }
  }
  return best;
}

double energy_to_cut(const MaxCutInstance &inst, double energy) {
  return inst.total_weight() / 4.0 - energy;
}

} // namespace dynadapt
