/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <random>

namespace dynadapt {

using Rng = std::mt19937_64;

/// Independent sub-seed streams derived from one global seed.
enum class SeedStream : std::uint64_t {
  Instance = 1,
  Optimizer = 2,
  Relaxation = 3,
  Rounding = 4,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Counter-based derivation: sub-seed = splitmix64(splitmix64(base) ^
/// (stream << 40 | index)). Any element of a batch can be recomputed on its
/// own from (base, stream, index).
inline std::uint64_t derive_seed(std::uint64_t base, SeedStream stream,
                                 std::uint64_t index) {
  const auto counter =
      (static_cast<std::uint64_t>(stream) << 40) | (index & ((1ull << 40) - 1));
  return splitmix64(splitmix64(base) ^ counter);
}

} // namespace dynadapt
