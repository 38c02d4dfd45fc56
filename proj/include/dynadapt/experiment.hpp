/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/adapt.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynadapt {

/// Resolved settings of one CLI experiment. Keys accepted by set():
///   algo n instances quick P epsilon gamma_offset gamma_init delta1 delta2
///   delta2_search pgate rounds seed jobs out records instance_dir
///   richardson_c p_lo p_hi grid_points
/// `pgate` takes a comma-separated list; repeated set() calls append and an
/// empty value clears the list.
struct ExperimentConfig {
  std::string algo = "dynamic";
  std::size_t n = 6;
  std::optional<std::size_t> instances;
  bool quick = false;
  std::size_t max_layers = 12;
  double epsilon = 0.0;
  double gamma_offset = 0.1;
  std::optional<double> gamma_init;
  double delta1 = 1e-9;
  double delta2 = 1e-5;
  bool delta2_search = false;
  std::vector<double> pgates;
  std::size_t rounds = 1000;
  std::uint64_t seed = 0;
  /// 0 selects the number of hardware threads.
  std::size_t jobs = 0;
  std::string out = "out";
  std::string records;
  std::string instance_dir;
  double richardson_c = 2.0;
  double p_lo = 1e-4;
  double p_hi = 1e-1;
  std::size_t grid_points = 13;

  /// Throws Error(InvalidParameter) for unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
  std::string get(std::string_view key) const;
  /// Flat key=value lines; blank lines and '#' comments ignored.
  void load_file(const std::filesystem::path &path);

  /// 100 by default, 20 in quick mode, unless set explicitly.
  std::size_t instance_count() const;
  std::size_t worker_count() const;
  bool is_gw() const { return algo == "gw"; }
  AdaptConfig adapt_config() const;
  void validate() const;

  /// Every setting that affects results, as (key, value) in a fixed order.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Default replay grid: {0, 0.00122, 0.00263} plus 9 log-spaced levels on
/// [1e-4, 3e-2].
std::vector<double> default_noise_grid();

/// Writes instances/, records/ and run_<algo>.csv under config.out. Returns
/// a one-line summary.
std::string cmd_run(const ExperimentConfig &config);

/// Subcommands: convergence, critical, histogram, variants, mitigate,
/// noisy-growth. Returns a one-line summary.
std::string cmd_bench(std::string_view subcommand, const ExperimentConfig &config);

} // namespace dynadapt
