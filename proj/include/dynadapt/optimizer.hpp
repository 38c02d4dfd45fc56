/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/rng.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dynadapt {

struct OptimizerSettings {
  /// Central finite-difference step for gradients.
  double fd_step = 1e-6;
  /// Stop once the gradient 2-norm falls below this.
  double gradient_tolerance = 1e-7;
  std::size_t max_iterations = 2000;
  /// Extra runs from Gaussian-perturbed starts; the best result wins.
  std::size_t restarts = 1;
  double restart_sigma = 0.1;
  double initial_step = 0.01;
  double line_tolerance = 0.1;
};

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  /// Whether the accepted run met the gradient tolerance.
  bool converged = false;
  std::size_t evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;
/// Gradient callback taking the finite-difference step; it must agree with
/// finite_difference_gradient on the same objective.
using Gradient =
    std::function<std::vector<double>(std::span<const double>, double)>;

/// Quasi-Newton (BFGS) local minimisation with finite-difference gradients.
/// `gradient`, when set, replaces the generic difference loop. The returned
/// value never exceeds f(x0).
MinimizeResult minimize(const Objective &f, std::vector<double> x0,
                        const OptimizerSettings &settings, Rng &rng,
                        const Gradient &gradient = {});

/// Central-difference gradient of f at x.
std::vector<double> finite_difference_gradient(const Objective &f,
                                               std::span<const double> x,
                                               double step);

} // namespace dynadapt
