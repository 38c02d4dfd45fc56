/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/adapt.hpp"
#include "dynadapt/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dynadapt;

TEST(FiniteDifference, Quadratic) {
  const Objective f = [](std::span<const double> x) {
    return 3.0 * x[0] * x[0] + x[0] * x[1] - 2.0 * x[1];
  };
  const std::vector<double> x{0.5, -1.0};
  const auto g = finite_difference_gradient(f, x, 1e-6);
  EXPECT_NEAR(g[0], 6.0 * 0.5 - 1.0, 1e-8);
  EXPECT_NEAR(g[1], 0.5 - 2.0, 1e-8);
}

TEST(Minimize, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  Rng rng(1);
  const auto r = minimize(f, {-1.2, 1.0}, OptimizerSettings{}, rng);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], 1.0, 1e-5);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(Minimize, NeverWorseThanStart) {
  // Flat start on a periodic surface.
  const Objective f = [](std::span<const double> x) {
    return std::cos(x[0]) * std::cos(x[1]);
  };
  Rng rng(2);
  for (double s : {0.0, 0.3, 3.14159}) {
    const std::vector<double> x0{s, s};
    const auto r = minimize(f, x0, OptimizerSettings{}, rng);
    EXPECT_LE(r.value, f(x0) + 1e-12);
  }
}

TEST(Minimize, EmptyParameterVector) {
  const Objective f = [](std::span<const double>) { return 4.0; };
  Rng rng(3);
  const auto r = minimize(f, {}, OptimizerSettings{}, rng);
  EXPECT_EQ(r.value, 4.0);
  EXPECT_TRUE(r.converged);
}

TEST(Minimize, DeterministicForSeed) {
  const Objective f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) + x[0] * x[0] + std::cos(x[1]) * x[1];
  };
  Rng a(9), b(9);
  const auto ra = minimize(f, {0.7, 0.2}, OptimizerSettings{}, a);
  const auto rb = minimize(f, {0.7, 0.2}, OptimizerSettings{}, b);
  EXPECT_EQ(ra.x, rb.x);
  EXPECT_EQ(ra.value, rb.value);
}

TEST(EnergyGradient, EqualsGenericDifferences) {
  const auto inst = generate_instance(4, 5);
  const PureBackend pure(inst);
  const NoisyBackend noisy(inst, 0.01);
  Ansatz a{4, {AnsatzLayer{0.3, Mixer::parse("Y0*Z2"), 0.4},
               AnsatzLayer{std::nullopt, Mixer::parse("X1"), -0.2},
               AnsatzLayer{-0.6, Mixer::global_x(), 0.9}}};
  for (const EnergyBackend *b : {static_cast<const EnergyBackend *>(&pure),
                                 static_cast<const EnergyBackend *>(&noisy)}) {
    Ansatz work = a;
    const Objective f = [&](std::span<const double> x) {
      work.set_parameters(x);
      return b->energy(work);
    };
    const auto generic = finite_difference_gradient(f, a.parameters(), 1e-6);
    const auto cached = b->energy_gradient(a, 1e-6);
    ASSERT_EQ(generic.size(), cached.size());
    for (std::size_t k = 0; k < generic.size(); ++k)
      EXPECT_EQ(generic[k], cached[k]) << k;
  }
}
