/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "oracle.hpp"

#include "dynadapt/adapt.hpp"
#include "dynadapt/error.hpp"
#include "dynadapt/hamiltonian.hpp"
#include "dynadapt/pauli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace dynadapt;

namespace {

MaxCutInstance triangle() {
  return MaxCutInstance(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
}

bool has_edge(const IsingHamiltonian &h, std::size_t i, std::size_t j) {
  return std::any_of(h.terms().begin(), h.terms().end(),
                     [&](const IsingTerm &t) { return t.i == i && t.j == j; });
}

oracle::Mat dense(const IsingHamiltonian &h) {
  const auto d = h.diagonal();
  oracle::Mat m = oracle::Mat::Zero(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k)
    m(k, k) = d[k];
  return m;
}

} // namespace

TEST(PauliString, ParseRoundTrip) {
  for (const char *text : {"X0", "Y3", "X0*Y3", "Z1*X2*Y5", "I"}) {
    const auto p = PauliString::parse(text);
    EXPECT_EQ(p.to_string(), text);
    EXPECT_EQ(PauliString::parse(p.to_string()), p);
  }
  EXPECT_TRUE(PauliString::parse("I").is_identity());
  EXPECT_THROW(PauliString::parse("X0*Y0"), Error);
  EXPECT_THROW(PauliString::parse("Q1"), Error);
  EXPECT_THROW(PauliString::parse("X"), Error);
}

TEST(PauliString, FactorsSortedByQubit) {
  const PauliString p({{3, PauliOp::Y}, {1, PauliOp::X}});
  EXPECT_EQ(p.to_string(), "X1*Y3");
  EXPECT_EQ(p.support_end(), 4u);
}

TEST(PauliString, PhaseMatchesDenseAction) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<PauliFactor> f;
    for (std::size_t q = 0; q < 4; ++q)
      if (rng() % 2)
        f.push_back({q, static_cast<PauliOp>(rng() % 3)});
    const PauliString p(f);
    const oracle::Mat m = oracle::pauli(p, 4);
    for (std::size_t k = 0; k < 16; ++k) {
      const std::size_t to = k ^ p.flip_mask();
      EXPECT_NEAR(std::abs(m(to, k) - p.phase(k)), 0.0, 1e-14);
    }
  }
}

TEST(PauliMatrix, Examples) {
  const DenseMatrix id = pauli_matrix(PauliString(), 1);
  EXPECT_EQ(id(0, 0), 1.0);
  EXPECT_EQ(id(1, 1), 1.0);
  EXPECT_EQ(id(0, 1), 0.0);
  const DenseMatrix x = pauli_matrix(PauliString::parse("X0"), 1);
  EXPECT_EQ(x(0, 1), 1.0);
  EXPECT_EQ(x(1, 0), 1.0);
  EXPECT_EQ(x(0, 0), 0.0);
  // Y0 Z1 element by element: <r| Y0 Z1 |c> = <r0|Y|c0> <r1|Z|c1>.
  const DenseMatrix yz = pauli_matrix(PauliString::parse("Y0*Z1"), 2);
  const oracle::Mat y = oracle::pauli2('Y');
  const oracle::Mat z = oracle::pauli2('Z');
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      EXPECT_EQ(yz(r, c), y(r & 1, c & 1) * z(r >> 1, c >> 1));
  EXPECT_THROW(pauli_matrix(PauliString::parse("X13"), 13), Error);
}

TEST(BuildHamiltonian, SingleEdge) {
  const auto h = build_hamiltonian(MaxCutInstance(2, {0, 0.7, 0.7, 0}));
  ASSERT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.terms()[0], (IsingTerm{0, 1, 0.35}));
  const std::vector<double> want{0.35, -0.35, -0.35, 0.35};
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_NEAR(h.diagonal()[k], want[k], 1e-15);
}

TEST(BuildHamiltonian, ZeroWeightsAndTriangle) {
  const auto zero = build_hamiltonian(MaxCutInstance(3, std::vector<double>(9, 0.0)));
  EXPECT_TRUE(zero.empty());
  for (double d : zero.diagonal())
    EXPECT_EQ(d, 0.0);
  EXPECT_DOUBLE_EQ(build_hamiltonian(triangle()).ground_energy(), -0.5);
}

TEST(BuildHamiltonian, MatchesDenseOperator) {
  const auto inst = generate_instance(4, 21);
  const auto h = build_hamiltonian(inst);
  const oracle::Mat ref = oracle::hamiltonian(inst);
  EXPECT_LT((dense(h) - ref).norm(), 1e-13);
}

TEST(BuildHamiltonian, GroundEnergyGivesMaxCut) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto inst = generate_instance(2 + t % 5, rng());
    const auto h = build_hamiltonian(inst);
    EXPECT_NEAR(energy_to_cut(inst, h.ground_energy()),
                brute_force_max_cut(inst).value, 1e-12);
  }
}

TEST(SplitHamiltonian, ZZMixerCommutesWithEverything) {
  const auto h = build_hamiltonian(generate_instance(4, 2));
  const auto s = split_hamiltonian(h, Mixer(PauliString::parse("Z0*Z1")));
  EXPECT_TRUE(s.anticommuting.empty());
  EXPECT_EQ(s.commuting.terms().size(), h.terms().size());
}

TEST(SplitHamiltonian, SingleQubitOnTriangle) {
  const auto h = build_hamiltonian(triangle());
  const auto s = split_hamiltonian(h, Mixer(PauliString::parse("X0")));
  EXPECT_TRUE(has_edge(s.anticommuting, 0, 1));
  EXPECT_TRUE(has_edge(s.anticommuting, 0, 2));
  EXPECT_EQ(s.anticommuting.terms().size(), 2u);
  EXPECT_TRUE(has_edge(s.commuting, 1, 2));
  EXPECT_EQ(s.commuting.terms().size(), 1u);
}

TEST(SplitHamiltonian, TwoQubitOnTriangle) {
  const auto h = build_hamiltonian(triangle());
  const auto s = split_hamiltonian(h, Mixer(PauliString::parse("X0*X1")));
  EXPECT_TRUE(has_edge(s.commuting, 0, 1));
  EXPECT_EQ(s.commuting.terms().size(), 1u);
  EXPECT_TRUE(has_edge(s.anticommuting, 0, 2));
  EXPECT_TRUE(has_edge(s.anticommuting, 1, 2));
}

TEST(SplitHamiltonian, RejectsGlobalMixers) {
  const auto h = build_hamiltonian(triangle());
  try {
    split_hamiltonian(h, Mixer::global_x());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedMixer);
  }
  EXPECT_THROW(split_hamiltonian(h, Mixer::global_y()), Error);
}

TEST(SplitHamiltonian, DenseCommutationRelations) {
  std::mt19937_64 rng(33);
  const auto pool = mixer_pool(4);
  for (int t = 0; t < 20; ++t) {
    const auto inst = generate_instance(4, rng());
    const auto h = build_hamiltonian(inst);
    const Mixer &a = pool[2 + rng() % (pool.size() - 2)];
    const auto s = split_hamiltonian(h, a);
    const oracle::Mat am = oracle::mixer(a, 4);
    const oracle::Mat hm = dense(s.commuting);
    const oracle::Mat hp = dense(s.anticommuting);
    EXPECT_LT((am * hm - hm * am).norm(), 1e-13) << a.to_string();
    EXPECT_LT((am * hp + hp * am).norm(), 1e-13) << a.to_string();
    EXPECT_LT((hm + hp - oracle::hamiltonian(inst)).norm(), 1e-13);
    const oracle::Mat h_full = dense(h);
    EXPECT_LT((h_full * hp - hp * h_full).norm(), 1e-13);
    EXPECT_LT((hm * hp - hp * hm).norm(), 1e-13);
    EXPECT_EQ(s.commuting.terms().size() + s.anticommuting.terms().size(),
              h.terms().size());
  }
}

TEST(Mixer, ParseAndTerms) {
  EXPECT_EQ(Mixer::parse("GlobalX"), Mixer::global_x());
  EXPECT_EQ(Mixer::parse("GlobalY").to_string(), "GlobalY");
  EXPECT_EQ(Mixer::parse("Y1*Z4").to_string(), "Y1*Z4");
  EXPECT_EQ(Mixer::global_x().terms(3).size(), 3u);
  EXPECT_THROW(Mixer(PauliString::parse("X0*X1*X2")), Error);
  EXPECT_THROW(Mixer::global_x().pauli(), Error);
}
