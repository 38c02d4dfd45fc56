/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/adapt.hpp"
#include "dynadapt/error.hpp"
#include "dynadapt/record.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace dynadapt;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const fs::path p = fs::temp_directory_path() / ("dynadapt_record_" + name);
  fs::remove_all(p);
  return p;
}

} // namespace

TEST(InstanceJson, RoundTripIsBitExact) {
  const auto inst = generate_instance(7, 0xdeadbeef);
  const auto back = instance_from_json(instance_to_json(inst));
  EXPECT_EQ(back, inst);
  EXPECT_EQ(*back.seed(), 0xdeadbeefu);
  const MaxCutInstance no_seed(2, {0, 0.25, 0.25, 0});
  EXPECT_FALSE(instance_from_json(instance_to_json(no_seed)).seed());
}

TEST(InstanceJson, RejectsBadDocuments) {
  EXPECT_THROW(instance_from_json("{"), Error);
  EXPECT_THROW(instance_from_json(R"({"n": 2, "weights": [0, 1]})"), Error);
  EXPECT_THROW(instance_from_json(R"({"n": 2, "weights": [0, 0.3, 0.4, 0]})"), Error);
  try {
    instance_from_json("[1, 2");
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(ConfigJson, RoundTrip) {
  AdaptConfig c;
  c.variant = Variant::DynamicNoReselect;
  c.max_layers = 7;
  c.epsilon = 1e-4;
  c.gamma_offset = 0.05;
  c.gamma_init = 0.01;
  c.delta1 = 1e-8;
  c.delta2 = 3e-6;
  c.delta2_search = true;
  c.seed = 42;
  const auto back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.variant, c.variant);
  EXPECT_EQ(back.max_layers, 7u);
  EXPECT_EQ(back.epsilon, c.epsilon);
  EXPECT_EQ(back.gamma_offset, c.gamma_offset);
  EXPECT_EQ(back.gamma_init, c.gamma_init);
  EXPECT_EQ(back.delta1, c.delta1);
  EXPECT_EQ(back.delta2, c.delta2);
  EXPECT_TRUE(back.delta2_search);
  EXPECT_EQ(back.delta2_grid, c.delta2_grid);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_FALSE(config_from_json(config_to_json(AdaptConfig{})).gamma_init);
}

TEST(RecordJson, RoundTripPreservesEverything) {
  AdaptConfig c;
  c.max_layers = 5;
  c.seed = 9;
  const auto r = run_dynamic(generate_instance(5, 10), c);
  const std::string text = record_to_json(r, {{"batch", "3"}});
  EXPECT_NE(text.find("\"batch\""), std::string::npos);
  EXPECT_NE(text.find(std::string(version_string())), std::string::npos);
  const auto back = record_from_json(text);
  EXPECT_EQ(back.instance, r.instance);
  EXPECT_EQ(back.v_max, r.v_max);
  EXPECT_EQ(back.initial_energy, r.initial_energy);
  ASSERT_EQ(back.iterations.size(), r.iterations.size());
  for (std::size_t k = 0; k < r.iterations.size(); ++k) {
    const auto &a = r.iterations[k], &b = back.iterations[k];
    EXPECT_EQ(a.mixer, b.mixer);
    EXPECT_EQ(a.has_cost, b.has_cost);
    EXPECT_EQ(a.betas, b.betas);
    EXPECT_EQ(a.gammas, b.gammas);
    EXPECT_EQ(a.energy, b.energy);
    EXPECT_EQ(a.cnot_count, b.cnot_count);
    EXPECT_EQ(a.skip.fired, b.skip.fired);
    EXPECT_EQ(a.skip.bcd.b, b.skip.bcd.b);
    EXPECT_EQ(a.offset_sign, b.offset_sign);
  }
  // Serialising again gives the same text.
  EXPECT_EQ(record_to_json(back, {{"batch", "3"}}), text);
}

TEST(RecordFiles, SaveLoadAndDirectoryScan) {
  const fs::path dir = scratch("scan");
  AdaptConfig c;
  c.max_layers = 2;
  for (int k = 0; k < 3; ++k) {
    const auto r = run_dynamic(generate_instance(4, 20 + k), c);
    write_file(dir / ("r" + std::to_string(k) + ".json"), record_to_json(r));
  }
  write_file(dir / "notes.txt", "ignored");
  write_file(dir / "gw.json", R"({"kind": "gw"})");
  const auto all = load_records(dir);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[1].instance, generate_instance(4, 21));
  write_file(dir / "zz.json", "[1, 2]");
  EXPECT_THROW(load_records(dir), Error);
  fs::remove_all(dir);
}

TEST(RecordFiles, IoErrors) {
  try {
    load_records(scratch("missing"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
  EXPECT_THROW(read_file(scratch("nofile") / "x.json"), Error);
}
