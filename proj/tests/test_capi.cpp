/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/dynadapt.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace {

struct Instance {
  dyn_instance *p = nullptr;
  ~Instance() { dyn_instance_free(p); }
};
struct Record {
  dyn_record *p = nullptr;
  ~Record() { dyn_record_free(p); }
};
struct Config {
  dyn_config *p = nullptr;
  Config() { EXPECT_EQ(dyn_config_create(&p), DYN_OK); }
  ~Config() { dyn_config_free(p); }
};

} // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_GT(std::strlen(dyn_version()), 0u);
  EXPECT_STREQ(dyn_status_name(DYN_OK), "ok");
  EXPECT_GT(std::strlen(dyn_status_name(DYN_ERR_PARSE)), 0u);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(dyn_instance_generate(4, 1, nullptr), DYN_ERR_NULL_ARGUMENT);
  double v;
  EXPECT_EQ(dyn_max_cut(nullptr, nullptr, &v), DYN_ERR_NULL_ARGUMENT);
  EXPECT_GT(std::strlen(dyn_last_error()), 0u);
  dyn_instance_free(nullptr);
  dyn_record_free(nullptr);
  dyn_config_free(nullptr);
}

TEST(CApi, InstanceLifecycle) {
  Instance inst;
  ASSERT_EQ(dyn_instance_generate(5, 3, &inst.p), DYN_OK);
  EXPECT_EQ(dyn_instance_size(inst.p), 5u);
  double w;
  ASSERT_EQ(dyn_instance_weight(inst.p, 0, 1, &w), DYN_OK);
  EXPECT_GE(w, 0.0);
  EXPECT_LE(w, 1.0);
  EXPECT_EQ(dyn_instance_weight(inst.p, 0, 5, &w), DYN_ERR_DIMENSION);

  std::vector<std::uint8_t> bits(5);
  double best;
  ASSERT_EQ(dyn_max_cut(inst.p, bits.data(), &best), DYN_OK);
  EXPECT_EQ(bits[0], 0);
  double cut;
  ASSERT_EQ(dyn_cut_value(inst.p, bits.data(), bits.size(), &cut), DYN_OK);
  EXPECT_DOUBLE_EQ(cut, best);
  EXPECT_EQ(dyn_cut_value(inst.p, bits.data(), 4, &cut), DYN_ERR_DIMENSION);

  const auto path = std::filesystem::temp_directory_path() / "dynadapt_capi_inst.json";
  ASSERT_EQ(dyn_instance_save(inst.p, path.c_str()), DYN_OK);
  Instance back;
  ASSERT_EQ(dyn_instance_load(path.c_str(), &back.p), DYN_OK);
  double w2;
  ASSERT_EQ(dyn_instance_weight(back.p, 0, 1, &w2), DYN_OK);
  EXPECT_EQ(w, w2);
  std::filesystem::remove(path);
  Instance missing;
  EXPECT_EQ(dyn_instance_load(path.c_str(), &missing.p), DYN_ERR_IO);
}

TEST(CApi, FromWeightsValidates) {
  const double ok[] = {0, 1, 1, 0};
  Instance inst;
  ASSERT_EQ(dyn_instance_from_weights(2, ok, &inst.p), DYN_OK);
  double e;
  ASSERT_EQ(dyn_energy_to_cut(inst.p, -0.5, &e), DYN_OK);
  EXPECT_DOUBLE_EQ(e, 1.0);
  const double asym[] = {0, 1, 0.5, 0};
  Instance bad;
  EXPECT_EQ(dyn_instance_from_weights(2, asym, &bad.p), DYN_ERR_INVALID_INSTANCE);
  EXPECT_EQ(bad.p, nullptr);
  const double heavy[] = {0, 2, 2, 0};
  EXPECT_EQ(dyn_instance_from_weights(2, heavy, &bad.p), DYN_ERR_INVALID_INSTANCE);
}

TEST(CApi, ConfigStrings) {
  Config cfg;
  ASSERT_EQ(dyn_config_set(cfg.p, "n", "5"), DYN_OK);
  char buf[4];
  std::size_t len = 0;
  ASSERT_EQ(dyn_config_get(cfg.p, "algo", buf, sizeof buf, &len), DYN_OK);
  EXPECT_EQ(len, 7u);
  EXPECT_STREQ(buf, "dyn");
  EXPECT_EQ(dyn_config_set(cfg.p, "bogus", "1"), DYN_ERR_INVALID_PARAMETER);
  EXPECT_EQ(dyn_config_load_file(cfg.p, "/nonexistent/dynadapt.cfg"), DYN_ERR_IO);
}

TEST(CApi, RunRecordReplay) {
  Instance inst;
  ASSERT_EQ(dyn_instance_generate(4, 11, &inst.p), DYN_OK);
  Config cfg;
  ASSERT_EQ(dyn_config_set(cfg.p, "P", "4"), DYN_OK);
  Record rec;
  ASSERT_EQ(dyn_run(inst.p, cfg.p, &rec.p), DYN_OK);
  const std::size_t iters = dyn_record_iterations(rec.p);
  ASSERT_GE(iters, 1u);
  ASSERT_LE(iters, 4u);

  double a0, final_alpha;
  ASSERT_EQ(dyn_record_alpha(rec.p, 0, &a0), DYN_OK);
  ASSERT_EQ(dyn_record_final_alpha(rec.p, &final_alpha), DYN_OK);
  EXPECT_GE(final_alpha, a0 - 1e-10);
  std::size_t cnots;
  ASSERT_EQ(dyn_record_cnot_count(rec.p, 0, &cnots), DYN_OK);
  EXPECT_EQ(cnots, 0u);
  double alpha_out;
  EXPECT_EQ(dyn_record_alpha(rec.p, iters + 1, &alpha_out), DYN_ERR_INVALID_PARAMETER);
  char mixer[32];
  ASSERT_EQ(dyn_record_mixer(rec.p, 1, mixer, sizeof mixer, nullptr), DYN_OK);
  EXPECT_GT(std::strlen(mixer), 0u);

  std::vector<double> alphas(iters);
  std::size_t count = 0;
  ASSERT_EQ(dyn_replay(rec.p, 0.0, alphas.data(), alphas.size(), &count), DYN_OK);
  EXPECT_EQ(count, iters);
  for (std::size_t k = 0; k < iters; ++k) {
    double a;
    ASSERT_EQ(dyn_record_alpha(rec.p, k + 1, &a), DYN_OK);
    EXPECT_NEAR(alphas[k], a, 1e-10);
  }
  EXPECT_EQ(dyn_replay(rec.p, 1.5, alphas.data(), alphas.size(), &count),
            DYN_ERR_INVALID_PARAMETER);

  std::size_t len = 0;
  ASSERT_EQ(dyn_record_to_json(rec.p, nullptr, 0, &len), DYN_OK);
  std::string json(len + 1, '\0');
  ASSERT_EQ(dyn_record_to_json(rec.p, json.data(), json.size(), &len), DYN_OK);
  EXPECT_NE(json.find("\"iterations\""), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "dynadapt_capi_rec.json";
  ASSERT_EQ(dyn_record_save(rec.p, path.c_str()), DYN_OK);
  Record back;
  ASSERT_EQ(dyn_record_load(path.c_str(), &back.p), DYN_OK);
  EXPECT_EQ(dyn_record_iterations(back.p), iters);
  std::filesystem::remove(path);
}

TEST(CApi, GwAndRichardson) {
  Instance inst;
  ASSERT_EQ(dyn_instance_generate(6, 2, &inst.p), DYN_OK);
  double alpha, v_gw, obj;
  ASSERT_EQ(dyn_gw(inst.p, 200, 5, &alpha, &v_gw, &obj), DYN_OK);
  EXPECT_GT(alpha, 0.0);
  EXPECT_LE(alpha, 1.0);
  double m;
  ASSERT_EQ(dyn_richardson(0.9, 0.8, 2.0, &m), DYN_OK);
  EXPECT_DOUBLE_EQ(m, 1.0);
  EXPECT_EQ(dyn_richardson(0.9, 0.8, 1.0, &m), DYN_ERR_INVALID_PARAMETER);
}

TEST(CApi, GwAlgoRejectedForRun) {
  Instance inst;
  ASSERT_EQ(dyn_instance_generate(4, 1, &inst.p), DYN_OK);
  Config cfg;
  ASSERT_EQ(dyn_config_set(cfg.p, "algo", "gw"), DYN_OK);
  Record rec;
  EXPECT_EQ(dyn_run(inst.p, cfg.p, &rec.p), DYN_ERR_INVALID_PARAMETER);
}
