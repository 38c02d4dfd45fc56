/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/record.hpp"

#include "dynadapt/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef DYNADAPT_VERSION_STRING
#define DYNADAPT_VERSION_STRING "0.0.0"
#endif

namespace dynadapt {

using nlohmann::json;

std::string_view version_string() { return DYNADAPT_VERSION_STRING; }

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
}

template <typename F> auto guarded(F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::Parse, std::string("bad document field: ") + e.what());
  }
}

json instance_json(const MaxCutInstance &inst) {
  json j;
  j["n"] = inst.size();
  j["seed"] = inst.seed() ? json(*inst.seed()) : json(nullptr);
  j["weights"] = std::vector<double>(inst.weights().begin(), inst.weights().end());
  return j;
}

MaxCutInstance instance_of(const json &j) {
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null())
    seed = j.at("seed").get<std::uint64_t>();
  return MaxCutInstance(j.at("n").get<std::size_t>(),
                        j.at("weights").get<std::vector<double>>(), seed);
}

json config_json(const AdaptConfig &c) {
  json j;
  j["variant"] = variant_name(c.variant);
  j["P"] = c.max_layers;
  j["epsilon"] = c.epsilon;
  j["gamma_offset"] = c.gamma_offset;
  j["gamma_init"] = c.gamma_init ? json(*c.gamma_init) : json(nullptr);
  j["delta1"] = c.delta1;
  j["delta2"] = c.delta2;
  j["delta2_search"] = c.delta2_search;
  j["delta2_grid"] = c.delta2_grid;
  j["seed"] = c.seed;
  const OptimizerSettings &o = c.optimizer;
  j["optimizer"] = {{"fd_step", o.fd_step},
                    {"gradient_tolerance", o.gradient_tolerance},
                    {"max_iterations", o.max_iterations},
                    {"restarts", o.restarts},
                    {"restart_sigma", o.restart_sigma},
                    {"initial_step", o.initial_step},
                    {"line_tolerance", o.line_tolerance}};
  return j;
}

AdaptConfig config_of(const json &j) {
  AdaptConfig c;
  c.variant = parse_variant(j.at("variant").get<std::string>());
  c.max_layers = j.at("P").get<std::size_t>();
  c.epsilon = j.at("epsilon").get<double>();
  c.gamma_offset = j.at("gamma_offset").get<double>();
  if (j.contains("gamma_init") && !j.at("gamma_init").is_null())
    c.gamma_init = j.at("gamma_init").get<double>();
  c.delta1 = j.at("delta1").get<double>();
  c.delta2 = j.at("delta2").get<double>();
  c.delta2_search = j.at("delta2_search").get<bool>();
  c.delta2_grid = j.at("delta2_grid").get<std::vector<double>>();
  c.seed = j.at("seed").get<std::uint64_t>();
  const json &o = j.at("optimizer");
  c.optimizer.fd_step = o.at("fd_step").get<double>();
  c.optimizer.gradient_tolerance = o.at("gradient_tolerance").get<double>();
  c.optimizer.max_iterations = o.at("max_iterations").get<std::size_t>();
  c.optimizer.restarts = o.at("restarts").get<std::size_t>();
  c.optimizer.restart_sigma = o.at("restart_sigma").get<double>();
  c.optimizer.initial_step = o.at("initial_step").get<double>();
  c.optimizer.line_tolerance = o.at("line_tolerance").get<double>();
  return c;
}

json iteration_json(const IterationRecord &it) {
  json j;
  j["p"] = it.p;
  j["mixer"] = it.mixer.to_string();
  j["has_cost"] = it.has_cost;
  j["betas"] = it.betas;
  j["gammas"] = it.gammas;
  j["energy"] = it.energy;
  j["cnot_count"] = it.cnot_count;
  j["alpha"] = it.alpha;
  j["selected_gradient"] = it.selected_gradient;
  j["offset_sign"] = it.offset_sign;
  j["skip"] = {{"evaluated", it.skip.evaluated},
               {"fired", it.skip.fired},
               {"B", it.skip.bcd.b},
               {"C", it.skip.bcd.c},
               {"D", it.skip.bcd.d}};
  j["optimizer_converged"] = it.optimizer_converged;
  j["monotone"] = it.monotone;
  return j;
}

IterationRecord iteration_of(const json &j) {
  IterationRecord it;
  it.p = j.at("p").get<std::size_t>();
  it.mixer = Mixer::parse(j.at("mixer").get<std::string>());
  it.has_cost = j.at("has_cost").get<bool>();
  it.betas = j.at("betas").get<std::vector<double>>();
  it.gammas = j.at("gammas").get<std::vector<double>>();
  it.energy = j.at("energy").get<double>();
  it.cnot_count = j.at("cnot_count").get<std::size_t>();
  it.alpha = j.at("alpha").get<double>();
  it.selected_gradient = j.at("selected_gradient").get<double>();
  it.offset_sign = j.at("offset_sign").get<int>();
  const json &s = j.at("skip");
  it.skip.evaluated = s.at("evaluated").get<bool>();
  it.skip.fired = s.at("fired").get<bool>();
  it.skip.bcd = {s.at("B").get<double>(), s.at("C").get<double>(),
                 s.at("D").get<double>()};
  it.optimizer_converged = j.at("optimizer_converged").get<bool>();
  it.monotone = j.at("monotone").get<bool>();
  return it;
}

} // namespace

std::string instance_to_json(const MaxCutInstance &inst) {
  return instance_json(inst).dump() + "\n";
}

MaxCutInstance instance_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] { return instance_of(j); });
}

std::string config_to_json(const AdaptConfig &config) {
  return config_json(config).dump() + "\n";
}

AdaptConfig config_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] { return config_of(j); });
}

std::string record_to_json(const RunRecord &record, const Metadata &metadata) {
  json j;
  j["kind"] = "run";
  j["version"] = version_string();
  if (!metadata.empty())
    j["experiment"] = metadata;
  j["config"] = config_json(record.config);
  j["instance"] = instance_json(record.instance);
  j["p_gate"] = record.p_gate;
  j["v_max"] = record.v_max;
  j["initial_energy"] = record.initial_energy;
  j["final_energy"] = record.final_energy();
  j["final_mean_cut"] = record.final_mean_cut();
  j["final_alpha"] = record.final_alpha();
  json its = json::array();
  for (const auto &it : record.iterations)
    its.push_back(iteration_json(it));
  j["iterations"] = std::move(its);
  return j.dump(1) + "\n";
}

RunRecord record_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    if (!j.is_object() || j.value("kind", std::string("run")) != "run")
      throw Error(ErrorCode::Parse, "document is not a run record");
    RunRecord r(instance_of(j.at("instance")), config_of(j.at("config")));
    r.p_gate = j.at("p_gate").get<double>();
    r.v_max = j.at("v_max").get<double>();
    r.initial_energy = j.at("initial_energy").get<double>();
    for (const auto &it : j.at("iterations"))
      r.iterations.push_back(iteration_of(it));
    return r;
  });
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw Error(ErrorCode::Io, "read failed: " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out)
    throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::vector<RunRecord> load_records(const std::filesystem::path &dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw Error(ErrorCode::Io, "records directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<RunRecord> out;
  for (const auto &f : files) {
    const std::string text = read_file(f);
    const json j = parse_json(text);
    if (j.is_object() && j.value("kind", std::string("run")) != "run")
      continue;
    out.push_back(record_from_json(text));
  }
  return out;
}

} // namespace dynadapt
