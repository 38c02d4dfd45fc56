/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "dynadapt/experiment.hpp"

#include "dynadapt/bench.hpp"
#include "dynadapt/error.hpp"
#include "dynadapt/gw.hpp"
#include "dynadapt/parallel.hpp"
#include "dynadapt/record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dynadapt {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::InvalidParameter,
              "invalid value '" + std::string(value) + "' for " + std::string(key));
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T> T parse_number(std::string_view key, std::string_view v) {
  v = trim(v);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    bad_value(key, v);
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(out))
      bad_value(key, v);
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  v = trim(v);
  if (v == "1" || v == "true" || v == "yes" || v == "on")
    return true;
  if (v == "0" || v == "false" || v == "no" || v == "off")
    return false;
  bad_value(key, v);
}

std::string fmt(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string index_name(std::string_view prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04zu.json", i);
  return std::string(prefix) + buf;
}

} // namespace

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  const std::string v(trim(value));
  if (key == "algo") {
    if (v != "gw")
      parse_variant(v);
    algo = v;
  } else if (key == "n") {
    n = parse_number<std::size_t>(key, v);
  } else if (key == "instances") {
    instances = parse_number<std::size_t>(key, v);
  } else if (key == "quick") {
    quick = parse_bool(key, v);
  } else if (key == "P") {
    max_layers = parse_number<std::size_t>(key, v);
  } else if (key == "epsilon") {
    epsilon = parse_number<double>(key, v);
  } else if (key == "gamma_offset") {
    gamma_offset = parse_number<double>(key, v);
  } else if (key == "gamma_init") {
    if (v.empty() || v == "offset")
      gamma_init.reset();
    else
      gamma_init = parse_number<double>(key, v);
  } else if (key == "delta1") {
    delta1 = parse_number<double>(key, v);
  } else if (key == "delta2") {
    delta2 = parse_number<double>(key, v);
  } else if (key == "delta2_search") {
    delta2_search = parse_bool(key, v);
  } else if (key == "pgate") {
    if (v.empty())
      pgates.clear();
    std::string_view rest = v;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      pgates.push_back(parse_number<double>(key, rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
    }
  } else if (key == "rounds") {
    rounds = parse_number<std::size_t>(key, v);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, v);
  } else if (key == "jobs") {
    jobs = parse_number<std::size_t>(key, v);
  } else if (key == "out") {
    out = v;
  } else if (key == "records") {
    records = v;
  } else if (key == "instance_dir") {
    instance_dir = v;
  } else if (key == "richardson_c") {
    richardson_c = parse_number<double>(key, v);
  } else if (key == "p_lo") {
    p_lo = parse_number<double>(key, v);
  } else if (key == "p_hi") {
    p_hi = parse_number<double>(key, v);
  } else if (key == "grid_points") {
    grid_points = parse_number<std::size_t>(key, v);
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown setting '" + std::string(key) + "'");
  }
}

std::string ExperimentConfig::get(std::string_view key) const {
  if (key == "jobs")
    return std::to_string(jobs);
  for (const auto &[k, v] : resolved())
    if (k == key)
      return v;
  throw Error(ErrorCode::InvalidParameter, "unknown setting '" + std::string(key) + "'");
}

void ExperimentConfig::load_file(const fs::path &path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty() || s.front() == '#')
      continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Parse, path.string() + ":" + std::to_string(lineno) +
                                        ": expected key=value");
    set(trim(s.substr(0, eq)), s.substr(eq + 1));
  }
}

std::size_t ExperimentConfig::instance_count() const {
  if (instances)
    return *instances;
  return quick ? 20 : 100;
}

std::size_t ExperimentConfig::worker_count() const {
  return jobs == 0 ? default_jobs() : jobs;
}

AdaptConfig ExperimentConfig::adapt_config() const {
  AdaptConfig c;
  if (!is_gw())
    c.variant = parse_variant(algo);
  c.max_layers = max_layers;
  c.epsilon = epsilon;
  c.gamma_offset = gamma_offset;
  c.gamma_init = gamma_init;
  c.delta1 = delta1;
  c.delta2 = delta2;
  c.delta2_search = delta2_search;
  c.seed = seed;
  return c;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::InvalidParameter, what);
  };
  if (n < 2)
    fail("n must be at least 2");
  if (instance_count() == 0)
    fail("need at least one instance");
  if (max_layers == 0)
    fail("P must be at least 1");
  if (!(gamma_offset > 0.0))
    fail("gamma offset must be positive");
  if (delta1 < 0.0 || delta2 < 0.0 || epsilon < 0.0)
    fail("delta1, delta2 and epsilon must be non-negative");
  for (double p : pgates)
    if (!(p >= 0.0 && p <= 1.0))
      fail("p_gate values must lie in [0, 1]");
  if (rounds == 0)
    fail("rounds must be at least 1");
  if (!(richardson_c > 1.0))
    fail("richardson_c must exceed 1");
  if (!(p_lo > 0.0 && p_hi > p_lo && p_hi <= 1.0) || grid_points < 2)
    fail("bad critical search bounds");
  if (out.empty())
    fail("output directory must not be empty");
  adapt_config().validate();
}

std::vector<std::pair<std::string, std::string>> ExperimentConfig::resolved() const {
  std::string grid;
  for (std::size_t k = 0; k < pgates.size(); ++k)
    grid += (k ? "," : "") + fmt(pgates[k]);
  return {
      {"algo", algo},
      {"n", std::to_string(n)},
      {"instances", std::to_string(instance_count())},
      {"quick", quick ? "true" : "false"},
      {"P", std::to_string(max_layers)},
      {"epsilon", fmt(epsilon)},
      {"gamma_offset", fmt(gamma_offset)},
      {"gamma_init", gamma_init ? fmt(*gamma_init) : std::string("offset")},
      {"delta1", fmt(delta1)},
      {"delta2", fmt(delta2)},
      {"delta2_search", delta2_search ? "true" : "false"},
      {"pgate", grid},
      {"rounds", std::to_string(rounds)},
      {"seed", std::to_string(seed)},
      {"out", out},
      {"records", records},
      {"instance_dir", instance_dir},
      {"richardson_c", fmt(richardson_c)},
      {"p_lo", fmt(p_lo)},
      {"p_hi", fmt(p_hi)},
      {"grid_points", std::to_string(grid_points)},
  };
}

std::vector<double> default_noise_grid() {
  std::vector<double> grid{0.0, 0.00122, 0.00263};
  for (int k = 0; k < 9; ++k)
    grid.push_back(1e-4 * std::pow(300.0, k / 8.0));
  std::sort(grid.begin(), grid.end());
  return grid;
}

namespace {

Metadata metadata_of(const ExperimentConfig &cfg, std::string_view command) {
  Metadata m;
  for (const auto &[k, v] : cfg.resolved())
    m[k] = v;
  m["command"] = command;
  m["version"] = version_string();
  return m;
}

std::string csv_header(const ExperimentConfig &cfg, std::string_view command,
                       const std::vector<std::pair<std::string, std::string>> &extra = {}) {
  std::string h = "# dynadapt_version=" + std::string(version_string()) + "\n";
  h += "# command=" + std::string(command) + "\n";
  for (const auto &[k, v] : cfg.resolved())
    h += "# " + k + "=" + v + "\n";
  for (const auto &[k, v] : extra)
    h += "# " + k + "=" + v + "\n";
  return h;
}

std::vector<MaxCutInstance> acquire_instances(const ExperimentConfig &cfg) {
  if (cfg.instance_dir.empty())
    return generate_batch(cfg.n, cfg.instance_count(), cfg.seed);
  std::error_code ec;
  if (!fs::is_directory(cfg.instance_dir, ec))
    throw Error(ErrorCode::Io, "instance directory not found: " + cfg.instance_dir);
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(cfg.instance_dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.size() > cfg.instance_count())
    files.resize(cfg.instance_count());
  std::vector<MaxCutInstance> out;
  for (const auto &f : files)
    out.push_back(instance_from_json(read_file(f)));
  if (out.empty())
    throw Error(ErrorCode::Io, "no instance files in " + cfg.instance_dir);
  return out;
}

std::vector<RunRecord> acquire_records(const ExperimentConfig &cfg) {
  if (!cfg.records.empty()) {
    std::vector<RunRecord> recs = load_records(cfg.records);
    if (recs.empty())
      throw Error(ErrorCode::Io, "no run records in " + cfg.records);
    return recs;
  }
  if (cfg.is_gw())
    throw Error(ErrorCode::InvalidParameter, "this benchmark needs a quantum algorithm");
  const auto instances = acquire_instances(cfg);
  return run_batch(instances, cfg.adapt_config(), cfg.worker_count());
}

std::string algo_label(const std::vector<RunRecord> &recs) {
  return std::string(variant_name(recs.front().variant()));
}

void write_instances(const ExperimentConfig &cfg,
                     const std::vector<MaxCutInstance> &instances) {
  for (std::size_t i = 0; i < instances.size(); ++i)
    write_file(fs::path(cfg.out) / "instances" / index_name("instance", i),
               instance_to_json(instances[i]));
}

} // namespace

std::string cmd_run(const ExperimentConfig &cfg) {
  cfg.validate();
  const auto instances = acquire_instances(cfg);
  write_instances(cfg, instances);
  const Metadata meta = metadata_of(cfg, "run");
  const fs::path out(cfg.out);
  std::string csv = csv_header(cfg, "run");
  if (cfg.is_gw()) {
    GwParams params;
    params.rounds = cfg.rounds;
    params.seed = cfg.seed;
    const auto recs = gw_batch(instances, params, cfg.worker_count());
    csv += "instance,objective,v_gw,v_max,alpha_gw,best_cut\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      write_file(out / "records" / index_name("gw", i),
                 gw_record_to_json(instances[i], recs[i], meta));
      csv += std::to_string(i) + "," + fmt17(recs[i].objective) + "," +
             fmt17(recs[i].v_gw) + "," + fmt17(recs[i].v_max) + "," +
             fmt17(recs[i].alpha) + "," + fmt17(recs[i].best.value) + "\n";
    }
  } else {
    const auto recs = run_batch(instances, cfg.adapt_config(), cfg.worker_count());
    csv += "instance,final_energy,mean_cut,v_max,alpha,cnot_count,cost_layers\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const RunRecord &r = recs[i];
      write_file(out / "records" / index_name(cfg.algo, i), record_to_json(r, meta));
      const std::size_t cost =
          r.iterations.empty() ? 0 : r.iterations.back().gammas.size();
      csv += std::to_string(i) + "," + fmt17(r.final_energy()) + "," +
             fmt17(r.final_mean_cut()) + "," + fmt17(r.v_max) + "," +
             fmt17(r.final_alpha()) + "," + std::to_string(r.final_cnot_count()) +
             "," + std::to_string(cost) + "\n";
    }
  }
  write_file(out / ("run_" + cfg.algo + ".csv"), csv);
  return "wrote " + std::to_string(instances.size()) + " " + cfg.algo +
         " records to " + cfg.out;
}

namespace {

std::string bench_convergence(const ExperimentConfig &cfg) {
  const auto recs = acquire_records(cfg);
  const std::string algo = algo_label(recs);
  const auto grid = cfg.pgates.empty() ? default_noise_grid() : cfg.pgates;
  std::vector<std::pair<std::string, std::string>> extra{
      {"batch_size", std::to_string(recs.size())}};
  std::string rows = "p_gate,cnot_count,mean_alpha,stderr\n";
  for (double p : grid) {
    const NoiseCurve c = noise_curve(recs, p, cfg.worker_count());
    extra.push_back({"alpha_star@" + fmt(p),
                     fmt17(c.alpha_star) + " at cnot " + std::to_string(c.cnot_at_star)});
    for (const auto &pt : c.points)
      rows += fmt17(p) + "," + std::to_string(pt.cnot_count) + "," +
              fmt17(pt.mean_alpha) + "," + fmt17(pt.stderr_alpha) + "\n";
  }
  const fs::path file = fs::path(cfg.out) / ("convergence_" + algo + ".csv");
  write_file(file, csv_header(cfg, "bench convergence", extra) + rows);
  return "wrote " + file.string();
}

std::string bench_critical(const ExperimentConfig &cfg) {
  const auto recs = acquire_records(cfg);
  const std::string algo = algo_label(recs);
  std::vector<MaxCutInstance> instances;
  for (const auto &r : recs)
    instances.push_back(r.instance);
  GwParams params;
  params.rounds = cfg.rounds;
  params.seed = cfg.seed;
  const auto gws = gw_batch(instances, params, cfg.worker_count());
  std::vector<double> alpha_gw;
  for (const auto &g : gws)
    alpha_gw.push_back(g.alpha);
  CriticalSettings s;
  s.p_lo = cfg.p_lo;
  s.p_hi = cfg.p_hi;
  s.grid_points = cfg.grid_points;
  s.jobs = cfg.worker_count();
  const CriticalErrorResult res = critical_error_probability(recs, alpha_gw, s);
  std::string evaluated;
  for (std::size_t k = 0; k < res.p_evaluated.size(); ++k)
    evaluated += (k ? ";" : "") + fmt(res.p_evaluated[k]) + ":" + fmt(res.alpha_star[k]);
  const std::vector<std::pair<std::string, std::string>> extra{
      {"batch_size", std::to_string(recs.size())},
      {"alpha_gw_mean", fmt17(res.alpha_gw_mean)},
      {"boundary", res.boundary ? "true" : "false"},
      {"evaluated", evaluated}};
  std::string rows = "n,algorithm,p_star,stderr\n";
  rows += std::to_string(res.n) + "," + algo + "," + fmt17(res.p_star) + "," +
          fmt17(res.stderr_p) + "\n";
  const fs::path file = fs::path(cfg.out) / ("critical_" + algo + ".csv");
  write_file(file, csv_header(cfg, "bench critical", extra) + rows);
  return "wrote " + file.string() + " (p_star=" + fmt(res.p_star) + ")";
}

std::string bench_histogram(const ExperimentConfig &cfg) {
  const auto recs = acquire_records(cfg);
  const std::string algo = algo_label(recs);
  const GammaHistogram h = gamma_histogram(recs);
  const std::vector<std::pair<std::string, std::string>> extra{
      {"batch_size", std::to_string(recs.size())},
      {"bin_width", fmt(h.bin_width)},
      {"total", std::to_string(h.total)},
      {"underflow", std::to_string(h.underflow)},
      {"overflow", std::to_string(h.overflow)},
      {"near_zero_fraction", fmt17(h.near_zero_fraction)}};
  std::string rows = "bin_left,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b)
    rows += fmt17(h.bin_left[b]) + "," + std::to_string(h.counts[b]) + "\n";
  const fs::path file = fs::path(cfg.out) / ("histogram_" + algo + ".csv");
  write_file(file, csv_header(cfg, "bench histogram", extra) + rows);
  return "wrote " + file.string() + " (near_zero_fraction=" +
         fmt(h.near_zero_fraction) + ")";
}

std::string bench_variants(const ExperimentConfig &cfg) {
  if (cfg.is_gw())
    throw Error(ErrorCode::InvalidParameter, "variants benchmark needs a quantum algorithm");
  const auto instances = acquire_instances(cfg);
  const auto rows_v = variant_comparison(instances, cfg.adapt_config(), cfg.worker_count());
  std::string rows = "P,variant,mean_one_minus_alpha\n";
  for (const auto &r : rows_v)
    rows += std::to_string(r.p) + "," + std::string(variant_name(r.variant)) + "," +
            fmt17(r.mean_one_minus_alpha) + "\n";
  const fs::path file = fs::path(cfg.out) / "variants.csv";
  write_file(file, csv_header(cfg, "bench variants",
                              {{"batch_size", std::to_string(instances.size())}}) +
                       rows);
  return "wrote " + file.string();
}

std::string bench_mitigate(const ExperimentConfig &cfg) {
  const auto recs = acquire_records(cfg);
  const std::string algo = algo_label(recs);
  std::vector<double> grid = cfg.pgates;
  if (grid.empty())
    for (double p : default_noise_grid())
      if (p > 0.0 && p * cfg.richardson_c <= 1.0)
        grid.push_back(p);
  std::string rows =
      "p_gate,cnot_count,mean_alpha,stderr,mean_mitigated_alpha,mitigated_stderr\n";
  for (double p : grid) {
    const NoiseCurve raw = noise_curve(recs, p, cfg.worker_count());
    const NoiseCurve mit = mitigated_curve(recs, p, cfg.richardson_c, cfg.worker_count());
    for (std::size_t k = 0; k < raw.points.size(); ++k)
      rows += fmt17(p) + "," + std::to_string(raw.points[k].cnot_count) + "," +
              fmt17(raw.points[k].mean_alpha) + "," + fmt17(raw.points[k].stderr_alpha) +
              "," + fmt17(mit.points[k].mean_alpha) + "," +
              fmt17(mit.points[k].stderr_alpha) + "\n";
  }
  const fs::path file = fs::path(cfg.out) / ("mitigate_" + algo + ".csv");
  write_file(file, csv_header(cfg, "bench mitigate",
                              {{"batch_size", std::to_string(recs.size())}}) +
                       rows);
  return "wrote " + file.string();
}

std::string bench_noisy_growth(const ExperimentConfig &cfg) {
  if (cfg.is_gw())
    throw Error(ErrorCode::InvalidParameter, "noisy growth needs a quantum algorithm");
  const auto recs = acquire_records(cfg);
  const std::vector<double> grid =
      cfg.pgates.empty() ? std::vector<double>{0.00122} : cfg.pgates;
  const Metadata meta = metadata_of(cfg, "bench noisy-growth");
  std::string rows = "p_gate,P,series,mean_alpha,stderr\n";
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double p = grid[g];
    std::vector<std::optional<RunRecord>> grown(recs.size());
    parallel_for(recs.size(), cfg.worker_count(), [&](std::size_t i) {
      AdaptConfig c = recs[i].config;
      c.delta2_search = false;
      grown[i].emplace(noisy_growth(recs[i].instance, c, p));
    });
    std::vector<AlphaTrace> noisy;
    for (std::size_t i = 0; i < grown.size(); ++i) {
      noisy.push_back(record_trace(*grown[i]));
      char name[48];
      std::snprintf(name, sizeof name, "noisy_%02zu_%04zu.json", g, i);
      write_file(fs::path(cfg.out) / "noisy_records" / name,
                 record_to_json(*grown[i], meta));
    }
    std::vector<AlphaTrace> replay(recs.size());
    parallel_for(recs.size(), cfg.worker_count(),
                 [&](std::size_t i) { replay[i] = replay_trace(recs[i], p); });
    for (const auto &[series, traces] :
         {std::pair{"noisy_growth", &noisy}, std::pair{"replay", &replay}})
      for (const auto &pt : depth_curve(*traces))
        rows += fmt17(p) + "," + std::to_string(pt.p) + "," + series + "," +
                fmt17(pt.mean_alpha) + "," + fmt17(pt.stderr_alpha) + "\n";
  }
  const fs::path file = fs::path(cfg.out) / "noisy_growth.csv";
  write_file(file, csv_header(cfg, "bench noisy-growth",
                              {{"batch_size", std::to_string(recs.size())}}) +
                       rows);
  return "wrote " + file.string();
}

} // namespace

std::string cmd_bench(std::string_view sub, const ExperimentConfig &cfg) {
  cfg.validate();
  if (sub == "convergence")
    return bench_convergence(cfg);
  if (sub == "critical")
    return bench_critical(cfg);
  if (sub == "histogram")
    return bench_histogram(cfg);
  if (sub == "variants")
    return bench_variants(cfg);
  if (sub == "mitigate")
    return bench_mitigate(cfg);
  if (sub == "noisy-growth")
    return bench_noisy_growth(cfg);
  throw Error(ErrorCode::InvalidParameter,
              "unknown bench subcommand '" + std::string(sub) + "'");
}

} // namespace dynadapt
