/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// Command-line front end. Talks to the library only through the C API.

#include "dynadapt/dynadapt.h"

#include "CLI11.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Flags {
  std::map<std::string, std::string> values;
  std::vector<std::string> pgates;
  std::string config_file;
  bool quick = false;
  bool delta2_search = false;
};

// Options shared by every command. Each one maps onto a config key.
void add_common(CLI::App *app, Flags &f) {
  struct Spec {
    const char *flag;
    const char *key;
    const char *help;
  };
  static const Spec specs[] = {
      {"--algo", "algo",
       "standard | dynamic | dynamic-nocost | dynamic-noreselect | gw"},
      {"--n", "n", "vertices per graph"},
      {"--instances", "instances", "number of instances"},
      {"--P", "P", "maximum number of layers"},
      {"--epsilon", "epsilon", "stop when the energy gain falls below this"},
      {"--gamma-offset", "gamma_offset", "cost offset for gradient screening"},
      {"--gamma-init", "gamma_init", "initial |gamma_p| (default: the offset)"},
      {"--delta1", "delta1", "skip threshold on |C|"},
      {"--delta2", "delta2", "skip threshold on B*D"},
      {"--rounds", "rounds", "hyperplane roundings per GW instance"},
      {"--seed", "seed", "global seed"},
      {"--jobs", "jobs", "worker threads (default: all cores)"},
      {"--out", "out", "output directory"},
      {"--records", "records", "directory of stored run records"},
      {"--instance-dir", "instance_dir", "load instances from this directory"},
      {"--richardson-c", "richardson_c", "noise scale factor for mitigation"},
      {"--p-lo", "p_lo", "lower bound of the critical search"},
      {"--p-hi", "p_hi", "upper bound of the critical search"},
      {"--grid-points", "grid_points", "log grid size of the critical search"},
  };
  for (const Spec &s : specs)
    app->add_option_function<std::string>(
        s.flag, [&f, key = std::string(s.key)](const std::string &v) { f.values[key] = v; },
        s.help);
  app->add_option("--pgate", f.pgates, "gate error probability (repeatable)");
  app->add_flag("--quick", f.quick, "20 instances unless --instances is given");
  app->add_flag("--delta2-search", f.delta2_search, "grid-search delta2 per instance");
  app->add_option("--config", f.config_file, "key=value settings file");
}

int exit_code(dyn_status s) {
  switch (s) {
  case DYN_OK:
    return 0;
  case DYN_ERR_INVALID_INSTANCE:
  case DYN_ERR_INVALID_PARAMETER:
  case DYN_ERR_UNSUPPORTED_MIXER:
  case DYN_ERR_PARSE:
  case DYN_ERR_NULL_ARGUMENT:
    return 2;
  case DYN_ERR_RESOURCE:
  case DYN_ERR_IO:
    return 3;
  default:
    return 1;
  }
}

int fail(dyn_status s) {
  std::fprintf(stderr, "dynadapt: %s: %s\n", dyn_status_name(s), dyn_last_error());
  return exit_code(s);
}

using ConfigPtr = std::unique_ptr<dyn_config, decltype(&dyn_config_free)>;

dyn_status build_config(const Flags &f, ConfigPtr &cfg) {
  dyn_config *raw = nullptr;
  if (dyn_status s = dyn_config_create(&raw); s != DYN_OK)
    return s;
  cfg.reset(raw);
  if (!f.config_file.empty())
    if (dyn_status s = dyn_config_load_file(raw, f.config_file.c_str()); s != DYN_OK)
      return s;
  for (const auto &[k, v] : f.values)
    if (dyn_status s = dyn_config_set(raw, k.c_str(), v.c_str()); s != DYN_OK)
      return s;
  if (!f.pgates.empty()) {
    if (dyn_status s = dyn_config_set(raw, "pgate", ""); s != DYN_OK)
      return s;
    for (const auto &p : f.pgates)
      if (dyn_status s = dyn_config_set(raw, "pgate", p.c_str()); s != DYN_OK)
        return s;
  }
  if (f.quick)
    if (dyn_status s = dyn_config_set(raw, "quick", "true"); s != DYN_OK)
      return s;
  if (f.delta2_search)
    if (dyn_status s = dyn_config_set(raw, "delta2_search", "true"); s != DYN_OK)
      return s;
  return DYN_OK;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Adaptive QAOA circuit growth for weighted Max-Cut"};
  app.set_version_flag("--version", std::string(dyn_version()));
  app.require_subcommand(1);

  Flags flags;
  CLI::App *run = app.add_subcommand("run", "grow circuits (or run GW) on a batch");
  add_common(run, flags);

  CLI::App *bench = app.add_subcommand("bench", "benchmark experiments");
  bench->require_subcommand(1);
  const char *subs[][2] = {
      {"convergence", "mean alpha versus CNOT count under noise"},
      {"critical", "critical gate error probability against GW"},
      {"histogram", "histogram of optimised cost angles"},
      {"variants", "compare the dynamic variants"},
      {"mitigate", "Richardson-mitigated convergence curves"},
      {"noisy-growth", "noisy growth against noiseless-growth replay"},
  };
  std::vector<CLI::App *> bench_subs;
  for (const auto &s : subs) {
    CLI::App *sc = bench->add_subcommand(s[0], s[1]);
    add_common(sc, flags);
    bench_subs.push_back(sc);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  ConfigPtr cfg(nullptr, &dyn_config_free);
  if (dyn_status s = build_config(flags, cfg); s != DYN_OK)
    return fail(s);

  char summary[1024] = {0};
  dyn_status s = DYN_OK;
  if (run->parsed()) {
    s = dyn_cmd_run(cfg.get(), summary, sizeof summary, nullptr);
  } else {
    for (CLI::App *sc : bench_subs)
      if (sc->parsed())
        s = dyn_cmd_bench(cfg.get(), sc->get_name().c_str(), summary, sizeof summary,
                          nullptr);
  }
  if (s != DYN_OK)
    return fail(s);
  std::printf("%s\n", summary);
  return 0;
}
