/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "dynadapt/adapt.hpp"
#include "dynadapt/maxcut.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dynadapt {

/// Library version, "major.minor.patch".
std::string_view version_string();

/// Extra key/value strings written next to a record (resolved experiment
/// settings, batch size, ...).
using Metadata = std::map<std::string, std::string>;

/// {"n": ..., "seed": ..., "weights": [n*n reals, row-major]}. Doubles are
/// written in shortest round-trip form, so save/load is bit-exact.
std::string instance_to_json(const MaxCutInstance &inst);
MaxCutInstance instance_from_json(std::string_view text);

std::string config_to_json(const AdaptConfig &config);
AdaptConfig config_from_json(std::string_view text);

std::string record_to_json(const RunRecord &record,
                           const Metadata &metadata = {});
RunRecord record_from_json(std::string_view text);

/// Whole-file read and write; failures raise Error(Io).
std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view text);

/// Loads every *.json run record in `dir`, sorted by file name. A missing
/// directory raises Error(Io).
std::vector<RunRecord> load_records(const std::filesystem::path &dir);

} // namespace dynadapt
