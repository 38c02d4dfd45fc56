/*******************************************************************************
 * Copyright (c) 2026 The dynadapt Authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <stdexcept>
#include <string>

namespace dynadapt {

enum class ErrorCode {
  InvalidInstance = 1,
  InvalidParameter,
  Dimension,
  ResourceLimit,
  UnsupportedMixer,
  Io,
  Parse,
};

/// Exception carrying one of the library error categories. The C API maps
/// each category onto a `dyn_status` value.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace dynadapt
