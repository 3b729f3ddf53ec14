// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qca {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad inputs or configuration; the CLI maps these to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// A numerical contract was violated; the CLI maps these to exit code 3.
struct NumericError : Error {
  using Error::Error;
};

struct InvalidSpec : ConfigError {
  using ConfigError::ConfigError;
};
struct IndexOutOfRange : ConfigError {
  using ConfigError::ConfigError;
};
struct DuplicateFermionMode : ConfigError {
  using ConfigError::ConfigError;
};
struct TooManyParticles : ConfigError {
  using ConfigError::ConfigError;
};
struct UnknownMode : ConfigError {
  using ConfigError::ConfigError;
};
struct MissingPhase : ConfigError {
  using ConfigError::ConfigError;
};
struct DimensionOverflow : ConfigError {
  using ConfigError::ConfigError;
};
struct EmptyModes : ConfigError {
  using ConfigError::ConfigError;
};
struct ZeroMomentum : ConfigError {
  using ConfigError::ConfigError;
};

struct NotHermitian : NumericError {
  using NumericError::NumericError;
};
struct NotUnitary : NumericError {
  using NumericError::NumericError;
};
struct ConditionViolation : NumericError {
  using NumericError::NumericError;
};
struct BranchCut : NumericError {
  using NumericError::NumericError;
};

}  // namespace qca
