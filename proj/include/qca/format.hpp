// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <string>

namespace qca {

/// Shortest decimal representation that round-trips the double exactly;
/// all file output goes through this so artifacts are byte-reproducible.
/// Negative zero is flushed to "0".
inline std::string format_double(double value) {
  if (value == 0.0) value = 0.0;
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace qca
