// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// The named invariant suite behind `qca invariants`: every module's
// residual checks at their documented tolerances, seeded and deterministic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qca {

enum class CheckSense { at_most, at_least };

struct InvariantCheck {
  std::string name;
  double value;
  double tolerance;
  CheckSense sense = CheckSense::at_most;
  bool pass() const {
    return sense == CheckSense::at_most ? value <= tolerance
                                        : value >= tolerance;
  }
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  std::uint64_t seed = 0;
  bool all_pass() const;
};

struct InvariantOptions {
  int sites = 8;
  double dx = 1.0;
  double dt = 1.0;
  double theta = 0.05;
  std::uint64_t seed = 1;
  bool corrupt_coin = false;  // negative-control hook
};

InvariantReport run_invariant_suite(const InvariantOptions& options);

std::string invariant_report_json(const InvariantReport& report,
                                  const InvariantOptions& options);

}  // namespace qca
