// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "qca/lattice.hpp"

namespace qca {

struct ScanRow {
  MomentumIndex index;
  Vec3 k;
  int branch;
  double phase;
};

// A near-tie in the overlap matching (gap < 1e-9), resolved by phase order.
struct ScanAmbiguity {
  std::size_t position;  // path position where the tie occurred
  int branch;
  double gap;
};

struct ScanTable {
  std::vector<ScanRow> rows;  // path-position major, branch ascending
  std::vector<ScanAmbiguity> ambiguities;
};

/// Diagonalizes U_k along a momentum path.  Branch labels are assigned by
/// phase order at the first point and then tracked by maximal eigenvector
/// overlap with the previous point, so bands keep their identity through
/// crossings.
ScanTable spectrum_scan(const LatticeSpec& spec, const CoinSet& coin,
                        std::span<const MomentumIndex> path);

/// CSV with header n,o,p,kx,ky,kz,branch,phase; floats in shortest
/// round-trip form.
void write_scan_csv(std::ostream& out, const ScanTable& table);

}  // namespace qca
