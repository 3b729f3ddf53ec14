// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Periodic cubic lattice, its momentum grid, and the per-momentum walk
// unitaries U_k obtained by replacing each shift with its plane-wave phase:
//
//   fermion: U_k = e^{i theta Q} e^{i k_z dx dP_Z} e^{i k_y dx dP_Y} e^{i k_x dx dP_X}
//   boson:   U_k =               e^{i k_z dx J_Z}  e^{i k_y dx J_Y}  e^{i k_x dx J_X}
//
// The X factor acts first in both representations.

#pragma once

#include <compare>
#include <cstddef>

#include "qca/coin.hpp"
#include "qca/linalg.hpp"
#include "qca/types.hpp"

namespace qca {

struct PhysicalConstants {
  double hbar = 1.0;
  double eps0 = 1.0;
};

struct LatticeSpec {
  int sites = 8;       // N, sites per dimension; even and >= 2
  double dx = 1.0;     // lattice spacing
  double dt = 1.0;     // time step
  double theta = 0.0;  // coin angle; must be 0 for the boson walk
  PhysicalConstants constants;

  double light_speed() const { return dx / dt; }
  double momentum_step() const;  // 2 pi / (N dx)
  int index_min() const { return -sites / 2 + 1; }
  int index_max() const { return sites / 2; }
  std::size_t site_count() const {
    return static_cast<std::size_t>(sites) * sites * sites;
  }

  /// Throws InvalidSpec unless N is even and >= 2, dx > 0, dt > 0 and the
  /// physical constants are positive.
  void validate() const;
};

struct MomentumIndex {
  int n = 0, o = 0, p = 0;
  friend auto operator<=>(const MomentumIndex&, const MomentumIndex&) = default;
};

/// k = (n, o, p) * 2 pi / (N dx).  Throws IndexOutOfRange if any component
/// is outside [-N/2 + 1, N/2].
Vec3 momentum_of_index(const LatticeSpec& spec, const MomentumIndex& idx);

/// Wraps an arbitrary integer triple onto the canonical index range.
MomentumIndex wrap_index(const LatticeSpec& spec, int n, int o, int p);

struct MomentumBlock {
  MomentumIndex index;
  Vec3 k;
  ComplexMatrix unitary;  // D x D
  RealVector phases;      // ascending in (-pi, pi]
  ComplexMatrix vectors;  // eigenvector columns matching phases
};

/// The coin-space walk unitary at an arbitrary (not necessarily on-grid)
/// momentum, with a = k dx:
///   e^{i theta Q} e^{i a_z dP_Z} e^{i a_y dP_Y} e^{i a_x dP_X}.
/// The long-wavelength checks sample continuous momenta through this.
ComplexMatrix walk_unitary_at(const CoinSet& coin, const Vec3& k_dx,
                              double theta);

/// Builds U_k for one momentum and diagonalizes it.
/// Throws InvalidSpec for a boson coin with theta != 0.
MomentumBlock build_block(const LatticeSpec& spec, const CoinSet& coin,
                          const MomentumIndex& idx);

}  // namespace qca
