// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Position-space representation of a single walker and the brute-force
// stepper.  The stepper exists as an oracle for the momentum-block fast
// path: a plane wave stepped here must reproduce U_k exactly.

#pragma once

#include <cstddef>

#include "qca/lattice.hpp"

namespace qca {

/// Amplitudes over (site, coin component), site-major with the site index
/// ((x*N + y)*N + z); unit 2-norm for physical states.
struct SingleParticleState {
  WalkKind kind;
  int sites = 0;     // N
  int coin_dim = 0;  // D
  ComplexVector amplitudes;

  std::size_t site_index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * sites + y) * sites + z;
  }
  std::size_t index(int x, int y, int z, int c) const {
    return site_index(x, y, z) * coin_dim + c;
  }
  double norm() const { return amplitudes.norm(); }
};

/// Plane wave with amplitudes e^{-i k.x} / N^{3/2} carrying the (normalized)
/// coin vector chi; an eigenvector of U_k as chi gives a walk eigenstate.
SingleParticleState plane_wave_state(const LatticeSpec& spec,
                                     const CoinSet& coin,
                                     const MomentumIndex& idx,
                                     const ComplexVector& chi);

/// One walk step in position space: coin-conditioned cyclic shifts applied
/// axis by axis (X first, matching the momentum-representation ordering),
/// then the sitewise coin flip e^{i theta Q} for the fermion walk.
SingleParticleState step_position_space(const LatticeSpec& spec,
                                        const CoinSet& coin,
                                        const SingleParticleState& state);

/// Coin-space component <k|psi>: N^{-3/2} sum_x e^{+i k.x} psi(x).
ComplexVector momentum_component(const LatticeSpec& spec,
                                 const SingleParticleState& state,
                                 const MomentumIndex& idx);

}  // namespace qca
