// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Embedding of N_max distinguishable particle types.  Each type lives in the
// walk space extended by a vacuum vector |w> (last basis vector); the joint
// evolution is U^(1) x ... x U^(Nmax) with U^(j) = U_walk + |w><w|.  The
// physical states are the totally (anti)symmetrized ones.
//
// Everything here is desk-scale by contract: dense tensors, hard dimension
// caps, clear errors.

#pragma once

#include <span>
#include <vector>

#include "qca/walk.hpp"

namespace qca {

enum class Statistics { fermi, bose };

inline const char* to_string(Statistics s) {
  return s == Statistics::fermi ? "fermi" : "bose";
}

/// One single-particle energy eigenstate label: momentum index plus branch.
struct Mode {
  MomentumIndex index;
  int branch = 0;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

struct DistinguishableState {
  WalkKind kind;
  int n_types = 1;             // N_max
  std::size_t single_dim = 0;  // N^3 D + 1, vacuum last
  ComplexVector amplitudes;    // single_dim^n_types, first factor most significant

  double norm() const { return amplitudes.norm(); }
};

/// |Omega> = |w> x ... x |w>.  Throws DimensionOverflow above desk scale
/// (n_types > 3 or total dimension > 50000).
DistinguishableState vacuum_state(const LatticeSpec& spec, const CoinSet& coin,
                                  int n_types);

/// The full one-particle walk unitary as a dense N^3 D x N^3 D matrix,
/// assembled column by column from the position-space stepper.
ComplexMatrix dense_walk_unitary(const LatticeSpec& spec, const CoinSet& coin);

/// Walk-space amplitudes of the energy eigenstate labeled by `mode`, plus its
/// eigenphase.
struct ModeEigenstate {
  ComplexVector amplitudes;  // length N^3 D
  double phase;
};
ModeEigenstate mode_eigenstate(const LatticeSpec& spec, const CoinSet& coin,
                               const Mode& mode);

/// One step of U^(1) x ... x U^(Nmax).
DistinguishableState evolve_distinguishable(const DistinguishableState& state,
                                            const LatticeSpec& spec,
                                            const CoinSet& coin);

/// Same, with a precomputed dense_walk_unitary.
DistinguishableState evolve_distinguishable(const DistinguishableState& state,
                                            const ComplexMatrix& walk_unitary);

/// Average over all permutations of the particle-type factors, signed for
/// Fermi statistics.  Idempotent, Hermitian, commutes with the evolution.
DistinguishableState project_physical(const DistinguishableState& state,
                                      Statistics statistics);

/// Normalized (anti)symmetrized product of the walk eigenstates in `modes`,
/// padded with vacuum factors.  The symmetrization runs over the occupied
/// slots; permuting the input order changes the result only by the sign of
/// the permutation for Fermi statistics.  Repeated Bose modes get the
/// 1/sqrt(m!) multiplicity normalization.
/// Throws DuplicateFermionMode / TooManyParticles.
DistinguishableState build_basis_state(std::span<const Mode> modes,
                                       Statistics statistics,
                                       const LatticeSpec& spec,
                                       const CoinSet& coin, int n_types);

}  // namespace qca
