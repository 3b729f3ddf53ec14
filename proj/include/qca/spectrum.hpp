// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Long-wavelength analysis: the relativistic dispersion reference and
// effective mass for the fermion walk, Hermitian generator extraction, and
// the photon-sector spectrum (spin-1 Hamiltonian, transverse polarization
// vectors).

#pragma once

#include <array>
#include <ostream>
#include <span>

#include "qca/lattice.hpp"
#include "qca/scan.hpp"

namespace qca {

/// The +-sqrt(c^2 |hbar k|^2 + m^2 c^4) reference energies, with
/// m = (hbar dt / dx^2) theta.  Returned as {negative, positive}.
std::array<double, 2> dirac_dispersion_reference(const Vec3& k,
                                                 const LatticeSpec& spec);

/// m = (hbar dt / dx^2) theta.
double effective_mass(const LatticeSpec& spec);

/// Hermitian G with U_k = exp(i G), taken on the principal branch:
/// G = V diag(phi) V^dagger from the block's eigensystem.  Throws BranchCut
/// if any eigenphase lies within 1e-9 of the +-pi cut.
ComplexMatrix extract_generator(const MomentumBlock& block);

struct GeneratorComparison {
  double residual;     // ||G - (theta Q + dx k.dP)||_max
  double coefficient;  // residual / (|k| dx + theta)^2
};

/// Compares the extracted generator against its first-order form
/// theta Q + dx (k_x dP_X + k_y dP_Y + k_z dP_Z).
GeneratorComparison first_order_generator_residual(const MomentumBlock& block,
                                                   const CoinSet& coin,
                                                   const LatticeSpec& spec);

struct PhotonModes {
  ComplexMatrix hamiltonian;    // H = -c hbar (k . J), 3x3 Hermitian
  Vec3 eigenvalues;             // ascending: {-c hbar |k|, 0, +c hbar |k|}
  Eigen::Vector3cd v_minus, v_zero, v_plus;  // matching eigenvectors
};

/// Spectrum of the long-wavelength boson Hamiltonian at one momentum.  Each
/// eigenvector is phase-fixed so its first component above 1e-12 in modulus
/// is real positive.  Throws ZeroMomentum for k = 0.
PhotonModes photon_hamiltonian(const Vec3& k, const LatticeSpec& spec);

struct PolarizationPair {
  Vec3 k;
  Vec3 e1, e2;  // real orthonormal transverse pair with e1 x e2 = k/|k|
};

/// Transverse polarization vectors
///   e1 = (k^2 - k_x^2, -k_x k_y, -k_x k_z) / (k sqrt(k^2 - k_x^2))
///   e2 = (0, k_z, -k_y) / sqrt(k^2 - k_x^2)
/// with the documented fallback e1 = (0,1,0), e2 = (0,0,sign(k_x)) when
/// k^2 - k_x^2 <= (1e-8 |k|)^2.  Throws ZeroMomentum for k = 0.
PolarizationPair polarization_vectors(const Vec3& k);

struct DispersionRow {
  MomentumIndex index;
  Vec3 k;
  int branch;
  double phase;
  double energy;  // hbar * phase / dt
};

std::vector<DispersionRow> dispersion_table(const LatticeSpec& spec,
                                            const CoinSet& coin,
                                            std::span<const MomentumIndex> path);

/// CSV with header n,o,p,kx,ky,kz,branch,phase,energy.
void write_dispersion_csv(std::ostream& out,
                          std::span<const DispersionRow> rows);

/// CSV with header kx,ky,kz,e1x,e1y,e1z,e2x,e2y,e2z.
void write_polarization_csv(std::ostream& out,
                            std::span<const PolarizationPair> pairs);

}  // namespace qca
