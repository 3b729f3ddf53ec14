// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Photon-sector observables built from coherent mode amplitudes:
//
//   A(x,t) = sum_k,j sqrt(hbar / 2 eps0 w_k V) e_kj (a_kj(t) e^{i k.x} + c.c.)
//   E(x,t) = sum_k,j i sqrt(hbar w_k / 2 eps0 V) e_kj (a_kj(t) e^{i k.x} - c.c.)
//   B = curl A, taken exactly in momentum space (coefficient i k x .)
//
// with w_k = c |k|, V = (N dx)^3 and a_kj(t) = a_kj e^{-i w t}.  The time
// phase w is the continuum w_k by default; the lattice model uses the exact
// positive walk phase / dt instead, and the gap between the two is exactly
// the long-wavelength discrepancy of the walk.

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qca/lattice.hpp"

namespace qca {

struct FieldModeKey {
  MomentumIndex index;
  int polarization = 1;  // 1 or 2
  friend auto operator<=>(const FieldModeKey&, const FieldModeKey&) = default;
};

/// Coherent amplitudes <b_kj> keyed by (momentum index, polarization).
/// The zero mode k = 0 is excluded (its 1/sqrt(w_k) normalization is
/// singular); inserting it throws ZeroMomentum.
struct ModeAmplitudes {
  LatticeSpec spec;
  std::map<FieldModeKey, Complex> amplitudes;

  void insert(const FieldModeKey& key, Complex amplitude);
  bool empty() const { return amplitudes.empty(); }
};

enum class FrequencyModel { continuum, lattice_walk };

/// Angular frequency used for the time phase of a mode: c|k| for the
/// continuum model, (positive boson walk eigenphase)/dt for lattice_walk.
double mode_frequency(const LatticeSpec& spec, const MomentumIndex& idx,
                      FrequencyModel model);

struct FieldSnapshot {
  double time = 0.0;
  int sites = 0;
  std::vector<Vec3> vector_potential;  // A, site-major ((x N + y) N + z)
  std::vector<Vec3> electric;          // E
  std::vector<Vec3> magnetic;          // B
  double max_imag = 0.0;  // largest imaginary residue of the mode sums
};

/// Evaluates A, E, B on every lattice site at time t.  frequency_scale
/// multiplies the time phase only (debug hook for the corrupted-frequency
/// negative control).  Throws EmptyModes.
FieldSnapshot field_snapshot(const ModeAmplitudes& modes, double t,
                             FrequencyModel model = FrequencyModel::continuum,
                             double frequency_scale = 1.0);

struct MaxwellResiduals {
  double faraday = 0.0;  // max_k || d_t B_k + i k x E_k ||
  double ampere = 0.0;   // max_k || d_t E_k - c^2 i k x B_k ||
  double div_e = 0.0;    // max_k | k . E_k |
  double div_b = 0.0;    // max_k | k . B_k |
  double scale = 0.0;    // field scale the residuals compare against
};

/// Source-free Maxwell residuals per mode in momentum space, with d_t
/// evaluated analytically from the e^{-i w t} dependence.  Throws EmptyModes.
MaxwellResiduals maxwell_residuals(const ModeAmplitudes& modes, double t,
                                   FrequencyModel model = FrequencyModel::continuum,
                                   double frequency_scale = 1.0);

/// Normal-ordered coherent expectation sum_kj c hbar |k| |a_kj|^2.
double photon_energy(const ModeAmplitudes& modes);

/// CSV with header x,y,z,Ax,Ay,Az,Ex,Ey,Ez,Bx,By,Bz; site coordinates in
/// units of dx.
void write_snapshot_csv(std::ostream& out, const FieldSnapshot& snapshot);

/// {"faraday":..,"ampere":..,"divE":..,"divB":..}
std::string residual_report_json(const MaxwellResiduals& residuals);

}  // namespace qca
