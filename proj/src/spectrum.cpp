// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "qca/errors.hpp"
#include "qca/format.hpp"

namespace qca {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3cd phase_fixed(const Eigen::Vector3cd& v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) > 1e-12) {
      return v * (std::conj(v[i]) / std::abs(v[i]));
    }
  }
  return v;
}

}  // namespace

double effective_mass(const LatticeSpec& spec) {
  return spec.constants.hbar * spec.dt / (spec.dx * spec.dx) * spec.theta;
}

std::array<double, 2> dirac_dispersion_reference(const Vec3& k,
                                                 const LatticeSpec& spec) {
  const double c = spec.light_speed();
  const double hbar = spec.constants.hbar;
  const double m = effective_mass(spec);
  const double e = std::sqrt(c * c * hbar * hbar * k.squaredNorm() +
                             m * m * c * c * c * c);
  return {-e, e};
}

ComplexMatrix extract_generator(const MomentumBlock& block) {
  for (Eigen::Index i = 0; i < block.phases.size(); ++i) {
    const double dist_to_cut =
        std::min(std::abs(block.phases[i] - kPi), std::abs(block.phases[i] + kPi));
    if (dist_to_cut < 1e-9) {
      throw BranchCut("extract_generator: eigenphase at the +-pi branch cut");
    }
  }
  ComplexMatrix g = block.vectors *
                    block.phases.cast<Complex>().asDiagonal() *
                    block.vectors.adjoint();
  return 0.5 * (g + g.adjoint());
}

GeneratorComparison first_order_generator_residual(const MomentumBlock& block,
                                                   const CoinSet& coin,
                                                   const LatticeSpec& spec) {
  ComplexMatrix first_order = spec.dx * (block.k.x() * coin.delta_p[0] +
                                         block.k.y() * coin.delta_p[1] +
                                         block.k.z() * coin.delta_p[2]);
  if (coin.kind == WalkKind::fermion) {
    first_order += spec.theta * coin.coin_flip;
  }
  GeneratorComparison cmp;
  cmp.residual = max_abs(ComplexMatrix(extract_generator(block) - first_order));
  const double scale = block.k.norm() * spec.dx + spec.theta;
  cmp.coefficient = scale > 0 ? cmp.residual / (scale * scale) : 0.0;
  return cmp;
}

PhotonModes photon_hamiltonian(const Vec3& k, const LatticeSpec& spec) {
  if (!(k.norm() > 0.0)) {
    throw ZeroMomentum("photon_hamiltonian: k must be nonzero");
  }
  const CoinSet coin = build_boson_coin();
  const double scale = -spec.light_speed() * spec.constants.hbar;
  PhotonModes modes;
  modes.hamiltonian = scale * (k.x() * coin.delta_p[0] + k.y() * coin.delta_p[1] +
                               k.z() * coin.delta_p[2]);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(modes.hamiltonian);
  modes.eigenvalues = solver.eigenvalues();
  modes.v_minus = phase_fixed(solver.eigenvectors().col(0));
  modes.v_zero = phase_fixed(solver.eigenvectors().col(1));
  modes.v_plus = phase_fixed(solver.eigenvectors().col(2));
  return modes;
}

PolarizationPair polarization_vectors(const Vec3& k) {
  const double norm = k.norm();
  if (!(norm > 0.0)) {
    throw ZeroMomentum("polarization_vectors: k must be nonzero");
  }
  PolarizationPair pair;
  pair.k = k;
  const double transverse_sq = k.squaredNorm() - k.x() * k.x();
  const double cutoff = 1e-8 * norm;
  if (transverse_sq <= cutoff * cutoff) {
    // k along +-X: the formulas are singular; any fixed transverse pair
    // works, signed to keep e1 x e2 = +k/|k|.
    pair.e1 = Vec3(0, 1, 0);
    pair.e2 = Vec3(0, 0, k.x() > 0 ? 1.0 : -1.0);
    return pair;
  }
  const double root = std::sqrt(transverse_sq);
  pair.e1 = Vec3(transverse_sq, -k.x() * k.y(), -k.x() * k.z()) / (norm * root);
  pair.e2 = Vec3(0, k.z(), -k.y()) / root;
  return pair;
}

std::vector<DispersionRow> dispersion_table(const LatticeSpec& spec,
                                            const CoinSet& coin,
                                            std::span<const MomentumIndex> path) {
  const ScanTable scan = spectrum_scan(spec, coin, path);
  std::vector<DispersionRow> rows;
  rows.reserve(scan.rows.size());
  const double energy_per_phase = spec.constants.hbar / spec.dt;
  for (const ScanRow& row : scan.rows) {
    rows.push_back({row.index, row.k, row.branch, row.phase,
                    energy_per_phase * row.phase});
  }
  return rows;
}

void write_dispersion_csv(std::ostream& out,
                          std::span<const DispersionRow> rows) {
  out << "n,o,p,kx,ky,kz,branch,phase,energy\n";
  for (const DispersionRow& row : rows) {
    out << row.index.n << ',' << row.index.o << ',' << row.index.p << ','
        << format_double(row.k.x()) << ',' << format_double(row.k.y()) << ','
        << format_double(row.k.z()) << ',' << row.branch << ','
        << format_double(row.phase) << ',' << format_double(row.energy) << '\n';
  }
}

void write_polarization_csv(std::ostream& out,
                            std::span<const PolarizationPair> pairs) {
  out << "kx,ky,kz,e1x,e1y,e1z,e2x,e2y,e2z\n";
  for (const PolarizationPair& pair : pairs) {
    out << format_double(pair.k.x()) << ',' << format_double(pair.k.y()) << ','
        << format_double(pair.k.z()) << ',' << format_double(pair.e1.x()) << ','
        << format_double(pair.e1.y()) << ',' << format_double(pair.e1.z()) << ','
        << format_double(pair.e2.x()) << ',' << format_double(pair.e2.y()) << ','
        << format_double(pair.e2.z()) << '\n';
  }
}

}  // namespace qca
