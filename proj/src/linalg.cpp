// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "qca/errors.hpp"

namespace qca {

namespace {

constexpr double kPi = std::numbers::pi;

// Phase of an eigenvalue, folded into (-pi, pi].
double principal_phase(Complex lambda) {
  double phi = std::arg(lambda);
  if (phi <= -kPi) phi = kPi;
  return phi;
}

}  // namespace

ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double t) {
  if (hermiticity_residual(h) > 1e-12) {
    throw NotHermitian("unitary_from_hermitian: generator is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const RealVector& omega = solver.eigenvalues();
  ComplexVector phase(omega.size());
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    phase[i] = std::polar(1.0, t * omega[i]);
  }
  return solver.eigenvectors() * phase.asDiagonal() *
         solver.eigenvectors().adjoint();
}

UnitaryEigen eig_unitary(const ComplexMatrix& u) {
  if (unitarity_residual(u) > 1e-12) {
    throw NotUnitary("eig_unitary: matrix is not unitary");
  }
  const Eigen::Index n = u.rows();

  // Schur of a normal matrix: T is diagonal up to rounding and the Schur
  // basis is orthonormal, which keeps degenerate subspaces well conditioned.
  Eigen::ComplexSchur<ComplexMatrix> schur(u, /*computeU=*/true);
  ComplexVector lambda = schur.matrixT().diagonal();
  ComplexMatrix basis = schur.matrixU();

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::vector<double> phi(n);
  for (Eigen::Index i = 0; i < n; ++i) phi[i] = principal_phase(lambda[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return phi[a] < phi[b]; });

  UnitaryEigen out;
  out.phases.resize(n);
  out.vectors.resize(n, n);
  ComplexMatrix sorted_basis(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.phases[i] = phi[order[i]];
    sorted_basis.col(i) = basis.col(order[i]);
  }

  // Cluster by gap on the unit circle so a degenerate pair straddling the
  // +-pi cut is still one cluster.
  constexpr double kClusterGap = 1e-9;
  std::vector<Eigen::Index> cluster_of(n, 0);
  Eigen::Index n_clusters = n > 0 ? 1 : 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double gap =
        std::abs(std::polar(1.0, out.phases[i]) - std::polar(1.0, out.phases[i - 1]));
    if (gap >= kClusterGap) ++n_clusters;
    cluster_of[i] = n_clusters - 1;
  }
  if (n > 1 && n_clusters > 1) {
    const double wrap_gap =
        std::abs(std::polar(1.0, out.phases[0]) - std::polar(1.0, out.phases[n - 1]));
    if (wrap_gap < kClusterGap) {
      const Eigen::Index last = cluster_of[n - 1];
      for (Eigen::Index i = 0; i < n; ++i) {
        if (cluster_of[i] == last) cluster_of[i] = 0;
      }
    }
  }

  // Deterministic basis per cluster: orthonormalized projections of the
  // canonical basis vectors, lowest index first.
  for (Eigen::Index c = 0; c < n_clusters; ++c) {
    std::vector<Eigen::Index> members;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (cluster_of[i] == c) members.push_back(i);
    }
    if (members.empty()) continue;

    ComplexMatrix span(n, members.size());
    for (std::size_t j = 0; j < members.size(); ++j) {
      span.col(j) = sorted_basis.col(members[j]);
    }
    const ComplexMatrix projector = span * span.adjoint();

    std::vector<ComplexVector> fixed;
    for (Eigen::Index e = 0; e < n && fixed.size() < members.size(); ++e) {
      ComplexVector w = projector.col(e);  // projector * canonical e_e
      for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexVector& v : fixed) w -= v * v.dot(w);
      }
      const double len = w.norm();
      if (len > 1e-6) fixed.push_back(w / len);
    }
    // The canonical projections span the subspace; keep the Schur vectors
    // only if degeneracy defeated the threshold above.
    for (std::size_t j = fixed.size(); j < members.size(); ++j) {
      ComplexVector w = span.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexVector& v : fixed) w -= v * v.dot(w);
      }
      fixed.push_back(w.normalized());
    }
    for (std::size_t j = 0; j < members.size(); ++j) {
      sorted_basis.col(members[j]) = fixed[j];
    }
  }

  out.vectors = sorted_basis;
  return out;
}

}  // namespace qca
