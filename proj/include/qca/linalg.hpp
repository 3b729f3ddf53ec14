// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex-matrix kernels shared by every module: the exponential
// of a Hermitian generator and the spectral decomposition of a unitary, with
// a deterministic eigenbasis inside degenerate clusters.

#pragma once

#include "qca/types.hpp"

namespace qca {

/// exp(i t h) for Hermitian h, computed from the eigendecomposition of h
/// (exact up to rounding for the small matrices used here).
/// Throws NotHermitian if ||h - h^dagger||_max > 1e-12.
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double t);

struct UnitaryEigen {
  RealVector phases;      // ascending, each in (-pi, pi]
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(j) <-> phases[j]
};

/// Spectral decomposition u = V diag(e^{i phi}) V^dagger of a unitary.
///
/// Phases are sorted ascending in (-pi, pi].  Within a degenerate cluster
/// (phase gap < 1e-9, measured on the unit circle so the cut at +-pi does
/// not split a cluster) the eigenbasis is fixed by orthonormalizing the
/// projections of the canonical basis vectors, lowest index first, which
/// makes the output deterministic.
/// Throws NotUnitary if ||u^dagger u - I||_max > 1e-12.
UnitaryEigen eig_unitary(const ComplexMatrix& u);

}  // namespace qca
