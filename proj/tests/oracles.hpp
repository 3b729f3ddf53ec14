// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles and generators.  Everything here is independent of the
// library's computational paths: the exponential is a plain power series,
// the curl is finite differences, random objects come from a seeded engine.

#pragma once

#include <random>

#include "qca/types.hpp"

namespace qca::testing {

using Rng = std::mt19937_64;

/// Power-series sum_{n<terms} (i t h)^n / n! — the oracle for
/// unitary_from_hermitian.
inline ComplexMatrix expm_series(const ComplexMatrix& h, double t, int terms) {
  ComplexMatrix sum = ComplexMatrix::Identity(h.rows(), h.cols());
  ComplexMatrix term = sum;
  for (int n = 1; n < terms; ++n) {
    term = term * h * (Complex(0.0, t) / double(n));
    sum += term;
  }
  return sum;
}

inline Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

inline ComplexVector random_complex_vector(Rng& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

/// Haar-like random unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases absorbed.
inline ComplexMatrix haar_unitary(Rng& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qca::testing
