// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qca {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;

constexpr Complex kImag{0.0, 1.0};

/// Entrywise infinity norm ("max-norm" of the contracts).
inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const ComplexVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// ||m - m^dagger||_max
inline double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(ComplexMatrix(m - m.adjoint()));
}

/// ||m^dagger m - I||_max
inline double unitarity_residual(const ComplexMatrix& m) {
  return max_abs(ComplexMatrix(m.adjoint() * m -
                               ComplexMatrix::Identity(m.rows(), m.cols())));
}

}  // namespace qca
