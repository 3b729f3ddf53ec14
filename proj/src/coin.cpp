// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/coin.hpp"

#include <cmath>

#include "qca/errors.hpp"

namespace qca {

namespace {

ComplexMatrix pauli(int axis) {
  ComplexMatrix s(2, 2);
  switch (axis) {
    case 0:
      s << 0, 1, 1, 0;
      break;
    case 1:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    default:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

// Spin-1 generators (J_a)_{bc} = -i eps_{abc}.
ComplexMatrix spin1(int axis) {
  ComplexMatrix j = ComplexMatrix::Zero(3, 3);
  const Complex i(0, 1);
  switch (axis) {
    case 0:
      j(1, 2) = -i;
      j(2, 1) = i;
      break;
    case 1:
      j(0, 2) = i;
      j(2, 0) = -i;
      break;
    default:
      j(0, 1) = -i;
      j(1, 0) = i;
      break;
  }
  return j;
}

const char* axis_name(int axis) { return axis == 0 ? "X" : axis == 1 ? "Y" : "Z"; }

void add_check(ConditionReport& report, std::string name, double residual,
               double tolerance) {
  report.checks.push_back({std::move(name), residual, tolerance});
}

// Least-squares fit of s in M_i ~ s P_i over a family of relation pairs,
// s = sum_i Re<P_i, M_i>_F / sum_i <P_i, P_i>_F.
double fit_scalar(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>&
                      target_and_projector) {
  double num = 0.0, den = 0.0;
  for (const auto& [m, p] : target_and_projector) {
    num += (p.adjoint() * m).trace().real();
    den += (p.adjoint() * p).trace().real();
  }
  return den > 0 ? num / den : 0.0;
}

}  // namespace

CoinSet build_fermion_coin() {
  CoinSet coin;
  coin.kind = WalkKind::fermion;
  coin.dim = 4;
  coin.coin_flip = ComplexMatrix::Zero(4, 4);
  coin.coin_flip.diagonal() << 1, 1, -1, -1;  // gamma_0, Dirac representation
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  for (int axis = 0; axis < 3; ++axis) {
    // gamma_0 gamma_i = [[0, sigma_i], [sigma_i, 0]]
    ComplexMatrix dp = ComplexMatrix::Zero(4, 4);
    dp.block(0, 2, 2, 2) = pauli(axis);
    dp.block(2, 0, 2, 2) = pauli(axis);
    coin.delta_p[axis] = dp;
    coin.proj_plus[axis] = 0.5 * (id + dp);
    coin.proj_minus[axis] = 0.5 * (id - dp);
  }
  return coin;
}

CoinSet build_boson_coin() {
  CoinSet coin;
  coin.kind = WalkKind::boson;
  coin.dim = 3;
  const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
  for (int axis = 0; axis < 3; ++axis) {
    const ComplexMatrix j = spin1(axis);
    const ComplexMatrix j2 = j * j;
    coin.delta_p[axis] = j;
    coin.proj_plus[axis] = 0.5 * (j2 + j);
    coin.proj_minus[axis] = 0.5 * (j2 - j);
    coin.proj_zero[axis] = id - j2;
  }
  return coin;
}

ConditionReport check_coin_conditions(const CoinSet& coin) {
  ConditionReport report;
  const ComplexMatrix id = ComplexMatrix::Identity(coin.dim, coin.dim);

  if (coin.kind == WalkKind::fermion) {
    // The ten algebra residuals: six anticommutators, four squares.
    std::array<const ComplexMatrix*, 4> ops = {&coin.delta_p[0], &coin.delta_p[1],
                                               &coin.delta_p[2], &coin.coin_flip};
    std::array<std::string, 4> names = {"dP_X", "dP_Y", "dP_Z", "Q"};
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        const double r = max_abs(ComplexMatrix(*ops[a] * *ops[b] + *ops[b] * *ops[a]));
        add_check(report, "anticommutator(" + names[a] + "," + names[b] + ")", r,
                  1e-13);
      }
    }
    for (int a = 0; a < 4; ++a) {
      const double r = max_abs(ComplexMatrix(*ops[a] * *ops[a] - id));
      add_check(report, "square(" + names[a] + ")", r, 1e-13);
    }
    // Projector consistency and the equal-norm constant (1/2 for four
    // mutually anticommuting generators).
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> fam;
    for (int j = 0; j < 3; ++j) {
      for (int jp = 0; jp < 3; ++jp) {
        if (j == jp) continue;
        for (const auto* pj : {&coin.proj_plus[j], &coin.proj_minus[j]}) {
          fam.emplace_back(*pj * coin.proj_plus[jp] * *pj, *pj);
          fam.emplace_back(*pj * coin.proj_minus[jp] * *pj, *pj);
        }
      }
    }
    report.c = fit_scalar(fam);
    double worst = 0.0;
    for (const auto& [m, p] : fam) {
      worst = std::max(worst, max_abs(ComplexMatrix(m - report.c * p)));
    }
    add_check(report, "equal_norm(c)", worst, 1e-12);
  } else {
    for (int axis = 0; axis < 3; ++axis) {
      const ComplexMatrix& pp = coin.proj_plus[axis];
      const ComplexMatrix& pm = coin.proj_minus[axis];
      const ComplexMatrix& p0 = coin.proj_zero[axis];
      const std::string ax = axis_name(axis);
      add_check(report, "resolution(" + ax + ")",
                max_abs(ComplexMatrix(pp + p0 + pm - id)), 1e-12);
      double orth = 0.0;
      orth = std::max(orth, max_abs(ComplexMatrix(pp * pm)));
      orth = std::max(orth, max_abs(ComplexMatrix(pp * p0)));
      orth = std::max(orth, max_abs(ComplexMatrix(p0 * pm)));
      orth = std::max(orth, max_abs(ComplexMatrix(pp * pp - pp)));
      orth = std::max(orth, max_abs(ComplexMatrix(pm * pm - pm)));
      orth = std::max(orth, max_abs(ComplexMatrix(p0 * p0 - p0)));
      add_check(report, "orthogonal_idempotent(" + ax + ")", orth, 1e-12);
      add_check(report, "delta_p(" + ax + ")",
                max_abs(ComplexMatrix(pp - pm - coin.delta_p[axis])), 1e-12);
      add_check(
          report, "delta_p_squared(" + ax + ")",
          max_abs(ComplexMatrix(coin.delta_p[axis] * coin.delta_p[axis] - (id - p0))),
          1e-12);
    }
    // Vanishing rest channel across axes.
    add_check(report, "p0_pair(X,Y)",
              max_abs(ComplexMatrix(coin.proj_zero[0] * coin.proj_zero[1])), 1e-12);
    add_check(report, "p0_pair(Y,Z)",
              max_abs(ComplexMatrix(coin.proj_zero[1] * coin.proj_zero[2])), 1e-12);
    add_check(report, "p0_pair(Z,X)",
              max_abs(ComplexMatrix(coin.proj_zero[2] * coin.proj_zero[0])), 1e-12);

    // Equal-norm families: P_j^k P_j'^+- P_j^k = c P_j^k and the two
    // c' families mixing in the rest projectors.
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> fam_c, fam_cp;
    for (int j = 0; j < 3; ++j) {
      for (int jp = 0; jp < 3; ++jp) {
        if (j == jp) continue;
        for (const auto* pj : {&coin.proj_plus[j], &coin.proj_minus[j]}) {
          fam_c.emplace_back(*pj * coin.proj_plus[jp] * *pj, *pj);
          fam_c.emplace_back(*pj * coin.proj_minus[jp] * *pj, *pj);
          fam_cp.emplace_back(*pj * coin.proj_zero[jp] * *pj, *pj);
        }
        const ComplexMatrix& p0 = coin.proj_zero[j];
        fam_cp.emplace_back(p0 * coin.proj_plus[jp] * p0, p0);
        fam_cp.emplace_back(p0 * coin.proj_minus[jp] * p0, p0);
      }
    }
    report.c = fit_scalar(fam_c);
    report.c_prime = fit_scalar(fam_cp);
    double worst_c = 0.0, worst_cp = 0.0;
    for (const auto& [m, p] : fam_c) {
      worst_c = std::max(worst_c, max_abs(ComplexMatrix(m - report.c * p)));
    }
    for (const auto& [m, p] : fam_cp) {
      worst_cp = std::max(worst_cp, max_abs(ComplexMatrix(m - report.c_prime * p)));
    }
    add_check(report, "equal_norm(c)", worst_c, 1e-12);
    add_check(report, "equal_norm(c_prime)", worst_cp, 1e-12);
  }

  for (const auto& check : report.checks) {
    report.max_residual = std::max(report.max_residual, check.residual);
    report.all_pass = report.all_pass && check.pass();
  }
  return report;
}

ConditionReport verify_coin_conditions(const CoinSet& coin) {
  ConditionReport report = check_coin_conditions(coin);
  if (!report.all_pass) {
    for (const auto& check : report.checks) {
      if (!check.pass()) {
        throw ConditionViolation("coin condition failed: " + check.name +
                                 " residual " + std::to_string(check.residual));
      }
    }
  }
  return report;
}

}  // namespace qca
