// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qca/coin.hpp"
#include "qca/errors.hpp"
#include "qca/linalg.hpp"

using namespace qca;

TEST_CASE("fermion coin: Dirac-representation structure") {
  const CoinSet coin = build_fermion_coin();
  CHECK(coin.dim == 4);

  // Q = diag(1, 1, -1, -1)
  CHECK(coin.coin_flip(0, 0) == Complex(1.0));
  CHECK(coin.coin_flip(1, 1) == Complex(1.0));
  CHECK(coin.coin_flip(2, 2) == Complex(-1.0));
  CHECK(coin.coin_flip(3, 3) == Complex(-1.0));

  // {dP_X, dP_Y} = 0 and (dP_Z)^2 = I, exactly in floating point
  const ComplexMatrix xy = coin.delta_p[0] * coin.delta_p[1] +
                           coin.delta_p[1] * coin.delta_p[0];
  CHECK(max_abs(xy) == 0.0);
  const ComplexMatrix zz = coin.delta_p[2] * coin.delta_p[2];
  CHECK(max_abs(ComplexMatrix(zz - ComplexMatrix::Identity(4, 4))) == 0.0);

  // P^+- really are the +-1 spectral projectors of dP
  for (int axis = 0; axis < 3; ++axis) {
    CHECK(max_abs(ComplexMatrix(coin.proj_plus[axis] + coin.proj_minus[axis] -
                                ComplexMatrix::Identity(4, 4))) == 0.0);
    CHECK(max_abs(ComplexMatrix(coin.proj_plus[axis] - coin.proj_minus[axis] -
                                coin.delta_p[axis])) == 0.0);
  }
}

TEST_CASE("fermion coin: all ten algebra residuals and c = 1/2") {
  const CoinSet coin = build_fermion_coin();
  const ConditionReport report = verify_coin_conditions(coin);

  int algebra_checks = 0;
  for (const auto& check : report.checks) {
    if (check.name.rfind("anticommutator", 0) == 0 ||
        check.name.rfind("square", 0) == 0) {
      ++algebra_checks;
      CHECK(check.residual <= 1e-13);
    }
  }
  CHECK(algebra_checks == 10);

  // Direct multiplication oracle: P_X^+ P_Y^+ P_X^+ = (1/2) P_X^+.
  const ComplexMatrix sandwich =
      coin.proj_plus[0] * coin.proj_plus[1] * coin.proj_plus[0];
  CHECK(max_abs(ComplexMatrix(sandwich - 0.5 * coin.proj_plus[0])) <= 1e-15);
  CHECK(report.c == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("boson coin: projector family") {
  const CoinSet coin = build_boson_coin();
  CHECK(coin.dim == 3);

  // P_X^0 = diag(1, 0, 0)
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  CHECK(max_abs(ComplexMatrix(coin.proj_zero[0] - expected)) == 0.0);

  // P_X^0 P_Y^0 = 0 exactly: no amplitude to rest on two axes at once
  CHECK(max_abs(ComplexMatrix(coin.proj_zero[0] * coin.proj_zero[1])) == 0.0);
  CHECK(max_abs(ComplexMatrix(coin.proj_zero[1] * coin.proj_zero[2])) == 0.0);
  CHECK(max_abs(ComplexMatrix(coin.proj_zero[2] * coin.proj_zero[0])) == 0.0);

  // Direct multiplication oracles for the equal-norm constants.
  const ComplexMatrix c_probe =
      coin.proj_plus[0] * coin.proj_plus[1] * coin.proj_plus[0];
  CHECK(max_abs(ComplexMatrix(c_probe - 0.25 * coin.proj_plus[0])) == 0.0);
  const ComplexMatrix cp_probe =
      coin.proj_plus[0] * coin.proj_zero[1] * coin.proj_plus[0];
  CHECK(max_abs(ComplexMatrix(cp_probe - 0.5 * coin.proj_plus[0])) == 0.0);

  const ConditionReport report = verify_coin_conditions(coin);
  CHECK(report.all_pass);
  CHECK(report.c == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(report.c_prime == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(report.max_residual <= 1e-12);
}

TEST_CASE("corrupted coin fails verification") {
  CoinSet coin = build_boson_coin();
  coin.delta_p[1](0, 2) = -coin.delta_p[1](0, 2);  // one sign flip in J_Y
  coin.proj_plus[1] = 0.5 * (coin.delta_p[1] * coin.delta_p[1] + coin.delta_p[1]);
  coin.proj_minus[1] = 0.5 * (coin.delta_p[1] * coin.delta_p[1] - coin.delta_p[1]);
  coin.proj_zero[1] =
      ComplexMatrix::Identity(3, 3) - coin.delta_p[1] * coin.delta_p[1];
  CHECK_THROWS_AS(verify_coin_conditions(coin), ConditionViolation);
}

TEST_CASE("unitary_from_hermitian") {
  const CoinSet fermion = build_fermion_coin();
  const CoinSet boson = build_boson_coin();

  SUBCASE("t = 0 gives the identity") {
    const ComplexMatrix u = unitary_from_hermitian(fermion.delta_p[0], 0.0);
    CHECK(max_abs(ComplexMatrix(u - ComplexMatrix::Identity(4, 4))) <= 1e-15);
  }

  SUBCASE("exp(i theta Q) has eigenphases +-theta") {
    const double theta = 0.7;
    const ComplexMatrix u = unitary_from_hermitian(fermion.coin_flip, theta);
    // Q^2 = I so exp(i theta Q) = cos(theta) I + i sin(theta) Q
    const ComplexMatrix closed =
        std::cos(theta) * ComplexMatrix::Identity(4, 4) +
        Complex(0, 1) * std::sin(theta) * fermion.coin_flip;
    CHECK(max_abs(ComplexMatrix(u - closed)) <= 1e-15);
  }

  SUBCASE("matches the 30-term power series") {
    const ComplexMatrix u = unitary_from_hermitian(boson.delta_p[2], 0.3);
    const ComplexMatrix series = testing::expm_series(boson.delta_p[2], 0.3, 30);
    CHECK(max_abs(ComplexMatrix(u - series)) <= 1e-13);
  }

  SUBCASE("series agreement for |tH| up to 10") {
    const ComplexMatrix u = unitary_from_hermitian(fermion.delta_p[1], 10.0);
    const ComplexMatrix series = testing::expm_series(fermion.delta_p[1], 10.0, 60);
    CHECK(max_abs(ComplexMatrix(u - series)) <= 1e-12);
  }

  SUBCASE("rejects a non-Hermitian generator") {
    ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(unitary_from_hermitian(bad, 1.0), NotHermitian);
  }

  SUBCASE("group additivity in t") {
    testing::Rng rng(11);
    std::uniform_real_distribution<double> uniform(-3.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix& h =
          trial % 2 == 0 ? fermion.delta_p[trial % 3] : boson.delta_p[trial % 3];
      const double s = uniform(rng), t = uniform(rng);
      const ComplexMatrix lhs =
          unitary_from_hermitian(h, s) * unitary_from_hermitian(h, t);
      const ComplexMatrix rhs = unitary_from_hermitian(h, s + t);
      CHECK(max_abs(ComplexMatrix(lhs - rhs)) <= 1e-12);
    }
  }
}

TEST_CASE("eig_unitary") {
  SUBCASE("identity has all phases zero") {
    const UnitaryEigen eig = eig_unitary(ComplexMatrix::Identity(4, 4));
    for (int j = 0; j < 4; ++j) CHECK(eig.phases[j] == 0.0);
  }

  SUBCASE("exp(i 0.1 Q) has phases (-0.1, -0.1, 0.1, 0.1)") {
    const CoinSet coin = build_fermion_coin();
    const UnitaryEigen eig =
        eig_unitary(unitary_from_hermitian(coin.coin_flip, 0.1));
    CHECK(eig.phases[0] == doctest::Approx(-0.1).epsilon(1e-13));
    CHECK(eig.phases[1] == doctest::Approx(-0.1).epsilon(1e-13));
    CHECK(eig.phases[2] == doctest::Approx(0.1).epsilon(1e-13));
    CHECK(eig.phases[3] == doctest::Approx(0.1).epsilon(1e-13));
  }

  SUBCASE("random unitaries reconstruct") {
    testing::Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const int dim = trial % 2 == 0 ? 3 : 4;
      const ComplexMatrix u = testing::haar_unitary(rng, dim);
      const UnitaryEigen eig = eig_unitary(u);
      ComplexMatrix diag = ComplexMatrix::Zero(dim, dim);
      for (int j = 0; j < dim; ++j) diag(j, j) = std::polar(1.0, eig.phases[j]);
      CHECK(max_abs(ComplexMatrix(u * eig.vectors - eig.vectors * diag)) <= 1e-11);
      CHECK(unitarity_residual(eig.vectors) <= 1e-11);
      for (int j = 1; j < dim; ++j) CHECK(eig.phases[j] >= eig.phases[j - 1]);
    }
  }

  SUBCASE("phases stay in (-pi, pi] at the cut") {
    const UnitaryEigen eig =
        eig_unitary(ComplexMatrix(-ComplexMatrix::Identity(3, 3)));
    for (int j = 0; j < 3; ++j) {
      CHECK(eig.phases[j] > 3.14159);
      CHECK(eig.phases[j] <= 3.1415926535897935);
    }
    // -I is fully degenerate: the deterministic basis is the canonical one
    CHECK(max_abs(ComplexMatrix(eig.vectors - ComplexMatrix::Identity(3, 3))) <=
          1e-12);
  }

  SUBCASE("degenerate clusters get a deterministic basis") {
    const CoinSet coin = build_fermion_coin();
    const ComplexMatrix u = unitary_from_hermitian(coin.delta_p[0], 0.4);
    const UnitaryEigen a = eig_unitary(u);
    const UnitaryEigen b = eig_unitary(u);
    CHECK(max_abs(ComplexMatrix(a.vectors - b.vectors)) == 0.0);
    ComplexMatrix diag = ComplexMatrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) diag(j, j) = std::polar(1.0, a.phases[j]);
    CHECK(max_abs(ComplexMatrix(u * a.vectors - a.vectors * diag)) <= 1e-12);
  }

  SUBCASE("rejects a non-unitary matrix") {
    ComplexMatrix bad = 2.0 * ComplexMatrix::Identity(3, 3);
    CHECK_THROWS_AS(eig_unitary(bad), NotUnitary);
  }
}
