// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal ("coin") operator algebras of the two walks.
//
// Fermion, D = 4: a coin-flip operator Q and three shift-difference
// operators dP_X, dP_Y, dP_Z that pairwise anticommute and square to the
// identity, realized here in the Dirac representation
//   Q = gamma_0 = diag(1, 1, -1, -1),  dP_i = gamma_0 gamma_i,
// so the directional projectors are P^+- = (I +- dP)/2.
//
// Boson, D = 3: per axis a triple of orthogonal projectors P^+, P^0, P^-
// summing to the identity, built from the spin-1 matrices as
//   dP = J,  P^+- = (J^2 +- J)/2,  P^0 = I - J^2,
// with the rest amplitude killed by P_X^0 P_Y^0 = P_Y^0 P_Z^0 = P_Z^0 P_X^0 = 0.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qca/types.hpp"

namespace qca {

enum class WalkKind { fermion, boson };

inline const char* to_string(WalkKind k) {
  return k == WalkKind::fermion ? "fermion" : "boson";
}

struct CoinSet {
  WalkKind kind;
  int dim;                                  // 4 (fermion) or 3 (boson)
  ComplexMatrix coin_flip;                  // Q; empty for the boson coin
  std::array<ComplexMatrix, 3> delta_p;     // dP_X, dP_Y, dP_Z
  std::array<ComplexMatrix, 3> proj_plus;   // P^+ per axis
  std::array<ComplexMatrix, 3> proj_minus;  // P^- per axis
  std::array<ComplexMatrix, 3> proj_zero;   // P^0 per axis; empty for fermion
};

CoinSet build_fermion_coin();
CoinSet build_boson_coin();

struct ConditionCheck {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  double c = 0.0;        // equal-norm constant of P_j^k P_j'^+- P_j^k = c P_j^k
  double c_prime = 0.0;  // boson only: constant of the P^0 cross relations
  double max_residual = 0.0;
  bool all_pass = true;
};

/// Evaluates every algebra condition of the coin and reports named residuals
/// plus the least-squares fit of the equal-norm constants.  Never throws on
/// a bad coin; see verify_coin_conditions for the throwing contract.
ConditionReport check_coin_conditions(const CoinSet& coin);

/// check_coin_conditions, then throws ConditionViolation naming the first
/// failed check if any residual exceeds its tolerance.
ConditionReport verify_coin_conditions(const CoinSet& coin);

}  // namespace qca
