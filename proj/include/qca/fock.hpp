// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Occupation-number (Fock) representation over a fixed ordered mode basis,
// equivalent to the (anti)symmetrized tensor embedding.  Ladder operators
// follow the standard conventions:
//
//   Fermi: a^dag_m flips bit m with sign (-1)^(occupied modes before m);
//          creation on an occupied mode gives the zero state.
//   Bose:  sqrt(m+1) / sqrt(m) factors.
//
// Both statistics annihilate (return the zero state) on any creation that
// would push the total occupation past the N_max particle-type budget.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qca/multiparticle.hpp"

namespace qca {

/// Fixed total ordering of modes, lexicographic on (n, o, p, branch).
class ModeBasis {
 public:
  ModeBasis() = default;
  explicit ModeBasis(std::vector<Mode> modes);  // sorts, rejects duplicates

  std::size_t size() const { return modes_.size(); }
  const Mode& at(std::size_t i) const { return modes_[i]; }
  const std::vector<Mode>& modes() const { return modes_; }
  /// Throws UnknownMode.
  std::size_t position_of(const Mode& mode) const;

 private:
  std::vector<Mode> modes_;
};

using Occupation = std::vector<std::uint8_t>;

struct OccupationState {
  Statistics statistics = Statistics::fermi;
  ModeBasis basis;
  int n_max = 1;
  std::map<Occupation, Complex> terms;  // ordered, deterministic iteration

  double norm() const;
  bool is_zero() const { return terms.empty(); }
};

OccupationState fock_vacuum(Statistics statistics, ModeBasis basis, int n_max);

OccupationState apply_creation(const OccupationState& state, const Mode& mode);
OccupationState apply_annihilation(const OccupationState& state,
                                   const Mode& mode);

/// Multiplies each term by exp(i steps sum_m occ(m) phi_m).  Throws
/// MissingPhase if an occupied mode has no phase entry.
OccupationState evolve_occupation(const OccupationState& state,
                                  const std::map<Mode, double>& phases,
                                  long steps);

/// Builds the state labeled by `modes` through the ladder operators on the
/// Fock vacuum (with the 1/sqrt(m!) multiplicity normalization), expands it
/// into the tensor representation, and compares with the direct
/// (anti)symmetrized construction.  Returns |<ladder|direct> - 1|.
double fock_tensor_isomorphism_check(std::span<const Mode> modes,
                                     Statistics statistics,
                                     const LatticeSpec& spec,
                                     const CoinSet& coin, int n_max);

/// Expansion used by the isomorphism check: each occupation vector becomes
/// the corresponding (anti)symmetrized tensor basis state.
DistinguishableState expand_occupation(const OccupationState& state,
                                       const LatticeSpec& spec,
                                       const CoinSet& coin, int n_types);

struct LadderTerm {
  Mode mode;
  Complex coefficient;
};

/// A formal linear combination of same-type ladder operators, e.g. one
/// component of V_k acting on the creation-operator column vector.
struct LadderCombination {
  bool creation = true;
  std::vector<LadderTerm> terms;
};

/// Momentum-representation ladder components at fixed k: for creation,
/// row i is  sum_j V(i,j) a^dag_(k,j);  for annihilation the coefficients
/// are conjugated.  Throws NotUnitary if V is not unitary.
std::vector<LadderCombination> rotate_ladder_basis(
    const ComplexMatrix& vectors, std::span<const Mode> branch_modes,
    bool creation);

OccupationState apply_ladder(const OccupationState& state,
                             const LadderCombination& combination);

/// Serialization to the exchange schema
/// {"statistics": "...", "terms": [{"occ": [...], "re": x, "im": y}]}
/// with occupations listed in ModeBasis order.
std::string occupation_to_json(const OccupationState& state);

// --- measured algebra checks (spanning-set residuals) ---

/// Max residual of the canonical (anti)commutation relations over all mode
/// pairs, applied to every basis state of the space.  For Bose statistics
/// the [a, a^dag] check is restricted to states with total occupation
/// <= n_max - 2 so the particle-type budget does not truncate it.
double car_ccr_residual(Statistics statistics, const ModeBasis& basis,
                        int n_max);

struct LadderRotationCheck {
  double evolution_residual;  // one-step map vs multiplication by U_k / U_k^*
  double algebra_residual;    // CAR preservation under the rotation
};

/// Verifies on a spanning set that the rotated components evolve by U_k
/// (creation) and U_k^* (annihilation) and that CAR is preserved.
LadderRotationCheck ladder_rotation_check(const LatticeSpec& spec,
                                          const CoinSet& coin,
                                          const MomentumIndex& idx);

}  // namespace qca
