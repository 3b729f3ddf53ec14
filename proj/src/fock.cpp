// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qca/errors.hpp"
#include "qca/format.hpp"

namespace qca {

namespace {

int total_occupation(const Occupation& occ) {
  int total = 0;
  for (auto v : occ) total += v;
  return total;
}

// Jordan-Wigner-style sign: parity of the occupied modes preceding `pos`.
double fermi_sign(const Occupation& occ, std::size_t pos) {
  int count = 0;
  for (std::size_t i = 0; i < pos; ++i) count += occ[i];
  return count % 2 == 0 ? 1.0 : -1.0;
}

void accumulate(std::map<Occupation, Complex>& terms, const Occupation& occ,
                Complex amplitude) {
  auto [it, inserted] = terms.try_emplace(occ, amplitude);
  if (!inserted) {
    it->second += amplitude;
    if (it->second == Complex{0.0, 0.0}) terms.erase(it);
  }
}

OccupationState basis_state(Statistics statistics, const ModeBasis& basis,
                            int n_max, const Occupation& occ) {
  OccupationState state;
  state.statistics = statistics;
  state.basis = basis;
  state.n_max = n_max;
  state.terms[occ] = 1.0;
  return state;
}

OccupationState state_difference(const OccupationState& a,
                                 const OccupationState& b) {
  OccupationState diff = a;
  for (const auto& [occ, amp] : b.terms) accumulate(diff.terms, occ, -amp);
  return diff;
}

// All occupation vectors of `size` modes with the per-mode cap and total <=
// budget, in lexicographic order.
std::vector<Occupation> enumerate_occupations(std::size_t size, int per_mode_cap,
                                              int budget) {
  std::vector<Occupation> result;
  Occupation occ(size, 0);
  while (true) {
    if (total_occupation(occ) <= budget) result.push_back(occ);
    std::size_t i = size;
    while (i > 0) {
      --i;
      if (occ[i] < per_mode_cap) {
        ++occ[i];
        std::fill(occ.begin() + i + 1, occ.end(), 0);
        break;
      }
      if (i == 0) return result;
    }
    if (size == 0) return result;
  }
}

}  // namespace

ModeBasis::ModeBasis(std::vector<Mode> modes) : modes_(std::move(modes)) {
  std::sort(modes_.begin(), modes_.end());
  if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end()) {
    throw InvalidSpec("mode basis contains duplicates");
  }
}

std::size_t ModeBasis::position_of(const Mode& mode) const {
  const auto it = std::lower_bound(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end() || *it != mode) {
    throw UnknownMode("mode is not in the basis");
  }
  return static_cast<std::size_t>(it - modes_.begin());
}

double OccupationState::norm() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms) sum += std::norm(amp);
  return std::sqrt(sum);
}

OccupationState fock_vacuum(Statistics statistics, ModeBasis basis, int n_max) {
  if (n_max < 1) throw InvalidSpec("n_max must be >= 1");
  OccupationState state;
  state.statistics = statistics;
  state.basis = std::move(basis);
  state.n_max = n_max;
  state.terms[Occupation(state.basis.size(), 0)] = 1.0;
  return state;
}

OccupationState apply_creation(const OccupationState& state, const Mode& mode) {
  const std::size_t pos = state.basis.position_of(mode);
  OccupationState out = state;
  out.terms.clear();
  for (const auto& [occ, amp] : state.terms) {
    if (total_occupation(occ) >= state.n_max) continue;  // type budget spent
    if (state.statistics == Statistics::fermi) {
      if (occ[pos] != 0) continue;  // Pauli exclusion
      Occupation next = occ;
      next[pos] = 1;
      accumulate(out.terms, next, amp * fermi_sign(occ, pos));
    } else {
      Occupation next = occ;
      next[pos] = static_cast<std::uint8_t>(next[pos] + 1);
      accumulate(out.terms, next, amp * std::sqrt(double(next[pos])));
    }
  }
  return out;
}

OccupationState apply_annihilation(const OccupationState& state,
                                   const Mode& mode) {
  const std::size_t pos = state.basis.position_of(mode);
  OccupationState out = state;
  out.terms.clear();
  for (const auto& [occ, amp] : state.terms) {
    if (occ[pos] == 0) continue;
    Occupation next = occ;
    next[pos] = static_cast<std::uint8_t>(next[pos] - 1);
    if (state.statistics == Statistics::fermi) {
      accumulate(out.terms, next, amp * fermi_sign(occ, pos));
    } else {
      accumulate(out.terms, next, amp * std::sqrt(double(occ[pos])));
    }
  }
  return out;
}

OccupationState evolve_occupation(const OccupationState& state,
                                  const std::map<Mode, double>& phases,
                                  long steps) {
  OccupationState out = state;
  out.terms.clear();
  for (const auto& [occ, amp] : state.terms) {
    double phase_sum = 0.0;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (occ[i] == 0) continue;
      const auto it = phases.find(state.basis.at(i));
      if (it == phases.end()) {
        throw MissingPhase("no phase for an occupied mode");
      }
      phase_sum += occ[i] * it->second;
    }
    out.terms[occ] = amp * std::polar(1.0, steps * phase_sum);
  }
  return out;
}

DistinguishableState expand_occupation(const OccupationState& state,
                                       const LatticeSpec& spec,
                                       const CoinSet& coin, int n_types) {
  DistinguishableState out = vacuum_state(spec, coin, n_types);
  out.amplitudes.setZero();
  for (const auto& [occ, amp] : state.terms) {
    std::vector<Mode> modes;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      for (int rep = 0; rep < occ[i]; ++rep) modes.push_back(state.basis.at(i));
    }
    const DistinguishableState term =
        build_basis_state(modes, state.statistics, spec, coin, n_types);
    out.amplitudes += amp * term.amplitudes;
  }
  return out;
}

double fock_tensor_isomorphism_check(std::span<const Mode> modes,
                                     Statistics statistics,
                                     const LatticeSpec& spec,
                                     const CoinSet& coin, int n_max) {
  std::vector<Mode> distinct(modes.begin(), modes.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  OccupationState ladder = fock_vacuum(statistics, ModeBasis(distinct), n_max);
  for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
    ladder = apply_creation(ladder, *it);  // rightmost operator acts first
  }
  // 1/sqrt(m_1! ... m_n!) so repeated Bose modes match the basis state.
  std::map<Mode, int> multiplicity;
  for (const Mode& m : modes) ++multiplicity[m];
  double fact = 1.0;
  for (const auto& [mode, count] : multiplicity) {
    for (int i = 2; i <= count; ++i) fact *= i;
  }
  for (auto& [occ, amp] : ladder.terms) amp /= std::sqrt(fact);

  const DistinguishableState via_ladder =
      expand_occupation(ladder, spec, coin, n_max);
  const DistinguishableState direct =
      build_basis_state(modes, statistics, spec, coin, n_max);
  const Complex overlap = via_ladder.amplitudes.dot(direct.amplitudes);
  return std::abs(overlap - 1.0);
}

std::vector<LadderCombination> rotate_ladder_basis(
    const ComplexMatrix& vectors, std::span<const Mode> branch_modes,
    bool creation) {
  if (unitarity_residual(vectors) > 1e-12) {
    throw NotUnitary("rotate_ladder_basis: V is not unitary");
  }
  if (branch_modes.size() != static_cast<std::size_t>(vectors.cols())) {
    throw InvalidSpec("branch mode list does not match V");
  }
  std::vector<LadderCombination> rows;
  rows.reserve(vectors.rows());
  for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
    LadderCombination comb;
    comb.creation = creation;
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
      const Complex coeff = creation ? vectors(i, j) : std::conj(vectors(i, j));
      if (coeff != Complex{0.0, 0.0}) {
        comb.terms.push_back({branch_modes[j], coeff});
      }
    }
    rows.push_back(std::move(comb));
  }
  return rows;
}

OccupationState apply_ladder(const OccupationState& state,
                             const LadderCombination& combination) {
  OccupationState out = state;
  out.terms.clear();
  for (const LadderTerm& term : combination.terms) {
    const OccupationState applied = combination.creation
                                        ? apply_creation(state, term.mode)
                                        : apply_annihilation(state, term.mode);
    for (const auto& [occ, amp] : applied.terms) {
      accumulate(out.terms, occ, term.coefficient * amp);
    }
  }
  return out;
}

std::string occupation_to_json(const OccupationState& state) {
  std::ostringstream out;
  out << "{\"statistics\":\"" << to_string(state.statistics)
      << "\",\"terms\":[";
  bool first = true;
  for (const auto& [occ, amp] : state.terms) {
    if (!first) out << ',';
    first = false;
    out << "{\"occ\":[";
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (i) out << ',';
      out << int(occ[i]);
    }
    out << "],\"re\":" << format_double(amp.real())
        << ",\"im\":" << format_double(amp.imag()) << '}';
  }
  out << "]}";
  return out.str();
}

double car_ccr_residual(Statistics statistics, const ModeBasis& basis,
                        int n_max) {
  const std::size_t m = basis.size();
  const int per_mode = statistics == Statistics::fermi ? 1 : n_max;
  const std::vector<Occupation> all =
      enumerate_occupations(m, per_mode, n_max);

  double worst = 0.0;
  const auto record = [&](const OccupationState& diff) {
    worst = std::max(worst, diff.norm());
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Mode mi = basis.at(i);
      const Mode mj = basis.at(j);
      const double delta = i == j ? 1.0 : 0.0;
      for (const Occupation& occ : all) {
        const int total = total_occupation(occ);
        OccupationState psi = basis_state(statistics, basis, n_max, occ);
        if (statistics == Statistics::fermi) {
          // {a_i, a^dag_j} = delta_ij ; {a^dag, a^dag} = {a, a} = 0
          OccupationState lhs = apply_annihilation(apply_creation(psi, mj), mi);
          for (const auto& [occ2, amp] :
               apply_creation(apply_annihilation(psi, mi), mj).terms) {
            accumulate(lhs.terms, occ2, amp);
          }
          for (const auto& [occ2, amp] : psi.terms) {
            accumulate(lhs.terms, occ2, -delta * amp);
          }
          record(lhs);

          OccupationState cc = apply_creation(apply_creation(psi, mi), mj);
          for (const auto& [occ2, amp] :
               apply_creation(apply_creation(psi, mj), mi).terms) {
            accumulate(cc.terms, occ2, amp);
          }
          record(cc);

          OccupationState aa = apply_annihilation(apply_annihilation(psi, mi), mj);
          for (const auto& [occ2, amp] :
               apply_annihilation(apply_annihilation(psi, mj), mi).terms) {
            accumulate(aa.terms, occ2, amp);
          }
          record(aa);
        } else {
          // [a_i, a^dag_j] = delta_ij below the budget; [a^dag, a^dag] = [a, a] = 0
          if (total <= n_max - 2) {
            OccupationState lhs = apply_creation(apply_annihilation(psi, mi), mj);
            OccupationState first = apply_annihilation(apply_creation(psi, mj), mi);
            for (auto& [occ2, amp] : lhs.terms) amp = -amp;
            for (const auto& [occ2, amp] : first.terms) {
              accumulate(lhs.terms, occ2, amp);
            }
            for (const auto& [occ2, amp] : psi.terms) {
              accumulate(lhs.terms, occ2, -delta * amp);
            }
            record(lhs);

            OccupationState cc = apply_creation(apply_creation(psi, mi), mj);
            for (auto& [occ2, amp] : cc.terms) amp = -amp;
            for (const auto& [occ2, amp] :
                 apply_creation(apply_creation(psi, mj), mi).terms) {
              accumulate(cc.terms, occ2, amp);
            }
            record(cc);
          }
          OccupationState aa = apply_annihilation(apply_annihilation(psi, mi), mj);
          for (auto& [occ2, amp] : aa.terms) amp = -amp;
          for (const auto& [occ2, amp] :
               apply_annihilation(apply_annihilation(psi, mj), mi).terms) {
            accumulate(aa.terms, occ2, amp);
          }
          record(aa);
        }
      }
    }
  }
  return worst;
}

LadderRotationCheck ladder_rotation_check(const LatticeSpec& spec,
                                          const CoinSet& coin,
                                          const MomentumIndex& idx) {
  const MomentumBlock block = build_block(spec, coin, idx);
  const int d = coin.dim;
  const Statistics statistics =
      coin.kind == WalkKind::fermion ? Statistics::fermi : Statistics::bose;

  std::vector<Mode> branch_modes;
  std::map<Mode, double> phases;
  for (int j = 0; j < d; ++j) {
    branch_modes.push_back({idx, j});
    phases[{idx, j}] = block.phases[j];
  }
  const ModeBasis basis(branch_modes);
  const int n_max = d;

  const auto rotated_creation =
      rotate_ladder_basis(block.vectors, branch_modes, true);
  const auto rotated_annihilation =
      rotate_ladder_basis(block.vectors, branch_modes, false);

  // RHS coefficient matrices: U_k V for creation rows, conj(U_k V) for
  // annihilation rows (both expressed over the energy-basis operators).
  const ComplexMatrix uv = block.unitary * block.vectors;

  const int per_mode = statistics == Statistics::fermi ? 1 : n_max;
  const std::vector<Occupation> all =
      enumerate_occupations(basis.size(), per_mode, n_max);

  LadderRotationCheck check{0.0, 0.0};
  for (int i = 0; i < d; ++i) {
    LadderCombination rhs_creation{true, {}};
    LadderCombination rhs_annihilation{false, {}};
    for (int l = 0; l < d; ++l) {
      rhs_creation.terms.push_back({branch_modes[l], uv(i, l)});
      rhs_annihilation.terms.push_back({branch_modes[l], std::conj(uv(i, l))});
    }
    for (const Occupation& occ : all) {
      const OccupationState psi = basis_state(statistics, basis, n_max, occ);
      for (const bool creation : {true, false}) {
        const auto& comb = creation ? rotated_creation[i] : rotated_annihilation[i];
        const auto& rhs = creation ? rhs_creation : rhs_annihilation;
        OccupationState lhs = evolve_occupation(
            apply_ladder(evolve_occupation(psi, phases, -1), comb), phases, 1);
        const OccupationState diff = state_difference(lhs, apply_ladder(psi, rhs));
        check.evolution_residual = std::max(check.evolution_residual, diff.norm());
      }
    }
  }

  // Algebra preservation: the rotated components obey the same canonical
  // relations as the energy-basis ones.
  const int budget = statistics == Statistics::bose ? n_max - 2 : n_max;
  for (int i = 0; i < d; ++i) {
    for (int ip = 0; ip < d; ++ip) {
      const double delta = i == ip ? 1.0 : 0.0;
      for (const Occupation& occ : all) {
        if (total_occupation(occ) > budget) continue;
        const OccupationState psi = basis_state(statistics, basis, n_max, occ);
        const OccupationState first =
            apply_ladder(apply_ladder(psi, rotated_creation[ip]),
                         rotated_annihilation[i]);
        OccupationState second =
            apply_ladder(apply_ladder(psi, rotated_annihilation[i]),
                         rotated_creation[ip]);
        if (statistics == Statistics::bose) {
          for (auto& [o, amp] : second.terms) amp = -amp;
        }
        OccupationState lhs = first;
        for (const auto& [o, amp] : second.terms) accumulate(lhs.terms, o, amp);
        for (const auto& [o, amp] : psi.terms) accumulate(lhs.terms, o, -delta * amp);
        check.algebra_residual = std::max(check.algebra_residual, lhs.norm());
      }
    }
  }
  return check;
}

}  // namespace qca
