// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/multiparticle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qca/errors.hpp"

namespace qca {

namespace {

constexpr std::size_t kMaxTensorDim = 50000;
constexpr int kMaxTypes = 3;

std::size_t checked_total_dim(std::size_t single_dim, int n_types) {
  if (n_types < 1 || n_types > kMaxTypes) {
    throw DimensionOverflow("particle-type count must be in [1, " +
                            std::to_string(kMaxTypes) + "]");
  }
  std::size_t total = 1;
  for (int j = 0; j < n_types; ++j) {
    total *= single_dim;
    if (total > kMaxTensorDim) {
      throw DimensionOverflow("tensor dimension exceeds the desk-scale cap of " +
                              std::to_string(kMaxTensorDim));
    }
  }
  return total;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

DistinguishableState vacuum_state(const LatticeSpec& spec, const CoinSet& coin,
                                  int n_types) {
  spec.validate();
  DistinguishableState state;
  state.kind = coin.kind;
  state.n_types = n_types;
  state.single_dim = spec.site_count() * coin.dim + 1;
  const std::size_t total = checked_total_dim(state.single_dim, n_types);
  state.amplitudes = ComplexVector::Zero(total);
  state.amplitudes[total - 1] = 1.0;  // every factor in |w>, which is the
                                      // last basis vector of each factor
  return state;
}

ComplexMatrix dense_walk_unitary(const LatticeSpec& spec, const CoinSet& coin) {
  const std::size_t walk_dim = spec.site_count() * coin.dim;
  SingleParticleState basis;
  basis.kind = coin.kind;
  basis.sites = spec.sites;
  basis.coin_dim = coin.dim;
  ComplexMatrix u(walk_dim, walk_dim);
  for (std::size_t col = 0; col < walk_dim; ++col) {
    basis.amplitudes = ComplexVector::Zero(walk_dim);
    basis.amplitudes[col] = 1.0;
    u.col(col) = step_position_space(spec, coin, basis).amplitudes;
  }
  return u;
}

ModeEigenstate mode_eigenstate(const LatticeSpec& spec, const CoinSet& coin,
                               const Mode& mode) {
  if (mode.branch < 0 || mode.branch >= coin.dim) {
    throw UnknownMode("branch " + std::to_string(mode.branch) +
                      " outside the coin dimension");
  }
  const MomentumBlock block = build_block(spec, coin, mode.index);
  const SingleParticleState wave =
      plane_wave_state(spec, coin, mode.index, block.vectors.col(mode.branch));
  return {wave.amplitudes, block.phases[mode.branch]};
}

DistinguishableState evolve_distinguishable(const DistinguishableState& state,
                                            const LatticeSpec& spec,
                                            const CoinSet& coin) {
  return evolve_distinguishable(state, dense_walk_unitary(spec, coin));
}

DistinguishableState evolve_distinguishable(const DistinguishableState& state,
                                            const ComplexMatrix& walk_unitary) {
  const std::size_t d1 = state.single_dim;
  const std::size_t walk_dim = d1 - 1;
  if (walk_unitary.rows() != static_cast<Eigen::Index>(walk_dim)) {
    throw InvalidSpec("walk unitary does not match the state dimension");
  }
  checked_total_dim(d1, state.n_types);

  DistinguishableState out = state;
  ComplexVector column(d1);
  // Apply U^(j) = U_walk + |w><w| to tensor factor j.
  std::size_t stride = 1;
  for (int j = state.n_types - 1; j >= 0; --j) {
    const std::size_t outer_count = out.amplitudes.size() / (d1 * stride);
    for (std::size_t outer = 0; outer < outer_count; ++outer) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        const std::size_t base = outer * d1 * stride + inner;
        for (std::size_t i = 0; i < d1; ++i) {
          column[i] = out.amplitudes[base + i * stride];
        }
        column.head(walk_dim) =
            (walk_unitary * column.head(walk_dim)).eval();
        for (std::size_t i = 0; i < d1; ++i) {
          out.amplitudes[base + i * stride] = column[i];
        }
      }
    }
    stride *= d1;
  }
  return out;
}

DistinguishableState project_physical(const DistinguishableState& state,
                                      Statistics statistics) {
  const std::size_t d1 = state.single_dim;
  const int m = state.n_types;
  checked_total_dim(d1, m);

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);

  DistinguishableState out = state;
  out.amplitudes = ComplexVector::Zero(state.amplitudes.size());
  std::vector<std::size_t> digits(m), permuted(m);
  double n_perms = 0.0;
  do {
    const double sign =
        statistics == Statistics::fermi ? permutation_sign(perm) : 1.0;
    n_perms += 1.0;
    for (Eigen::Index src = 0; src < state.amplitudes.size(); ++src) {
      std::size_t rest = static_cast<std::size_t>(src);
      for (int j = m - 1; j >= 0; --j) {
        digits[j] = rest % d1;
        rest /= d1;
      }
      for (int j = 0; j < m; ++j) permuted[perm[j]] = digits[j];
      std::size_t dest = 0;
      for (int j = 0; j < m; ++j) dest = dest * d1 + permuted[j];
      out.amplitudes[dest] += sign * state.amplitudes[src];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.amplitudes /= n_perms;
  return out;
}

DistinguishableState build_basis_state(std::span<const Mode> modes,
                                       Statistics statistics,
                                       const LatticeSpec& spec,
                                       const CoinSet& coin, int n_types) {
  const int n = static_cast<int>(modes.size());
  if (n > n_types) {
    throw TooManyParticles(std::to_string(n) + " modes but only " +
                           std::to_string(n_types) + " particle types");
  }
  std::map<Mode, int> multiplicity;
  for (const Mode& mode : modes) ++multiplicity[mode];
  if (statistics == Statistics::fermi) {
    for (const auto& [mode, count] : multiplicity) {
      if (count > 1) {
        throw DuplicateFermionMode("fermion modes must be distinct");
      }
    }
  }

  DistinguishableState out = vacuum_state(spec, coin, n_types);
  if (n == 0) return out;

  const std::size_t d1 = out.single_dim;
  const std::size_t walk_dim = d1 - 1;

  // Extended single-particle vectors for each occupied slot.
  std::vector<ComplexVector> factors(n);
  for (int i = 0; i < n; ++i) {
    factors[i] = ComplexVector::Zero(d1);
    factors[i].head(walk_dim) = mode_eigenstate(spec, coin, modes[i]).amplitudes;
  }
  ComplexVector vacuum_factor = ComplexVector::Zero(d1);
  vacuum_factor[d1 - 1] = 1.0;

  out.amplitudes = ComplexVector::Zero(out.amplitudes.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const double sign =
        statistics == Statistics::fermi ? permutation_sign(perm) : 1.0;
    ComplexVector acc = ComplexVector::Constant(1, sign);
    for (int slot = 0; slot < n_types; ++slot) {
      const ComplexVector& factor =
          slot < n ? factors[perm[slot]] : vacuum_factor;
      ComplexVector next(acc.size() * d1);
      for (Eigen::Index a = 0; a < acc.size(); ++a) {
        next.segment(a * d1, d1) = acc[a] * factor;
      }
      acc.swap(next);
    }
    out.amplitudes += acc;
  } while (std::next_permutation(perm.begin(), perm.end()));

  double factorials = 1.0;
  for (int i = 2; i <= n; ++i) factorials *= i;
  for (const auto& [mode, count] : multiplicity) {
    for (int i = 2; i <= count; ++i) factorials *= i;
  }
  out.amplitudes /= std::sqrt(factorials);
  return out;
}

}  // namespace qca
