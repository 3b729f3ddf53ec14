// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/lattice.hpp"

#include <numbers>
#include <string>

#include "qca/errors.hpp"

namespace qca {

double LatticeSpec::momentum_step() const {
  return 2.0 * std::numbers::pi / (sites * dx);
}

void LatticeSpec::validate() const {
  if (sites < 2 || sites % 2 != 0) {
    throw InvalidSpec("lattice size N must be even and >= 2, got " +
                      std::to_string(sites));
  }
  if (!(dx > 0.0)) throw InvalidSpec("dx must be positive");
  if (!(dt > 0.0)) throw InvalidSpec("dt must be positive");
  if (!(constants.hbar > 0.0)) throw InvalidSpec("hbar must be positive");
  if (!(constants.eps0 > 0.0)) throw InvalidSpec("eps0 must be positive");
}

Vec3 momentum_of_index(const LatticeSpec& spec, const MomentumIndex& idx) {
  spec.validate();
  const int lo = spec.index_min();
  const int hi = spec.index_max();
  for (int component : {idx.n, idx.o, idx.p}) {
    if (component < lo || component > hi) {
      throw IndexOutOfRange("momentum index " + std::to_string(component) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
  }
  const double dk = spec.momentum_step();
  return Vec3(idx.n * dk, idx.o * dk, idx.p * dk);
}

MomentumIndex wrap_index(const LatticeSpec& spec, int n, int o, int p) {
  const auto wrap = [&](int v) {
    const int N = spec.sites;
    int m = ((v % N) + N) % N;        // 0 .. N-1
    if (m > N / 2) m -= N;            // -N/2+1 .. N/2
    return m;
  };
  return MomentumIndex{wrap(n), wrap(o), wrap(p)};
}

ComplexMatrix walk_unitary_at(const CoinSet& coin, const Vec3& k_dx,
                              double theta) {
  if (coin.kind == WalkKind::boson && theta != 0.0) {
    throw InvalidSpec("the boson walk has no coin flip; theta must be 0");
  }
  // Ordered product with the X exponential applied first.
  ComplexMatrix u = unitary_from_hermitian(coin.delta_p[0], k_dx.x());
  u = unitary_from_hermitian(coin.delta_p[1], k_dx.y()) * u;
  u = unitary_from_hermitian(coin.delta_p[2], k_dx.z()) * u;
  if (coin.kind == WalkKind::fermion && theta != 0.0) {
    u = unitary_from_hermitian(coin.coin_flip, theta) * u;
  }
  return u;
}

MomentumBlock build_block(const LatticeSpec& spec, const CoinSet& coin,
                          const MomentumIndex& idx) {
  spec.validate();

  MomentumBlock block;
  block.index = idx;
  block.k = momentum_of_index(spec, idx);
  block.unitary = walk_unitary_at(coin, block.k * spec.dx, spec.theta);

  UnitaryEigen eig = eig_unitary(block.unitary);
  block.phases = std::move(eig.phases);
  block.vectors = std::move(eig.vectors);
  return block;
}

}  // namespace qca
