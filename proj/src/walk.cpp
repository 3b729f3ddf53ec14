// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/walk.hpp"

#include <cmath>

#include "qca/errors.hpp"

namespace qca {

SingleParticleState plane_wave_state(const LatticeSpec& spec,
                                     const CoinSet& coin,
                                     const MomentumIndex& idx,
                                     const ComplexVector& chi) {
  spec.validate();
  if (chi.size() != coin.dim) {
    throw InvalidSpec("coin vector dimension does not match the coin");
  }
  const Vec3 k = momentum_of_index(spec, idx);
  const int n = spec.sites;
  SingleParticleState state;
  state.kind = coin.kind;
  state.sites = n;
  state.coin_dim = coin.dim;
  state.amplitudes.resize(spec.site_count() * coin.dim);

  const ComplexVector unit_chi = chi / chi.norm();
  const double norm = std::pow(static_cast<double>(n), -1.5);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const double phase =
            -(k.x() * x + k.y() * y + k.z() * z) * spec.dx;  // e^{-i k.x}
        const Complex factor = norm * std::polar(1.0, phase);
        for (int c = 0; c < coin.dim; ++c) {
          state.amplitudes[state.index(x, y, z, c)] = factor * unit_chi[c];
        }
      }
    }
  }
  return state;
}

SingleParticleState step_position_space(const LatticeSpec& spec,
                                        const CoinSet& coin,
                                        const SingleParticleState& state) {
  spec.validate();
  if (coin.kind == WalkKind::boson && spec.theta != 0.0) {
    throw InvalidSpec("the boson walk has no coin flip; theta must be 0");
  }
  if (state.kind != coin.kind || state.coin_dim != coin.dim ||
      state.sites != spec.sites ||
      state.amplitudes.size() !=
          static_cast<Eigen::Index>(spec.site_count() * coin.dim)) {
    throw InvalidSpec("state does not match lattice or coin");
  }
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw InvalidSpec("state is not normalized");
  }

  const int n = spec.sites;
  const int d = coin.dim;
  const bool has_rest = coin.kind == WalkKind::boson;

  SingleParticleState out = state;
  ComplexVector scratch(state.amplitudes.size());

  // Shift by +1 site along `axis` applied to the argument: the plus
  // projector reads from x - e_axis, the minus projector from x + e_axis.
  const auto apply_axis = [&](int axis, const ComplexVector& in, ComplexVector& dst) {
    ComplexVector lo(d), mid(d), hi(d);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          int xm = x, ym = y, zm = z, xp = x, yp = y, zp = z;
          switch (axis) {
            case 0: xm = (x - 1 + n) % n; xp = (x + 1) % n; break;
            case 1: ym = (y - 1 + n) % n; yp = (y + 1) % n; break;
            default: zm = (z - 1 + n) % n; zp = (z + 1) % n; break;
          }
          const std::size_t src_m = out.index(xm, ym, zm, 0);
          const std::size_t src_0 = out.index(x, y, z, 0);
          const std::size_t src_p = out.index(xp, yp, zp, 0);
          lo = in.segment(src_m, d);
          mid = in.segment(src_0, d);
          hi = in.segment(src_p, d);
          ComplexVector v = coin.proj_plus[axis] * lo + coin.proj_minus[axis] * hi;
          if (has_rest) v += coin.proj_zero[axis] * mid;
          dst.segment(src_0, d) = v;
        }
      }
    }
  };

  apply_axis(0, out.amplitudes, scratch);
  apply_axis(1, scratch, out.amplitudes);
  apply_axis(2, out.amplitudes, scratch);
  out.amplitudes.swap(scratch);

  if (coin.kind == WalkKind::fermion && spec.theta != 0.0) {
    const ComplexMatrix flip = unitary_from_hermitian(coin.coin_flip, spec.theta);
    for (std::size_t site = 0; site < spec.site_count(); ++site) {
      out.amplitudes.segment(site * d, d) =
          flip * ComplexVector(out.amplitudes.segment(site * d, d));
    }
  }
  return out;
}

ComplexVector momentum_component(const LatticeSpec& spec,
                                 const SingleParticleState& state,
                                 const MomentumIndex& idx) {
  const Vec3 k = momentum_of_index(spec, idx);
  const int n = spec.sites;
  const int d = state.coin_dim;
  ComplexVector acc = ComplexVector::Zero(d);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const double phase = (k.x() * x + k.y() * y + k.z() * z) * spec.dx;
        const Complex factor = std::polar(1.0, phase);
        acc += factor * ComplexVector(state.amplitudes.segment(
                            state.index(x, y, z, 0), d));
      }
    }
  }
  return acc * std::pow(static_cast<double>(n), -1.5);
}

}  // namespace qca
