// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "qca/errors.hpp"
#include "qca/fields.hpp"
#include "qca/fock.hpp"
#include "qca/format.hpp"
#include "qca/multiparticle.hpp"
#include "qca/scan.hpp"
#include "qca/spectrum.hpp"

namespace qca {

namespace {

using Rng = std::mt19937_64;

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

ComplexVector random_coin_vector(Rng& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

MomentumIndex random_index(Rng& rng, const LatticeSpec& spec) {
  std::uniform_int_distribution<int> dist(spec.index_min(), spec.index_max());
  return {dist(rng), dist(rng), dist(rng)};
}

SingleParticleState random_state(Rng& rng, const LatticeSpec& spec,
                                 const CoinSet& coin) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SingleParticleState state;
  state.kind = coin.kind;
  state.sites = spec.sites;
  state.coin_dim = coin.dim;
  state.amplitudes.resize(spec.site_count() * coin.dim);
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    state.amplitudes[i] = Complex(normal(rng), normal(rng));
  }
  state.amplitudes /= state.amplitudes.norm();
  return state;
}

ComplexVector random_tensor(Rng& rng, Eigen::Index size) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

// Multiset comparison of two ascending phase vectors.
double phase_multiset_gap(const RealVector& a, const RealVector& b) {
  double gap = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    gap = std::max(gap, std::abs(a[i] - b[i]));
  }
  return gap;
}

struct Suite {
  InvariantReport report;
  void add(std::string name, double value, double tolerance,
           CheckSense sense = CheckSense::at_most) {
    report.checks.push_back({std::move(name), value, tolerance, sense});
  }
};

}  // namespace

InvariantReport run_invariant_suite(const InvariantOptions& options) {
  LatticeSpec spec;
  spec.sites = options.sites;
  spec.dx = options.dx;
  spec.dt = options.dt;
  spec.theta = options.theta;
  spec.validate();
  LatticeSpec boson_spec = spec;
  boson_spec.theta = 0.0;

  Rng rng(options.seed);
  Suite suite;
  suite.report.seed = options.seed;

  const CoinSet fermion = build_fermion_coin();
  const CoinSet boson = build_boson_coin();

  // --- coin algebra ---
  {
    CoinSet probe = fermion;
    if (options.corrupt_coin) {
      // Negative-control hook: one sign flip in dP_Y breaks the algebra.
      probe.delta_p[1](0, 3) = -probe.delta_p[1](0, 3);
      probe.proj_plus[1] =
          0.5 * (ComplexMatrix::Identity(4, 4) + probe.delta_p[1]);
      probe.proj_minus[1] =
          0.5 * (ComplexMatrix::Identity(4, 4) - probe.delta_p[1]);
    }
    const ConditionReport rep = check_coin_conditions(probe);
    double anticommutators = 0.0, squares = 0.0, equal_norm = 0.0;
    for (const auto& check : rep.checks) {
      if (check.name.rfind("anticommutator", 0) == 0) {
        anticommutators = std::max(anticommutators, check.residual);
      } else if (check.name.rfind("square", 0) == 0) {
        squares = std::max(squares, check.residual);
      } else {
        equal_norm = std::max(equal_norm, check.residual);
      }
    }
    suite.add("fermion_anticommutators", anticommutators, 1e-13);
    suite.add("fermion_squares", squares, 1e-13);
    suite.add("fermion_equal_norm", equal_norm, 1e-12);
    suite.add("fermion_c_error", std::abs(rep.c - 0.5), 1e-12);
  }
  {
    const ConditionReport rep = check_coin_conditions(boson);
    double family = 0.0;
    for (const auto& check : rep.checks) {
      family = std::max(family, check.residual);
    }
    suite.add("boson_projector_family", family, 1e-12);
    suite.add("boson_c_error", std::abs(rep.c - 0.25), 1e-12);
    suite.add("boson_cprime_error", std::abs(rep.c_prime - 0.5), 1e-12);
  }

  // --- dense kernels ---
  {
    double reconstruction = 0.0, orthonormality = 0.0, additivity = 0.0,
           round_trip = 0.0;
    for (int sample = 0; sample < 8; ++sample) {
      const CoinSet& coin = sample % 2 == 0 ? fermion : boson;
      const LatticeSpec& sp = coin.kind == WalkKind::fermion ? spec : boson_spec;
      const MomentumBlock block = build_block(sp, coin, random_index(rng, sp));
      ComplexMatrix diag = ComplexMatrix::Zero(coin.dim, coin.dim);
      for (int j = 0; j < coin.dim; ++j) {
        diag(j, j) = std::polar(1.0, block.phases[j]);
      }
      reconstruction = std::max(
          reconstruction, max_abs(ComplexMatrix(block.unitary * block.vectors -
                                                block.vectors * diag)));
      orthonormality = std::max(orthonormality, unitarity_residual(block.vectors));
      bool near_cut = false;
      for (int j = 0; j < coin.dim; ++j) {
        near_cut = near_cut ||
                   std::min(std::abs(block.phases[j] - std::numbers::pi),
                            std::abs(block.phases[j] + std::numbers::pi)) < 1e-9;
      }
      if (!near_cut) {
        const ComplexMatrix g = extract_generator(block);
        round_trip = std::max(
            round_trip,
            max_abs(ComplexMatrix(unitary_from_hermitian(g, 1.0) - block.unitary)));
      }
    }
    std::uniform_real_distribution<double> uniform(-2.0, 2.0);
    for (int sample = 0; sample < 4; ++sample) {
      const ComplexMatrix& h = sample % 2 == 0 ? fermion.delta_p[sample % 3]
                                               : boson.delta_p[sample % 3];
      const double s = uniform(rng), t = uniform(rng);
      additivity = std::max(
          additivity,
          max_abs(ComplexMatrix(unitary_from_hermitian(h, s) *
                                    unitary_from_hermitian(h, t) -
                                unitary_from_hermitian(h, s + t))));
    }
    suite.add("eig_reconstruction", reconstruction, 1e-11);
    suite.add("eig_orthonormality", orthonormality, 1e-11);
    suite.add("exp_additivity", additivity, 1e-12);
    suite.add("generator_round_trip", round_trip, 1e-11);
  }

  // --- lattice walk ---
  {
    double equivalence = 0.0, aliasing = 0.0;
    for (int sample = 0; sample < 6; ++sample) {
      const CoinSet& coin = sample % 2 == 0 ? fermion : boson;
      const LatticeSpec& sp = coin.kind == WalkKind::fermion ? spec : boson_spec;
      const MomentumIndex idx = random_index(rng, sp);
      const MomentumBlock block = build_block(sp, coin, idx);
      const ComplexVector chi = random_coin_vector(rng, coin.dim);
      const SingleParticleState wave = plane_wave_state(sp, coin, idx, chi);
      const SingleParticleState stepped = step_position_space(sp, coin, wave);
      const SingleParticleState expected =
          plane_wave_state(sp, coin, idx, block.unitary * chi);
      equivalence = std::max(
          equivalence, max_abs(ComplexVector(stepped.amplitudes -
                                             expected.amplitudes)));
      const MomentumIndex other = random_index(rng, sp);
      if (other != idx) {
        aliasing = std::max(aliasing,
                            momentum_component(sp, stepped, other).norm());
      }
    }
    suite.add("plane_wave_equivalence", equivalence, 1e-10);
    suite.add("block_diagonality", aliasing, 1e-12);

    SingleParticleState state = random_state(rng, spec, fermion);
    double drift = 0.0;
    for (int step = 0; step < 100; ++step) {
      state = step_position_space(spec, fermion, state);
      drift = std::max(drift, std::abs(state.norm() - 1.0));
    }
    suite.add("stepper_norm_drift", drift, 1e-11);

    double negation = 0.0, boson_symmetry = 0.0;
    for (int sample = 0; sample < 6; ++sample) {
      const MomentumIndex idx = random_index(rng, spec);
      const MomentumIndex neg = wrap_index(spec, -idx.n, -idx.o, -idx.p);
      const MomentumBlock plus = build_block(spec, fermion, idx);
      const MomentumBlock minus = build_block(spec, fermion, neg);
      RealVector negated = -minus.phases.reverse();
      negation = std::max(negation, phase_multiset_gap(plus.phases, negated));

      const MomentumBlock bb = build_block(boson_spec, boson, idx);
      RealVector reflected = -bb.phases.reverse();
      boson_symmetry =
          std::max(boson_symmetry, phase_multiset_gap(bb.phases, reflected));
    }
    suite.add("fermion_phase_negation", negation, 1e-12);
    suite.add("boson_spectral_symmetry", boson_symmetry, 1e-12);
  }

  // --- long-wavelength spectrum ---
  {
    // Exact axis law: cos(phi) = cos(theta) cos(k dx) on the X axis.
    double law = 0.0;
    for (int sample = 0; sample < 5; ++sample) {
      std::uniform_real_distribution<double> uniform(-2.5, 2.5);
      const double a = uniform(rng);
      const UnitaryEigen eig =
          eig_unitary(walk_unitary_at(fermion, Vec3(a, 0, 0), spec.theta));
      for (int j = 0; j < 4; ++j) {
        law = std::max(law, std::abs(std::cos(eig.phases[j]) -
                                     std::cos(spec.theta) * std::cos(a)));
      }
    }
    suite.add("fermion_axis_law", law, 1e-12);

    // Absolute eigenphase error against the continuum reference falls off
    // second order under halving of (theta, k dx).
    const auto abs_error = [&](const CoinSet& coin, double theta, const Vec3& a) {
      const UnitaryEigen eig = eig_unitary(walk_unitary_at(coin, a, theta));
      const double r = std::sqrt(theta * theta + a.squaredNorm());
      double worst = 0.0;
      for (Eigen::Index j = 0; j < eig.phases.size(); ++j) {
        const double ref =
            coin.dim == 3 && j == 1 ? 0.0 : (eig.phases[j] < 0 ? -r : r);
        worst = std::max(worst, std::abs(eig.phases[j] - ref));
      }
      return worst;
    };
    double fermion_order = 10.0, boson_order = 10.0;
    for (int sample = 0; sample < 5; ++sample) {
      const Vec3 dir = random_direction(rng);
      double prev_f = 0, prev_b = 0;
      for (int h = 0; h < 3; ++h) {
        const double s = 0.05 * std::pow(0.5, h);
        const double ef = abs_error(fermion, s, s * dir);
        const double eb = abs_error(boson, 0.0, s * dir);
        if (h > 0) {
          fermion_order = std::min(fermion_order, std::log2(prev_f / ef));
          boson_order = std::min(boson_order, std::log2(prev_b / eb));
        }
        prev_f = ef;
        prev_b = eb;
      }
    }
    suite.add("fermion_dispersion_order", fermion_order, 1.8, CheckSense::at_least);
    suite.add("boson_dispersion_order", boson_order, 1.8, CheckSense::at_least);

    // First-order generator comparison: residual is quadratic in the scale.
    {
      LatticeSpec fine = spec;
      fine.sites = 64;
      fine.theta = 0.01;
      const MomentumBlock b1 = build_block(fine, fermion, {1, 2, 1});
      LatticeSpec half = fine;
      half.theta = 0.005;
      half.sites = 128;  // halves k dx at the same index
      const MomentumBlock b2 = build_block(half, fermion, {1, 2, 1});
      const double r1 = first_order_generator_residual(b1, fermion, fine).residual;
      const double r2 = first_order_generator_residual(b2, fermion, half).residual;
      suite.add("generator_first_order_ratio_error", std::abs(r1 / r2 - 4.0), 0.8);
    }

    double eig_gap = 0.0, longitudinal = 0.0, ortho = 0.0, handedness = 0.0;
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    for (int sample = 0; sample < 50; ++sample) {
      const double magnitude = mag(rng);
      const Vec3 k = magnitude * random_direction(rng);
      const PhotonModes modes = photon_hamiltonian(k, boson_spec);
      const double chk = boson_spec.light_speed() * boson_spec.constants.hbar *
                         k.norm();
      eig_gap = std::max(
          eig_gap, std::max({std::abs(modes.eigenvalues[0] + chk),
                             std::abs(modes.eigenvalues[1]),
                             std::abs(modes.eigenvalues[2] - chk)}) /
                       chk);
      longitudinal = std::max(
          longitudinal,
          std::abs(std::abs(modes.v_zero.dot(k.normalized().cast<Complex>())) -
                   1.0));
      const PolarizationPair pol = polarization_vectors(k);
      const Vec3 unit = k.normalized();
      ortho = std::max({ortho, std::abs(pol.e1.norm() - 1.0),
                        std::abs(pol.e2.norm() - 1.0),
                        std::abs(pol.e1.dot(pol.e2)),
                        std::abs(unit.dot(pol.e1)), std::abs(unit.dot(pol.e2))});
      handedness =
          std::max(handedness, std::abs(pol.e1.cross(pol.e2).dot(unit) - 1.0));
    }
    suite.add("photon_eigenvalues", eig_gap, 1e-12);
    suite.add("photon_zero_mode_longitudinal", longitudinal, 1e-10);
    suite.add("polarization_orthonormality", ortho, 1e-12);
    suite.add("polarization_handedness", handedness, 1e-12);
  }

  // --- multiparticle embedding ---
  {
    LatticeSpec desk = spec;
    desk.sites = 2;
    LatticeSpec desk_boson = desk;
    desk_boson.theta = 0.0;
    double commute = 0.0, idempotent = 0.0;
    for (const bool is_fermi : {true, false}) {
      const CoinSet& coin = is_fermi ? fermion : boson;
      const LatticeSpec& sp = is_fermi ? desk : desk_boson;
      const Statistics stats = is_fermi ? Statistics::fermi : Statistics::bose;
      const ComplexMatrix walk = dense_walk_unitary(sp, coin);
      DistinguishableState state = vacuum_state(sp, coin, 2);
      for (int sample = 0; sample < 10; ++sample) {
        state.amplitudes = random_tensor(rng, state.amplitudes.size());
        const DistinguishableState pu =
            project_physical(evolve_distinguishable(state, walk), stats);
        const DistinguishableState up =
            evolve_distinguishable(project_physical(state, stats), walk);
        commute = std::max(
            commute, ComplexVector(pu.amplitudes - up.amplitudes).norm());
        const DistinguishableState once = project_physical(state, stats);
        const DistinguishableState twice = project_physical(once, stats);
        idempotent = std::max(
            idempotent, ComplexVector(twice.amplitudes - once.amplitudes).norm());
      }
    }
    suite.add("projector_evolution_commutes", commute, 1e-10);
    suite.add("projector_idempotent", idempotent, 1e-12);

    // CAR/CCR on a six-mode basis with the full particle budget.
    std::vector<Mode> six;
    for (int j = 0; j < 4; ++j) six.push_back({{0, 0, 0}, j});
    six.push_back({{0, 0, 1}, 0});
    six.push_back({{0, 0, 1}, 1});
    suite.add("car_residual",
              car_ccr_residual(Statistics::fermi, ModeBasis(six), 6), 1e-12);
    std::vector<Mode> six_b;
    for (int j = 0; j < 3; ++j) six_b.push_back({{0, 0, 0}, j});
    for (int j = 0; j < 3; ++j) six_b.push_back({{0, 1, 0}, j});
    suite.add("ccr_residual",
              car_ccr_residual(Statistics::bose, ModeBasis(six_b), 6), 1e-12);

    // Fock <-> tensor isomorphism and eigenphase additivity.
    double isomorphism = 0.0, additivity = 0.0;
    const std::vector<std::pair<Statistics, std::vector<Mode>>> lists = {
        {Statistics::fermi, {{{0, 0, 0}, 0}}},
        {Statistics::fermi, {{{0, 0, 0}, 0}, {{0, 0, 0}, 1}}},
        {Statistics::fermi, {{{0, 0, 0}, 2}, {{1, 0, 0}, 1}}},
        {Statistics::bose, {{{0, 0, 1}, 1}}},
        {Statistics::bose, {{{0, 0, 1}, 1}, {{0, 0, 1}, 1}}},
        {Statistics::bose, {{{0, 0, 1}, 0}, {{0, 1, 0}, 2}}},
    };
    for (const auto& [stats, modes] : lists) {
      const CoinSet& coin = stats == Statistics::fermi ? fermion : boson;
      const LatticeSpec& sp = stats == Statistics::fermi ? desk : desk_boson;
      isomorphism = std::max(
          isomorphism, fock_tensor_isomorphism_check(modes, stats, sp, coin, 2));
      const DistinguishableState built =
          build_basis_state(modes, stats, sp, coin, 2);
      const DistinguishableState evolved = evolve_distinguishable(built, sp, coin);
      double phase_sum = 0.0;
      for (const Mode& mode : modes) {
        phase_sum += mode_eigenstate(sp, coin, mode).phase;
      }
      const Complex overlap = built.amplitudes.dot(evolved.amplitudes);
      additivity = std::max(
          additivity, std::abs(overlap - std::polar(1.0, phase_sum)));
    }
    suite.add("fock_isomorphism", isomorphism, 1e-12);
    suite.add("phase_additivity", additivity, 1e-10);

    const LadderRotationCheck fermi_rot =
        ladder_rotation_check(desk, fermion, {0, 0, 1});
    const LadderRotationCheck bose_rot =
        ladder_rotation_check(desk_boson, boson, {0, 1, 1});
    suite.add("ladder_rotation_evolution",
              std::max(fermi_rot.evolution_residual, bose_rot.evolution_residual),
              1e-12);
    suite.add("ladder_rotation_algebra",
              std::max(fermi_rot.algebra_residual, bose_rot.algebra_residual),
              1e-12);
  }

  // --- photon fields ---
  {
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double reality = 0.0, faraday = 0.0, ampere = 0.0, div_max = 0.0,
           parseval = 0.0, energy_drift = 0.0;
    for (int sample = 0; sample < 10; ++sample) {
      ModeAmplitudes modes;
      modes.spec = boson_spec;
      int inserted = 0;
      while (inserted < 6) {
        const MomentumIndex idx = random_index(rng, boson_spec);
        if (idx == MomentumIndex{0, 0, 0}) continue;
        // Avoid +-k collisions (including self-conjugate momenta) so the
        // mode-sum Parseval form stays diagonal.
        const MomentumIndex neg =
            wrap_index(boson_spec, -idx.n, -idx.o, -idx.p);
        if (neg == idx || modes.amplitudes.count({neg, 1}) ||
            modes.amplitudes.count({neg, 2})) {
          continue;
        }
        std::uniform_int_distribution<int> pol(1, 2);
        modes.insert({idx, pol(rng)}, Complex(uniform(rng), uniform(rng)));
        ++inserted;
      }
      const double t = uniform(rng);
      const FieldSnapshot snap = field_snapshot(modes, t);
      const MaxwellResiduals res = maxwell_residuals(modes, t);
      double field_scale = 0.0;
      for (const auto* field :
           {&snap.vector_potential, &snap.electric, &snap.magnetic}) {
        for (const Vec3& v : *field) {
          field_scale = std::max(field_scale, v.cwiseAbs().maxCoeff());
        }
      }
      reality = std::max(reality, snap.max_imag / field_scale);
      faraday = std::max(faraday, res.faraday / res.scale);
      ampere = std::max(ampere, res.ampere / res.scale);
      div_max = std::max({div_max, res.div_e / res.scale, res.div_b / res.scale});

      // Parseval: direct position sum of |E|^2 against the mode-sum form.
      double position = 0.0;
      for (const Vec3& e : snap.electric) {
        position += e.squaredNorm() * std::pow(boson_spec.dx, 3);
      }
      double momentum_form = 0.0;
      const double volume = std::pow(boson_spec.sites * boson_spec.dx, 3);
      for (const auto& [key, alpha] : modes.amplitudes) {
        const double omega = boson_spec.light_speed() *
                             momentum_of_index(boson_spec, key.index).norm();
        momentum_form += 2.0 * volume * boson_spec.constants.hbar * omega /
                         (2.0 * boson_spec.constants.eps0 * volume) *
                         std::norm(alpha);
      }
      parseval = std::max(
          parseval, std::abs(position - momentum_form) / momentum_form);

      // Time evolution only rotates the amplitudes, so the energy is flat.
      ModeAmplitudes evolved = modes;
      for (auto& [key, alpha] : evolved.amplitudes) {
        const double omega = mode_frequency(boson_spec, key.index,
                                            FrequencyModel::continuum);
        alpha *= std::polar(1.0, -omega * 7.5);
      }
      energy_drift = std::max(
          energy_drift, std::abs(photon_energy(evolved) - photon_energy(modes)) /
                            photon_energy(modes));
    }
    suite.add("field_reality", reality, 1e-12);
    suite.add("maxwell_faraday", faraday, 1e-11);
    suite.add("maxwell_ampere", ampere, 1e-11);
    suite.add("transversality", div_max, 1e-11);
    suite.add("parseval", parseval, 1e-10);
    suite.add("energy_conservation", energy_drift, 1e-12);
  }

  return suite.report;
}

bool InvariantReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return c.pass(); });
}

std::string invariant_report_json(const InvariantReport& report,
                                  const InvariantOptions& options) {
  std::ostringstream out;
  out << "{\"seed\":" << report.seed << ",\"options\":{\"n\":" << options.sites
      << ",\"dx\":" << format_double(options.dx)
      << ",\"dt\":" << format_double(options.dt)
      << ",\"theta\":" << format_double(options.theta)
      << ",\"corrupt_coin\":" << (options.corrupt_coin ? "true" : "false")
      << "},\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const InvariantCheck& check = report.checks[i];
    if (i) out << ',';
    out << "{\"name\":\"" << check.name
        << "\",\"value\":" << format_double(check.value) << ",\"tolerance\":"
        << format_double(check.tolerance) << ",\"sense\":\""
        << (check.sense == CheckSense::at_most ? "<=" : ">=")
        << "\",\"pass\":" << (check.pass() ? "true" : "false") << '}';
  }
  out << "],\"all_pass\":" << (report.all_pass() ? "true" : "false") << '}';
  return out.str();
}

}  // namespace qca
