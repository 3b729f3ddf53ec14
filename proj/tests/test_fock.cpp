// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qca/errors.hpp"
#include "qca/fock.hpp"

using namespace qca;

namespace {

LatticeSpec desk_spec(WalkKind kind) {
  LatticeSpec spec;
  spec.sites = 2;
  spec.theta = kind == WalkKind::fermion ? 0.2 : 0.0;
  return spec;
}

std::vector<Mode> six_modes() {
  std::vector<Mode> modes;
  for (int j = 0; j < 4; ++j) modes.push_back({{0, 0, 0}, j});
  modes.push_back({{0, 0, 1}, 0});
  modes.push_back({{0, 0, 1}, 1});
  return modes;
}

}  // namespace

TEST_CASE("mode basis ordering") {
  std::vector<Mode> modes = {{{1, 0, 0}, 0}, {{0, 0, 0}, 1}, {{0, 0, 0}, 0}};
  const ModeBasis basis(modes);
  CHECK(basis.size() == 3);
  CHECK(basis.at(0) == Mode{{0, 0, 0}, 0});
  CHECK(basis.at(1) == Mode{{0, 0, 0}, 1});
  CHECK(basis.at(2) == Mode{{1, 0, 0}, 0});
  CHECK(basis.position_of({{1, 0, 0}, 0}) == 2);
  CHECK_THROWS_AS(basis.position_of({{1, 1, 1}, 0}), UnknownMode);
  std::vector<Mode> dup = {{{0, 0, 0}, 0}, {{0, 0, 0}, 0}};
  CHECK_THROWS_AS((void)ModeBasis(dup), InvalidSpec);
}

TEST_CASE("fermionic ladder operators") {
  const ModeBasis basis(six_modes());
  const OccupationState vac = fock_vacuum(Statistics::fermi, basis, 6);
  const Mode m0 = basis.at(0);
  const Mode m1 = basis.at(1);

  SUBCASE("double creation on one mode vanishes") {
    const OccupationState twice = apply_creation(apply_creation(vac, m0), m0);
    CHECK(twice.is_zero());
  }

  SUBCASE("annihilating the vacuum vanishes") {
    CHECK(apply_annihilation(vac, m1).is_zero());
  }

  SUBCASE("order of distinct creations flips the sign") {
    const OccupationState ab = apply_creation(apply_creation(vac, m1), m0);
    const OccupationState ba = apply_creation(apply_creation(vac, m0), m1);
    REQUIRE(ab.terms.size() == 1);
    REQUIRE(ba.terms.size() == 1);
    const Complex amp_ab = ab.terms.begin()->second;
    const Complex amp_ba = ba.terms.begin()->second;
    CHECK(amp_ab == Complex(1.0));  // a0^dag a1^dag |0> in canonical order
    CHECK(amp_ba == Complex(-1.0));
  }

  SUBCASE("the particle-type budget annihilates, not throws") {
    const OccupationState capped = fock_vacuum(Statistics::fermi, basis, 2);
    OccupationState two =
        apply_creation(apply_creation(capped, basis.at(2)), m0);
    CHECK(two.norm() == doctest::Approx(1.0));
    CHECK(apply_creation(two, m1).is_zero());
  }

  SUBCASE("canonical anticommutation relations on the spanning set") {
    CHECK(car_ccr_residual(Statistics::fermi, basis, 6) <= 1e-12);
  }
}

TEST_CASE("bosonic ladder operators") {
  const ModeBasis basis(six_modes());
  const OccupationState vac = fock_vacuum(Statistics::bose, basis, 6);
  const Mode m0 = basis.at(0);

  SUBCASE("sqrt(m!) tower factors are exact") {
    const OccupationState one = apply_creation(vac, m0);
    const OccupationState two = apply_creation(one, m0);
    REQUIRE(two.terms.size() == 1);
    CHECK(two.terms.begin()->second == Complex(std::sqrt(2.0)));
    const OccupationState three = apply_creation(two, m0);
    CHECK(three.terms.begin()->second ==
          Complex(std::sqrt(2.0) * std::sqrt(3.0)));
    // annihilation brings back sqrt(m)
    const OccupationState back = apply_annihilation(three, m0);
    CHECK(back.terms.begin()->second ==
          Complex(std::sqrt(2.0) * std::sqrt(3.0) * std::sqrt(3.0)));
  }

  SUBCASE("creation past the budget gives the zero state") {
    const OccupationState capped = fock_vacuum(Statistics::bose, basis, 2);
    const OccupationState two = apply_creation(apply_creation(capped, m0), m0);
    CHECK_FALSE(two.is_zero());
    CHECK(apply_creation(two, m0).is_zero());
    CHECK(apply_creation(two, basis.at(3)).is_zero());
  }

  SUBCASE("canonical commutation relations below the budget") {
    CHECK(car_ccr_residual(Statistics::bose, basis, 6) <= 1e-12);
  }
}

TEST_CASE("occupation evolution") {
  const ModeBasis basis(six_modes());
  std::map<Mode, double> phases;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    phases[basis.at(i)] = 0.1 * (double(i) + 1.0);
  }

  SUBCASE("vacuum is invariant") {
    const OccupationState vac = fock_vacuum(Statistics::fermi, basis, 6);
    const OccupationState evolved = evolve_occupation(vac, phases, 5);
    CHECK(evolved.terms.begin()->second == Complex(1.0));
  }

  SUBCASE("single mode advances by its phase per step") {
    const OccupationState vac = fock_vacuum(Statistics::fermi, basis, 6);
    const OccupationState one = apply_creation(vac, basis.at(2));
    const OccupationState evolved = evolve_occupation(one, phases, 1);
    CHECK(std::abs(evolved.terms.begin()->second - std::polar(1.0, 0.3)) <=
          1e-15);
    const OccupationState three_steps = evolve_occupation(one, phases, 3);
    CHECK(std::abs(three_steps.terms.begin()->second - std::polar(1.0, 0.9)) <=
          1e-15);
  }

  SUBCASE("missing phase for an occupied mode throws") {
    const OccupationState vac = fock_vacuum(Statistics::fermi, basis, 6);
    const OccupationState one = apply_creation(vac, basis.at(4));
    std::map<Mode, double> partial;
    partial[basis.at(0)] = 0.1;
    CHECK_THROWS_AS(evolve_occupation(one, partial, 1), MissingPhase);
  }

  SUBCASE("Heisenberg picture: U a^dag U^dag = e^{i phi} a^dag") {
    // verified by applying both sides to every basis state of a 4-mode space
    const std::vector<Mode> all = six_modes();
    const std::vector<Mode> four(all.begin(), all.begin() + 4);
    const ModeBasis small(four);
    for (const Statistics stats : {Statistics::fermi, Statistics::bose}) {
      const int n_max = 4;
      const int per_mode = stats == Statistics::fermi ? 1 : n_max;
      // enumerate the spanning set through repeated creations on the vacuum
      std::vector<OccupationState> span;
      span.push_back(fock_vacuum(stats, small, n_max));
      for (std::size_t i = 0; i < small.size(); ++i) {
        const std::size_t existing = span.size();
        for (std::size_t s = 0; s < existing; ++s) {
          OccupationState grown = span[s];
          for (int rep = 0; rep < per_mode; ++rep) {
            grown = apply_creation(grown, small.at(i));
            if (grown.is_zero()) break;
            OccupationState normalized = grown;
            for (auto& [occ, amp] : normalized.terms) amp /= grown.norm();
            span.push_back(normalized);
          }
        }
      }
      for (const Mode mode : four) {
        for (const OccupationState& psi : span) {
          const OccupationState lhs = evolve_occupation(
              apply_creation(evolve_occupation(psi, phases, -1), mode), phases,
              1);
          OccupationState rhs = apply_creation(psi, mode);
          const Complex factor = std::polar(1.0, phases.at(mode));
          for (auto& [occ, amp] : rhs.terms) amp *= factor;
          OccupationState diff = lhs;
          for (const auto& [occ, amp] : rhs.terms) {
            diff.terms[occ] -= amp;
          }
          CHECK(diff.norm() <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("Fock-tensor isomorphism") {
  const CoinSet fermion = build_fermion_coin();
  const CoinSet boson = build_boson_coin();
  const LatticeSpec fspec = desk_spec(WalkKind::fermion);
  const LatticeSpec bspec = desk_spec(WalkKind::boson);

  SUBCASE("single mode") {
    const std::vector<Mode> modes = {{{0, 0, 1}, 2}};
    CHECK(fock_tensor_isomorphism_check(modes, Statistics::fermi, fspec, fermion,
                                        2) <= 1e-12);
  }

  SUBCASE("two fermion modes in both orders, relative sign -1") {
    const Mode a{{0, 0, 0}, 0};
    const Mode b{{0, 0, 1}, 3};
    const std::vector<Mode> ab = {a, b};
    const std::vector<Mode> ba = {b, a};
    CHECK(fock_tensor_isomorphism_check(ab, Statistics::fermi, fspec, fermion, 2) <=
          1e-12);
    CHECK(fock_tensor_isomorphism_check(ba, Statistics::fermi, fspec, fermion, 2) <=
          1e-12);

    // the two orders build opposite-sign states in both representations
    const DistinguishableState sab =
        build_basis_state(ab, Statistics::fermi, fspec, fermion, 2);
    const DistinguishableState sba =
        build_basis_state(ba, Statistics::fermi, fspec, fermion, 2);
    CHECK(std::abs(sab.amplitudes.dot(sba.amplitudes) + 1.0) <= 1e-12);
  }

  SUBCASE("repeated boson mode carries the sqrt(2) factor") {
    const Mode m{{0, 1, 0}, 1};
    const std::vector<Mode> mm = {m, m};
    CHECK(fock_tensor_isomorphism_check(mm, Statistics::bose, bspec, boson, 2) <=
          1e-12);

    // explicit two-factor symmetrization oracle: |m, m> is just f x f
    const ComplexVector f = mode_eigenstate(bspec, boson, m).amplitudes;
    const DistinguishableState built =
        build_basis_state(mm, Statistics::bose, bspec, boson, 2);
    ComplexVector extended = ComplexVector::Zero(built.single_dim);
    extended.head(f.size()) = f;
    ComplexVector kron(built.amplitudes.size());
    for (Eigen::Index i = 0; i < extended.size(); ++i) {
      kron.segment(i * extended.size(), extended.size()) =
          extended[i] * extended;
    }
    CHECK(max_abs(ComplexVector(built.amplitudes - kron)) <= 1e-14);
  }
}

TEST_CASE("momentum-representation ladder rotation") {
  const CoinSet fermion = build_fermion_coin();
  const CoinSet boson = build_boson_coin();

  SUBCASE("V = I is the identity rotation") {
    const std::vector<Mode> modes = {{{0, 0, 0}, 0}, {{0, 0, 0}, 1}};
    const auto rows = rotate_ladder_basis(ComplexMatrix::Identity(2, 2),
                                          modes, /*creation=*/true);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].terms.size() == 1);
    CHECK(rows[0].terms[0].mode == modes[0]);
    CHECK(rows[0].terms[0].coefficient == Complex(1.0));
  }

  SUBCASE("non-unitary V is rejected") {
    ComplexMatrix bad = 2.0 * ComplexMatrix::Identity(2, 2);
    const std::vector<Mode> modes = {{{0, 0, 0}, 0}, {{0, 0, 0}, 1}};
    CHECK_THROWS_AS(rotate_ladder_basis(bad, modes, true), NotUnitary);
  }

  SUBCASE("one-step map is multiplication by U_k, and CAR/CCR survive") {
    const LadderRotationCheck fermi =
        ladder_rotation_check(desk_spec(WalkKind::fermion), fermion, {1, 0, 1});
    CHECK(fermi.evolution_residual <= 1e-12);
    CHECK(fermi.algebra_residual <= 1e-12);

    const LadderRotationCheck bose =
        ladder_rotation_check(desk_spec(WalkKind::boson), boson, {0, 1, 1});
    CHECK(bose.evolution_residual <= 1e-12);
    CHECK(bose.algebra_residual <= 1e-12);
  }
}

TEST_CASE("occupation JSON schema") {
  std::vector<Mode> modes = {{{0, 0, 0}, 0}, {{0, 0, 1}, 1}};
  const ModeBasis basis(modes);
  OccupationState state = fock_vacuum(Statistics::bose, basis, 2);
  state = apply_creation(apply_creation(state, basis.at(0)), basis.at(0));
  CHECK(occupation_to_json(state) ==
        "{\"statistics\":\"bose\",\"terms\":[{\"occ\":[2,0],\"re\":1."
        "4142135623730951,\"im\":0}]}");

  const OccupationState vac = fock_vacuum(Statistics::fermi, basis, 2);
  CHECK(occupation_to_json(vac) ==
        "{\"statistics\":\"fermi\",\"terms\":[{\"occ\":[0,0],\"re\":1,\"im\":0}]}");
}
