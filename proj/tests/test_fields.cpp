// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "qca/errors.hpp"
#include "qca/fields.hpp"
#include "qca/spectrum.hpp"

using namespace qca;

namespace {

LatticeSpec boson_spec(int n) {
  LatticeSpec spec;
  spec.sites = n;
  spec.theta = 0.0;
  return spec;
}

ModeAmplitudes random_modes(testing::Rng& rng, const LatticeSpec& spec,
                            int count, bool avoid_reflections) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::uniform_int_distribution<int> index(spec.index_min(), spec.index_max());
  std::uniform_int_distribution<int> pol(1, 2);
  ModeAmplitudes modes;
  modes.spec = spec;
  while (static_cast<int>(modes.amplitudes.size()) < count) {
    const MomentumIndex idx{index(rng), index(rng), index(rng)};
    if (idx == MomentumIndex{0, 0, 0}) continue;
    if (avoid_reflections) {
      const MomentumIndex neg = wrap_index(spec, -idx.n, -idx.o, -idx.p);
      if (neg == idx || modes.amplitudes.count({neg, 1}) ||
          modes.amplitudes.count({neg, 2})) {
        continue;
      }
    }
    modes.insert({idx, pol(rng)}, Complex(uniform(rng), uniform(rng)));
  }
  return modes;
}

}  // namespace

TEST_CASE("mode bookkeeping") {
  ModeAmplitudes modes;
  modes.spec = boson_spec(8);
  CHECK_THROWS_AS(modes.insert({{0, 0, 0}, 1}, Complex(1.0)), ZeroMomentum);
  CHECK_THROWS_AS(modes.insert({{1, 0, 0}, 3}, Complex(1.0)), InvalidSpec);
  CHECK_THROWS_AS(modes.insert({{5, 0, 0}, 1}, Complex(1.0)), IndexOutOfRange);
  CHECK_THROWS_AS(field_snapshot(modes, 0.0), EmptyModes);
  CHECK_THROWS_AS(maxwell_residuals(modes, 0.0), EmptyModes);
}

TEST_CASE("zero amplitudes give zero fields") {
  ModeAmplitudes modes;
  modes.spec = boson_spec(4);
  modes.insert({{1, 0, 0}, 1}, Complex(0.0));
  modes.insert({{0, 1, 0}, 2}, Complex(0.0));
  const FieldSnapshot snap = field_snapshot(modes, 0.3);
  for (const Vec3& v : snap.electric) CHECK(v.norm() == 0.0);
  for (const Vec3& v : snap.magnetic) CHECK(v.norm() == 0.0);
  for (const Vec3& v : snap.vector_potential) CHECK(v.norm() == 0.0);
  CHECK(photon_energy(modes) == 0.0);
}

TEST_CASE("single axis mode: field directions from the curl") {
  // k along Z with polarization 1: E is parallel to e1 = (1,0,0) and the
  // momentum-space curl makes B parallel to k x e1 = (0,1,0).
  const LatticeSpec spec = boson_spec(8);
  ModeAmplitudes modes;
  modes.spec = spec;
  modes.insert({{0, 0, 1}, 1}, Complex(1.0));
  const FieldSnapshot snap = field_snapshot(modes, 0.0);

  double field_scale = 0.0;
  for (const Vec3& e : snap.electric) field_scale = std::max(field_scale, e.norm());
  REQUIRE(field_scale > 0.0);
  for (std::size_t site = 0; site < snap.electric.size(); ++site) {
    const Vec3& e = snap.electric[site];
    CHECK(std::abs(e.y()) <= 1e-15 * field_scale);
    CHECK(std::abs(e.z()) <= 1e-15 * field_scale);
    const Vec3& b = snap.magnetic[site];
    CHECK(std::abs(b.x()) <= 1e-15 * field_scale);
    CHECK(std::abs(b.z()) <= 1e-15 * field_scale);
  }
}

TEST_CASE("source-free Maxwell residuals") {
  testing::Rng rng(101);
  const LatticeSpec spec = boson_spec(8);

  SUBCASE("single mode at any time") {
    ModeAmplitudes modes;
    modes.spec = spec;
    modes.insert({{1, 2, 0}, 2}, Complex(0.4, -0.3));
    for (const double t : {0.0, 0.7, -3.1}) {
      const MaxwellResiduals res = maxwell_residuals(modes, t);
      CHECK(res.faraday <= 1e-12 * res.scale);
      CHECK(res.ampere <= 1e-12 * res.scale);
      CHECK(res.div_e <= 1e-12 * res.scale);
      CHECK(res.div_b <= 1e-12 * res.scale);
    }
  }

  SUBCASE("twenty random modes") {
    const ModeAmplitudes modes = random_modes(rng, spec, 20, false);
    const MaxwellResiduals res = maxwell_residuals(modes, 0.42);
    CHECK(res.faraday <= 1e-11 * res.scale);
    CHECK(res.ampere <= 1e-11 * res.scale);
    CHECK(res.div_e <= 1e-11 * res.scale);
    CHECK(res.div_b <= 1e-11 * res.scale);
  }

  SUBCASE("corrupted frequency is caught by the Faraday residual") {
    const ModeAmplitudes modes = random_modes(rng, spec, 5, false);
    const MaxwellResiduals res =
        maxwell_residuals(modes, 0.9, FrequencyModel::continuum, 1.1);
    CHECK(res.faraday > 0.05 * res.scale);
  }

  SUBCASE("lattice-walk frequency model reports the long-wavelength gap") {
    // on-axis the boson walk phase is exact, so pick a diagonal momentum
    const double continuum =
        mode_frequency(spec, {1, 1, 1}, FrequencyModel::continuum);
    const double lattice =
        mode_frequency(spec, {1, 1, 1}, FrequencyModel::lattice_walk);
    CHECK(lattice != continuum);
    CHECK(std::abs(lattice - continuum) / continuum < 0.2);
    const double axis_lattice =
        mode_frequency(spec, {0, 0, 1}, FrequencyModel::lattice_walk);
    const double axis_continuum =
        mode_frequency(spec, {0, 0, 1}, FrequencyModel::continuum);
    CHECK(std::abs(axis_lattice - axis_continuum) <= 1e-12);

    ModeAmplitudes modes;
    modes.spec = spec;
    modes.insert({{1, 1, 1}, 1}, Complex(1.0));
    const MaxwellResiduals res =
        maxwell_residuals(modes, 0.2, FrequencyModel::lattice_walk);
    // the documented discrepancy: visible, but far from the corrupted case
    CHECK(res.faraday > 1e-6 * res.scale);
    CHECK(res.faraday < 0.2 * res.scale);
  }
}

TEST_CASE("fields are real") {
  testing::Rng rng(7);
  const LatticeSpec spec = boson_spec(4);
  for (int trial = 0; trial < 10; ++trial) {
    const ModeAmplitudes modes = random_modes(rng, spec, 6, false);
    const FieldSnapshot snap = field_snapshot(modes, 0.1 * trial);
    double field_scale = 0.0;
    for (const Vec3& e : snap.electric) field_scale = std::max(field_scale, e.norm());
    CHECK(snap.max_imag <= 1e-12 * field_scale);
  }
}

TEST_CASE("photon energy") {
  const LatticeSpec spec = boson_spec(8);

  SUBCASE("one unit mode at the fundamental") {
    ModeAmplitudes modes;
    modes.spec = spec;
    modes.insert({{1, 0, 0}, 1}, Complex(1.0));
    const double expected = 2.0 * std::numbers::pi / (spec.sites * spec.dx);
    CHECK(photon_energy(modes) == doctest::Approx(expected).epsilon(1e-14));
  }

  SUBCASE("invariant under the time evolution of the amplitudes") {
    testing::Rng rng(55);
    ModeAmplitudes modes = random_modes(rng, spec, 8, false);
    const double before = photon_energy(modes);
    for (auto& [key, alpha] : modes.amplitudes) {
      const double omega =
          mode_frequency(spec, key.index, FrequencyModel::continuum);
      alpha *= std::polar(1.0, -omega * 11.3);
    }
    CHECK(photon_energy(modes) == doctest::Approx(before).epsilon(1e-12));
  }
}

TEST_CASE("Parseval consistency of |E|^2") {
  testing::Rng rng(83);
  const LatticeSpec spec = boson_spec(4);
  const ModeAmplitudes modes = random_modes(rng, spec, 6, true);
  const FieldSnapshot snap = field_snapshot(modes, 0.77);

  double position = 0.0;
  for (const Vec3& e : snap.electric) {
    position += e.squaredNorm() * std::pow(spec.dx, 3);
  }
  double momentum_form = 0.0;
  for (const auto& [key, alpha] : modes.amplitudes) {
    const double omega = spec.light_speed() *
                         momentum_of_index(spec, key.index).norm();
    momentum_form +=
        spec.constants.hbar * omega / spec.constants.eps0 * std::norm(alpha);
  }
  CHECK(std::abs(position - momentum_form) / momentum_form <= 1e-10);
}

TEST_CASE("finite-difference curl converges to the momentum-space curl") {
  // central differences on the lattice approach B = curl A quadratically
  // in k dx as the mode moves toward the zone center on finer grids
  double previous = 0.0;
  for (int h = 0; h < 3; ++h) {
    const int n = 8 << h;  // 8, 16, 32
    const LatticeSpec spec = boson_spec(n);
    ModeAmplitudes modes;
    modes.spec = spec;
    modes.insert({{1, 1, 0}, 1}, Complex(0.6, 0.2));
    const FieldSnapshot snap = field_snapshot(modes, 0.0);

    double worst = 0.0, scale = 0.0;
    const auto site = [&](int x, int y, int z) {
      return ((std::size_t(x) % n) * n + (std::size_t(y) % n)) * n +
             (std::size_t(z) % n);
    };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          const auto& a = snap.vector_potential;
          const double inv = 1.0 / (2.0 * spec.dx);
          Vec3 curl;
          curl.x() = (a[site(x, y + 1, z)].z() - a[site(x, y + n - 1, z)].z()) * inv -
                     (a[site(x, y, z + 1)].y() - a[site(x, y, z + n - 1)].y()) * inv;
          curl.y() = (a[site(x, y, z + 1)].x() - a[site(x, y, z + n - 1)].x()) * inv -
                     (a[site(x + 1, y, z)].z() - a[site(x + n - 1, y, z)].z()) * inv;
          curl.z() = (a[site(x + 1, y, z)].y() - a[site(x + n - 1, y, z)].y()) * inv -
                     (a[site(x, y + 1, z)].x() - a[site(x, y + n - 1, z)].x()) * inv;
          worst = std::max(worst, (curl - snap.magnetic[site(x, y, z)]).norm());
          scale = std::max(scale, snap.magnetic[site(x, y, z)].norm());
        }
      }
    }
    const double relative = worst / scale;
    if (h > 0) CHECK(previous / relative == doctest::Approx(4.0).epsilon(0.05));
    previous = relative;
  }
}

TEST_CASE("field export formats") {
  const LatticeSpec spec = boson_spec(2);
  ModeAmplitudes modes;
  modes.spec = spec;
  modes.insert({{1, 0, 0}, 1}, Complex(1.0));
  const FieldSnapshot snap = field_snapshot(modes, 0.0);

  std::ostringstream out;
  write_snapshot_csv(out, snap);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y,z,Ax,Ay,Az,Ex,Ey,Ez,Bx,By,Bz");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);  // 2^3 sites

  const MaxwellResiduals res = maxwell_residuals(modes, 0.0);
  const std::string json = residual_report_json(res);
  CHECK(json.rfind("{\"faraday\":", 0) == 0);
  CHECK(json.find("\"ampere\":") != std::string::npos);
  CHECK(json.find("\"divE\":") != std::string::npos);
  CHECK(json.find("\"divB\":") != std::string::npos);
  CHECK(json.back() == '}');
}
