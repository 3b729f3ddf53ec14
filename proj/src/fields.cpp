// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qca/fields.hpp"

#include <cmath>
#include <sstream>

#include "qca/errors.hpp"
#include "qca/format.hpp"
#include "qca/spectrum.hpp"

namespace qca {

namespace {

// Plain bilinear cross product of a real vector with a complex one.
// (Eigen's cross() conjugates complex operands, which is not wanted here.)
Eigen::Vector3cd cross_rc(const Vec3& a, const Eigen::Vector3cd& b) {
  return Eigen::Vector3cd(a.y() * b.z() - a.z() * b.y(),
                          a.z() * b.x() - a.x() * b.z(),
                          a.x() * b.y() - a.y() * b.x());
}

struct ModeCoefficients {
  Vec3 k;
  double omega_time;               // frequency of the e^{-i w t} phase
  Eigen::Vector3cd a, e, b;        // positive-frequency coefficient vectors
};

// Per-mode coefficients of e^{i k.x}.  The normalization always uses the
// mode frequency w_k = c|k|; `model` and `frequency_scale` affect only the
// time phase, so a corrupted or lattice-exact evolution shows up in the
// Maxwell residuals rather than in the field amplitudes.
std::vector<ModeCoefficients> mode_coefficients(const ModeAmplitudes& modes,
                                                double t, FrequencyModel model,
                                                double frequency_scale) {
  if (modes.empty()) throw EmptyModes("no field modes configured");
  modes.spec.validate();
  const double c = modes.spec.light_speed();
  const double hbar = modes.spec.constants.hbar;
  const double eps0 = modes.spec.constants.eps0;
  const double volume = std::pow(modes.spec.sites * modes.spec.dx, 3);

  std::vector<ModeCoefficients> out;
  out.reserve(modes.amplitudes.size());
  for (const auto& [key, alpha] : modes.amplitudes) {
    ModeCoefficients mc;
    mc.k = momentum_of_index(modes.spec, key.index);
    const double omega_norm = c * mc.k.norm();
    mc.omega_time =
        frequency_scale * mode_frequency(modes.spec, key.index, model);
    const PolarizationPair pol = polarization_vectors(mc.k);
    const Vec3 unit = key.polarization == 1 ? pol.e1 : pol.e2;
    const Complex alpha_t = alpha * std::polar(1.0, -mc.omega_time * t);
    const double norm_a = std::sqrt(hbar / (2.0 * eps0 * omega_norm * volume));
    const double norm_e = std::sqrt(hbar * omega_norm / (2.0 * eps0 * volume));
    mc.a = norm_a * alpha_t * unit;
    mc.e = kImag * norm_e * alpha_t * unit;
    mc.b = kImag * cross_rc(mc.k, mc.a);
    out.push_back(std::move(mc));
  }
  return out;
}

}  // namespace

void ModeAmplitudes::insert(const FieldModeKey& key, Complex amplitude) {
  if (key.index == MomentumIndex{0, 0, 0}) {
    throw ZeroMomentum("the k = 0 mode is excluded from the field expansion");
  }
  if (key.polarization != 1 && key.polarization != 2) {
    throw InvalidSpec("polarization label must be 1 or 2");
  }
  momentum_of_index(spec, key.index);  // range check
  amplitudes[key] = amplitude;
}

double mode_frequency(const LatticeSpec& spec, const MomentumIndex& idx,
                      FrequencyModel model) {
  const Vec3 k = momentum_of_index(spec, idx);
  if (model == FrequencyModel::continuum) {
    return spec.light_speed() * k.norm();
  }
  LatticeSpec boson_spec = spec;
  boson_spec.theta = 0.0;
  const MomentumBlock block = build_block(boson_spec, build_boson_coin(), idx);
  return block.phases[block.phases.size() - 1] / spec.dt;
}

FieldSnapshot field_snapshot(const ModeAmplitudes& modes, double t,
                             FrequencyModel model, double frequency_scale) {
  const auto coeffs = mode_coefficients(modes, t, model, frequency_scale);
  const int n = modes.spec.sites;
  const double dx = modes.spec.dx;

  FieldSnapshot snap;
  snap.time = t;
  snap.sites = n;
  snap.vector_potential.assign(modes.spec.site_count(), Vec3::Zero());
  snap.electric.assign(modes.spec.site_count(), Vec3::Zero());
  snap.magnetic.assign(modes.spec.site_count(), Vec3::Zero());

  std::size_t site = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z, ++site) {
        Eigen::Vector3cd a = Eigen::Vector3cd::Zero();
        Eigen::Vector3cd e = Eigen::Vector3cd::Zero();
        Eigen::Vector3cd b = Eigen::Vector3cd::Zero();
        for (const ModeCoefficients& mc : coeffs) {
          const double phase = (mc.k.x() * x + mc.k.y() * y + mc.k.z() * z) * dx;
          const Complex forward = std::polar(1.0, phase);
          const Complex backward = std::conj(forward);
          a += mc.a * forward + mc.a.conjugate() * backward;
          e += mc.e * forward + mc.e.conjugate() * backward;
          b += mc.b * forward + mc.b.conjugate() * backward;
        }
        snap.vector_potential[site] = a.real();
        snap.electric[site] = e.real();
        snap.magnetic[site] = b.real();
        for (const auto* v : {&a, &e, &b}) {
          snap.max_imag = std::max(snap.max_imag, v->imag().cwiseAbs().maxCoeff());
        }
      }
    }
  }
  return snap;
}

MaxwellResiduals maxwell_residuals(const ModeAmplitudes& modes, double t,
                                   FrequencyModel model,
                                   double frequency_scale) {
  const auto coeffs = mode_coefficients(modes, t, model, frequency_scale);
  const double c = modes.spec.light_speed();

  MaxwellResiduals res;
  for (const ModeCoefficients& mc : coeffs) {
    const Complex dt_factor(0.0, -mc.omega_time);  // d/dt of e^{-i w t}
    const Eigen::Vector3cd ikx_e = kImag * cross_rc(mc.k, mc.e);
    const Eigen::Vector3cd ikx_b = kImag * cross_rc(mc.k, mc.b);
    const Eigen::Vector3cd faraday = dt_factor * mc.b + ikx_e;
    const Eigen::Vector3cd ampere = dt_factor * mc.e - c * c * ikx_b;
    res.faraday = std::max(res.faraday, faraday.norm());
    res.ampere = std::max(res.ampere, ampere.norm());
    res.div_e = std::max(res.div_e, std::abs(mc.k.cast<Complex>().dot(mc.e)));
    res.div_b = std::max(res.div_b, std::abs(mc.k.cast<Complex>().dot(mc.b)));
    res.scale = std::max({res.scale, mc.omega_time * mc.b.norm(), ikx_e.norm(),
                          mc.omega_time * mc.e.norm(), c * c * ikx_b.norm(),
                          mc.k.norm() * mc.e.norm(), mc.k.norm() * mc.b.norm()});
  }
  return res;
}

double photon_energy(const ModeAmplitudes& modes) {
  modes.spec.validate();
  const double c = modes.spec.light_speed();
  const double hbar = modes.spec.constants.hbar;
  double energy = 0.0;
  for (const auto& [key, alpha] : modes.amplitudes) {
    energy += c * hbar * momentum_of_index(modes.spec, key.index).norm() *
              std::norm(alpha);
  }
  return energy;
}

void write_snapshot_csv(std::ostream& out, const FieldSnapshot& snapshot) {
  out << "x,y,z,Ax,Ay,Az,Ex,Ey,Ez,Bx,By,Bz\n";
  std::size_t site = 0;
  for (int x = 0; x < snapshot.sites; ++x) {
    for (int y = 0; y < snapshot.sites; ++y) {
      for (int z = 0; z < snapshot.sites; ++z, ++site) {
        out << x << ',' << y << ',' << z;
        for (const Vec3* field :
             {&snapshot.vector_potential[site], &snapshot.electric[site],
              &snapshot.magnetic[site]}) {
          for (int c = 0; c < 3; ++c) out << ',' << format_double((*field)[c]);
        }
        out << '\n';
      }
    }
  }
}

std::string residual_report_json(const MaxwellResiduals& residuals) {
  std::ostringstream out;
  out << "{\"faraday\":" << format_double(residuals.faraday)
      << ",\"ampere\":" << format_double(residuals.ampere)
      << ",\"divE\":" << format_double(residuals.div_e)
      << ",\"divB\":" << format_double(residuals.div_b) << '}';
  return out.str();
}

}  // namespace qca
