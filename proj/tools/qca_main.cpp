// Copyright 2026 The qcalab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Exit codes: 0 success, 2 configuration or usage
// error, 3 numerical-invariant failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qca/errors.hpp"
#include "qca/fields.hpp"
#include "qca/fock.hpp"
#include "qca/format.hpp"
#include "qca/invariants.hpp"
#include "qca/multiparticle.hpp"
#include "qca/scan.hpp"
#include "qca/spectrum.hpp"

namespace {

using namespace qca;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
  std::string kind = "fermion";
  int sites = 8;
  double dx = 1.0;
  double dt = 1.0;
  double theta = 0.0;
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string format;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--kind", opts.kind, "walk kind: fermion or boson")
      ->check(CLI::IsMember({"fermion", "boson"}));
  cmd->add_option("--n", opts.sites, "lattice sites per dimension (even)");
  cmd->add_option("--dx", opts.dx, "lattice spacing");
  cmd->add_option("--dt", opts.dt, "time step");
  cmd->add_option("--theta", opts.theta, "coin angle (fermion mass term)");
  cmd->add_option("--seed", opts.seed, "random seed for randomized suites");
  cmd->add_option("--out", opts.out, "output path ('-' for stdout)");
  cmd->add_option("--format", opts.format, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
}

LatticeSpec spec_of(const CommonOptions& opts) {
  LatticeSpec spec;
  spec.sites = opts.sites;
  spec.dx = opts.dx;
  spec.dt = opts.dt;
  spec.theta = opts.theta;
  spec.validate();
  return spec;
}

CoinSet coin_of(const CommonOptions& opts) {
  return opts.kind == "fermion" ? build_fermion_coin() : build_boson_coin();
}

void write_artifact(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << content;
}

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) {
    try {
      values.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ConfigError("expected an integer, got '" + item + "'");
    }
  }
  return values;
}

std::vector<double> parse_doubles(const std::string& text, char sep) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("expected a number, got '" + item + "'");
    }
  }
  return values;
}

// --- dispersion ---

struct DispersionOptions {
  CommonOptions common;
  std::string axis = "x";
  int max_index = -1;  // default N/2
  std::string path;    // "n,o,p;n,o,p;..." overrides --axis
};

int run_dispersion(const DispersionOptions& opts) {
  const LatticeSpec spec = spec_of(opts.common);
  const CoinSet coin = coin_of(opts.common);
  const std::string format =
      opts.common.format.empty() ? "csv" : opts.common.format;

  std::vector<MomentumIndex> path;
  if (!opts.path.empty()) {
    std::stringstream stream(opts.path);
    std::string point;
    while (std::getline(stream, point, ';')) {
      const std::vector<int> nop = parse_ints(point, ',');
      if (nop.size() != 3) {
        throw ConfigError("path points must be n,o,p triples");
      }
      path.push_back({nop[0], nop[1], nop[2]});
    }
  } else {
    const int top = opts.max_index < 0 ? spec.index_max() : opts.max_index;
    for (int i = 0; i <= top; ++i) {
      if (opts.axis == "x") {
        path.push_back({i, 0, 0});
      } else if (opts.axis == "y") {
        path.push_back({0, i, 0});
      } else if (opts.axis == "z") {
        path.push_back({0, 0, i});
      } else if (opts.axis == "diag") {
        path.push_back({i, i, i});
      } else {
        throw ConfigError("axis must be one of x, y, z, diag");
      }
    }
  }
  if (path.empty()) throw ConfigError("empty momentum path");
  for (const MomentumIndex& idx : path) momentum_of_index(spec, idx);

  const std::vector<DispersionRow> rows = dispersion_table(spec, coin, path);

  // Reference phase per branch: the +-sqrt(theta^2 + |k dx|^2) continuum
  // value for the fermion walk, {0, +-|k dx|} for the boson walk.
  const auto reference = [&](const DispersionRow& row) {
    const double kdx = row.k.norm() * spec.dx;
    if (coin.kind == WalkKind::boson) {
      if (std::abs(row.phase) <= 1e-12) return 0.0;
      return row.phase < 0 ? -kdx : kdx;
    }
    const double r = std::sqrt(spec.theta * spec.theta + kdx * kdx);
    return row.phase < 0 ? -r : r;
  };

  std::ostringstream out;
  if (format == "csv") {
    out << "n,o,p,kx,ky,kz,branch,phase,energy,phase_ref,rel_err\n";
    for (const DispersionRow& row : rows) {
      const double ref = reference(row);
      const double err = std::abs(ref) > 0 ? std::abs(row.phase - ref) / std::abs(ref)
                                           : std::abs(row.phase - ref);
      out << row.index.n << ',' << row.index.o << ',' << row.index.p << ','
          << format_double(row.k.x()) << ',' << format_double(row.k.y()) << ','
          << format_double(row.k.z()) << ',' << row.branch << ','
          << format_double(row.phase) << ',' << format_double(row.energy) << ','
          << format_double(ref) << ',' << format_double(err) << '\n';
    }
  } else {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const DispersionRow& row = rows[i];
      const double ref = reference(row);
      const double err = std::abs(ref) > 0 ? std::abs(row.phase - ref) / std::abs(ref)
                                           : std::abs(row.phase - ref);
      if (i) out << ',';
      out << "{\"n\":" << row.index.n << ",\"o\":" << row.index.o
          << ",\"p\":" << row.index.p << ",\"kx\":" << format_double(row.k.x())
          << ",\"ky\":" << format_double(row.k.y())
          << ",\"kz\":" << format_double(row.k.z())
          << ",\"branch\":" << row.branch
          << ",\"phase\":" << format_double(row.phase)
          << ",\"energy\":" << format_double(row.energy)
          << ",\"phase_ref\":" << format_double(ref)
          << ",\"rel_err\":" << format_double(err) << '}';
    }
    out << "]\n";
  }
  write_artifact(opts.common.out, out.str());
  return kExitOk;
}

// --- invariants ---

struct InvariantsCliOptions {
  CommonOptions common;
  bool inject_bad_coin = false;
};

int run_invariants(const InvariantsCliOptions& opts) {
  if (!opts.common.format.empty() && opts.common.format != "json") {
    throw ConfigError("the invariants report is JSON only");
  }
  InvariantOptions inv;
  inv.sites = opts.common.sites;
  inv.dx = opts.common.dx;
  inv.dt = opts.common.dt;
  inv.theta = opts.common.theta;
  inv.seed = opts.common.seed;
  inv.corrupt_coin = opts.inject_bad_coin;
  const InvariantReport report = run_invariant_suite(inv);
  write_artifact(opts.common.out, invariant_report_json(report, inv) + "\n");
  return report.all_pass() ? kExitOk : kExitNumeric;
}

// --- multiparticle-demo ---

struct DemoOptions {
  CommonOptions common;
  std::vector<std::string> states;  // each "n,o,p,j;n,o,p,j;..."
  int n_max = 2;
  int steps = 1;
};

int run_demo(const DemoOptions& opts) {
  if (!opts.common.format.empty() && opts.common.format != "json") {
    throw ConfigError("the demo transcript is JSON only");
  }
  const LatticeSpec spec = spec_of(opts.common);
  const CoinSet coin = coin_of(opts.common);
  const Statistics statistics = coin.kind == WalkKind::fermion
                                    ? Statistics::fermi
                                    : Statistics::bose;

  std::vector<std::vector<Mode>> state_modes;
  for (const std::string& text : opts.states) {
    std::vector<Mode> modes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ';')) {
      const std::vector<int> vals = parse_ints(item, ',');
      if (vals.size() != 4) {
        throw ConfigError("modes must be n,o,p,branch quadruples");
      }
      modes.push_back({{vals[0], vals[1], vals[2]}, vals[3]});
    }
    state_modes.push_back(std::move(modes));
  }
  if (state_modes.empty()) {
    throw ConfigError("no basis states configured; pass --state");
  }

  const ComplexMatrix walk = dense_walk_unitary(spec, coin);

  std::ostringstream out;
  out << "{\"kind\":\"" << to_string(coin.kind) << "\",\"statistics\":\""
      << to_string(statistics) << "\",\"n\":" << spec.sites
      << ",\"nmax\":" << opts.n_max << ",\"steps\":" << opts.steps
      << ",\"states\":[";

  for (std::size_t s = 0; s < state_modes.size(); ++s) {
    const std::vector<Mode>& modes = state_modes[s];
    for (const Mode& mode : modes) {
      momentum_of_index(spec, mode.index);
      if (mode.branch < 0 || mode.branch >= coin.dim) {
        throw ConfigError("branch out of range for this coin");
      }
    }

    const DistinguishableState built =
        build_basis_state(modes, statistics, spec, coin, opts.n_max);
    DistinguishableState evolved = built;
    for (int step = 0; step < opts.steps; ++step) {
      evolved = evolve_distinguishable(evolved, walk);
    }
    double phase_sum = 0.0;
    std::map<Mode, double> phases;
    std::vector<Mode> distinct(modes);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const Mode& mode : distinct) {
      phases[mode] = mode_eigenstate(spec, coin, mode).phase;
    }
    for (const Mode& mode : modes) phase_sum += phases[mode];

    const Complex overlap = built.amplitudes.dot(evolved.amplitudes);
    const Complex expected = std::polar(1.0, opts.steps * phase_sum);

    // Occupation-number route for the same state.
    OccupationState occ = fock_vacuum(statistics, ModeBasis(distinct), opts.n_max);
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
      occ = apply_creation(occ, *it);
    }
    const double ladder_norm = occ.norm();
    OccupationState occ_evolved = evolve_occupation(occ, phases, opts.steps);

    const double isomorphism =
        fock_tensor_isomorphism_check(modes, statistics, spec, coin, opts.n_max);

    if (s) out << ',';
    out << "{\"modes\":[";
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (i) out << ',';
      out << "[" << modes[i].index.n << ',' << modes[i].index.o << ','
          << modes[i].index.p << ',' << modes[i].branch << ']';
    }
    out << "],\"eigenphase_sum\":" << format_double(phase_sum)
        << ",\"overlap_re\":" << format_double(overlap.real())
        << ",\"overlap_im\":" << format_double(overlap.imag())
        << ",\"phase_error\":" << format_double(std::abs(overlap - expected))
        << ",\"ladder_norm\":" << format_double(ladder_norm)
        << ",\"isomorphism_residual\":" << format_double(isomorphism)
        << ",\"occupation\":" << occupation_to_json(occ_evolved) << '}';
  }
  out << "]}\n";
  write_artifact(opts.common.out, out.str());
  return kExitOk;
}

// --- fields ---

struct FieldsOptions {
  CommonOptions common;
  std::vector<std::string> modes;  // each "n,o,p,pol,re,im"
  double time = 0.0;
  std::string frequency = "continuum";
  bool corrupt_frequency = false;
  std::string residuals_out;
};

int run_fields(const FieldsOptions& opts) {
  if (!opts.common.format.empty() && opts.common.format != "csv") {
    throw ConfigError("field snapshots are CSV only");
  }
  if (opts.common.kind != "boson") {
    throw ConfigError("the field expansion is defined for the boson sector");
  }
  if (opts.common.theta != 0.0) {
    throw ConfigError("the boson walk has no coin flip; theta must be 0");
  }
  ModeAmplitudes modes;
  modes.spec = spec_of(opts.common);
  for (const std::string& text : opts.modes) {
    const std::vector<double> vals = parse_doubles(text, ',');
    if (vals.size() != 6) {
      throw ConfigError("modes must be n,o,p,polarization,re,im");
    }
    FieldModeKey key{{int(vals[0]), int(vals[1]), int(vals[2])}, int(vals[3])};
    modes.insert(key, Complex(vals[4], vals[5]));
  }
  if (modes.empty()) throw EmptyModes("no field modes configured");

  const FrequencyModel model = opts.frequency == "lattice"
                                   ? FrequencyModel::lattice_walk
                                   : FrequencyModel::continuum;
  const double scale = opts.corrupt_frequency ? 1.1 : 1.0;

  const FieldSnapshot snap = field_snapshot(modes, opts.time, model, scale);
  const MaxwellResiduals res = maxwell_residuals(modes, opts.time, model, scale);

  std::ostringstream snapshot_csv;
  write_snapshot_csv(snapshot_csv, snap);

  const std::string residuals_path =
      !opts.residuals_out.empty()
          ? opts.residuals_out
          : (opts.common.out == "-" ? "-" : opts.common.out + ".residuals.json");
  write_artifact(opts.common.out, snapshot_csv.str());
  write_artifact(residuals_path, residual_report_json(res) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermionic and bosonic quantum walks on a periodic 3D lattice"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "TOML config file with one section per subcommand; "
                 "command-line flags override it");

  DispersionOptions dispersion;
  CLI::App* disp_cmd = app.add_subcommand(
      "dispersion", "scan walk eigenphases along a momentum path");
  add_common(disp_cmd, dispersion.common);
  disp_cmd->add_option("--axis", dispersion.axis, "path axis: x, y, z or diag");
  disp_cmd->add_option("--kmax", dispersion.max_index,
                       "largest path index (default N/2)");
  disp_cmd->add_option("--path", dispersion.path,
                       "explicit path 'n,o,p;n,o,p;...' (overrides --axis)");

  InvariantsCliOptions invariants;
  CLI::App* inv_cmd = app.add_subcommand(
      "invariants", "run every module's invariant suite and report residuals");
  add_common(inv_cmd, invariants.common);
  inv_cmd->get_option("--seed")->required();
  inv_cmd->add_flag("--inject-bad-coin", invariants.inject_bad_coin,
                    "debug: corrupt the fermion coin (negative control)");
  invariants.common.theta = 0.05;

  DemoOptions demo;
  demo.common.sites = 2;
  CLI::App* demo_cmd = app.add_subcommand(
      "multiparticle-demo",
      "build multiparticle basis states and evolve them in both representations");
  add_common(demo_cmd, demo.common);
  demo_cmd->add_option("--state", demo.states,
                       "one basis state as 'n,o,p,branch;n,o,p,branch;...'");
  demo_cmd->add_option("--nmax", demo.n_max, "particle-type count");
  demo_cmd->add_option("--steps", demo.steps, "evolution steps");

  FieldsOptions fields;
  fields.common.kind = "boson";
  CLI::App* fields_cmd = app.add_subcommand(
      "fields", "evaluate photon-sector field snapshots and Maxwell residuals");
  add_common(fields_cmd, fields.common);
  fields_cmd->add_option("--mode", fields.modes,
                         "one coherent mode as 'n,o,p,polarization,re,im'");
  fields_cmd->add_option("--time", fields.time, "snapshot time");
  fields_cmd->add_option("--frequency", fields.frequency,
                         "time-phase model: continuum or lattice")
      ->check(CLI::IsMember({"continuum", "lattice"}));
  fields_cmd->add_flag("--corrupt-frequency", fields.corrupt_frequency,
                       "debug: scale mode frequencies by 1.1 (negative control)");
  fields_cmd->add_option("--residuals-out", fields.residuals_out,
                         "path for the residual report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (disp_cmd->parsed()) return run_dispersion(dispersion);
    if (inv_cmd->parsed()) return run_invariants(invariants);
    if (demo_cmd->parsed()) return run_demo(demo);
    if (fields_cmd->parsed()) return run_fields(fields);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitConfig;
}
