// Copyright 2026 The gaussrx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gaussrx/ecgm.h"
#include "gaussrx/estimator.h"
#include "gaussrx/fisher.h"
#include "gaussrx/optimizer.h"
#include "gaussrx/probes.h"
#include "json.hpp"

namespace gaussrx::cli {

namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  if (steps < 2) return {lo};
  std::vector<double> out(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
  }
  return out;
}

// Every CSV starts with '#' and the resolved configuration as one JSON line.
void csv_header(std::ostream& os, const json& config, const std::string& columns) {
  os << '#' << config.dump() << '\n' << columns << '\n';
}

json params_json(const MeasurementParams& p) {
  return {{"r1", p.r1},          {"r2", p.r2},     {"zeta_mag", p.zeta_mag},
          {"zeta_arg", p.zeta_arg}, {"phi1", p.phi1}, {"phi2", p.phi2}};
}

struct GfiArgs {
  double alpha = 1.0, n0 = 0.0, energy = 0.0, v11_sq = 0.5;
  std::size_t n_modes = 2;
};

int cmd_gfi(const GfiArgs& a, std::ostream& os) {
  const json config = {{"command", "gfi"},      {"alpha", a.alpha},     {"n0", a.n0},
                       {"energy", a.energy},    {"n_modes", a.n_modes}, {"v11_sq", a.v11_sq}};
  const ProbeSpec spec = ProbeSpec::uniform(a.n_modes, a.alpha, a.n0);
  const std::vector<double> v = balanced_direction(a.n_modes);
  const std::pair<const char*, double> rows[] = {
      {"qfi", qfi_linear_function(spec, v)},
      {"gfi", gfi_closed_form(a.alpha, a.n0, a.energy)},
      {"heterodyne", gfi_closed_form(a.alpha, a.n0, 0.0)},
      {"separable_balanced", separable_fi_balanced(a.alpha, a.n0, a.energy, a.n_modes)},
      {"separable_unbalanced", separable_fi_unbalanced(a.alpha, a.n0, a.energy, a.v11_sq)},
  };
  os << '#' << config.dump() << '\n';
  char line[128];
  std::snprintf(line, sizeof line, "%-22s %s\n", "quantity", "value");
  os << line;
  for (const auto& [name, value] : rows) {
    std::snprintf(line, sizeof line, "%-22s %.10f\n", name, value);
    os << line;
  }
  return kExitOk;
}

struct SweepArgs {
  std::string mode = "balanced";
  std::vector<double> params;
  std::vector<double> energies = {0, 0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100, 1000};
  double alpha = 1.0, n0 = 0.0;
};

int cmd_sweep_eg(SweepArgs a, std::ostream& os) {
  if (a.params.empty()) {
    a.params = a.mode == "balanced" ? std::vector<double>{2, 3, 4, 5, 6, 7, 8}
                                    : std::vector<double>{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  }
  const json config = {{"command", "sweep-eg"}, {"mode", a.mode},         {"param_grid", a.params},
                       {"energy_grid", a.energies}, {"alpha", a.alpha}, {"n0", a.n0}};
  csv_header(os, config, "E,param,eg");
  for (double p : a.params) {
    SeparableMode mode = Unbalanced{p};
    if (a.mode == "balanced") {
      if (p < 1 || p != std::floor(p)) throw std::invalid_argument("balanced mode counts must be positive integers");
      mode = Balanced{static_cast<std::size_t>(p)};
    }
    for (double e : a.energies) {
      os << num(e) << ',' << num(p) << ',' << num(entanglement_gain(a.alpha, a.n0, e, mode)) << '\n';
    }
  }
  return kExitOk;
}

struct FirArgs {
  std::size_t theta_steps = 21;
  double energy = 1e8, alpha = 1.0, n0 = 0.0;
  double theta_min = -std::numbers::pi, theta_max = std::numbers::pi;
};

int cmd_fir_map(const FirArgs& a, std::ostream& os) {
  const json config = {{"command", "fir-map"}, {"theta_steps", a.theta_steps},
                       {"energy", a.energy},   {"alpha", a.alpha},
                       {"n0", a.n0},           {"theta_min", a.theta_min},
                       {"theta_max", a.theta_max}};
  csv_header(os, config, "theta1,theta2,fir");
  const auto grid = linspace(a.theta_min, a.theta_max, a.theta_steps);
  for (double t1 : grid) {
    for (double t2 : grid) {
      const double th[] = {t1, t2};
      os << num(t1) << ',' << num(t2) << ',' << num(fir(th, a.alpha, a.n0, a.energy)) << '\n';
    }
  }
  return kExitOk;
}

struct NonisoArgs {
  double n1_max = 2.0, n2_max = 2.0, alpha = 1.0, energy = 4.0;
  std::size_t steps = 21;
};

int cmd_noniso_map(const NonisoArgs& a, std::ostream& os) {
  const json config = {{"command", "noniso-map"}, {"n1_max", a.n1_max}, {"n2_max", a.n2_max},
                       {"steps", a.steps},        {"alpha", a.alpha},   {"energy", a.energy}};
  const auto n1 = linspace(0.0, a.n1_max, a.steps);
  const auto n2 = linspace(0.0, a.n2_max, a.steps);
  const Eigen::MatrixXd values = noniso_sweep(n1, n2, a.alpha, a.energy);
  csv_header(os, config, "n1,n2,f_tilde_11");
  for (std::size_t i = 0; i < n1.size(); ++i) {
    for (std::size_t j = 0; j < n2.size(); ++j) {
      os << num(n1[i]) << ',' << num(n2[j]) << ','
         << num(values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) << '\n';
    }
  }
  return kExitOk;
}

struct McArgs {
  std::size_t m = 100000, reps = 200;
  std::uint64_t seed = 0;
  std::string receiver = "heterodyne";
  double energy = 4.0, alpha = 1.0, n0 = 0.0, theta1 = 0.0, theta2 = 0.0;
  bool full_vector = false;
};

int cmd_mc_crb(const McArgs& a, std::ostream& os) {
  const ProbeSpec spec = ProbeSpec::uniform(2, a.alpha, a.n0);
  const double thetas[] = {a.theta1, a.theta2};
  const std::vector<double> v = phase_difference_direction();
  std::optional<Ecgm> m;
  if (a.receiver == "heterodyne") {
    m = heterodyne(2);
  } else if (a.receiver == "optimal") {
    m = ecgm_from_params(counter_rotate(optimal_isothermal_params(a.energy), thetas));
  } else {
    m = Ecgm(optimize_separable(spec.alphas, spec.thermal_occupations, thetas, a.energy, v).seed);
  }
  CrbOptions options;
  options.full_vector = a.full_vector;
  const McReport r = crb_experiment(spec, thetas, *m, v, a.m, a.reps, a.seed, options);
  const json config = {{"command", "mc-crb"}, {"m", a.m},           {"reps", a.reps},
                       {"seed", a.seed},      {"receiver", a.receiver}, {"energy", a.energy},
                       {"alpha", a.alpha},    {"n0", a.n0},         {"theta1", a.theta1},
                       {"theta2", a.theta2},  {"full_vector", a.full_vector}};
  const json report = {{"config", config},
                       {"m_samples", r.m_samples},
                       {"repetitions", r.repetitions},
                       {"empirical_variance", r.empirical_variance},
                       {"crb", r.crb},
                       {"ratio", r.ratio},
                       {"seed", r.seed},
                       {"truth", r.truth},
                       {"mean_estimate", r.mean_estimate},
                       {"mean_standard_error", r.mean_standard_error},
                       {"f_tilde_11", r.f_tilde_11}};
  os << report.dump(2) << '\n';
  return kExitOk;
}

struct OptimizeArgs {
  double alpha = 1.0, n0 = 0.0, energy = 4.0, theta1 = 0.0, theta2 = 0.0;
  std::optional<double> n1, n2;
  std::string strategy = "two-mode";
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& os, std::ostream& err) {
  const double n1 = a.n1.value_or(a.n0);
  const double n2 = a.n2.value_or(a.n0);
  const double thetas[] = {a.theta1, a.theta2};
  const json config = {{"command", "optimize"}, {"alpha", a.alpha},   {"n0", a.n0},
                       {"n1", n1},              {"n2", n2},           {"energy", a.energy},
                       {"theta1", a.theta1},    {"theta2", a.theta2}, {"strategy", a.strategy}};
  json out = {{"config", config}};
  OptimizationResult r;
  if (a.strategy == "two-mode") {
    r = optimize_two_mode(a.alpha, {n1, n2}, thetas, a.energy);
    out["best_params"] = params_json(r.best_params);
    out["energy_split"] = r.energy_split;
  } else {
    const double alphas[] = {a.alpha, a.alpha};
    const double n0s[] = {n1, n2};
    r = optimize_separable(alphas, n0s, thetas, a.energy, phase_difference_direction());
    out["squeezings"] = r.squeezings;
    out["energy_split"] = r.energy_split;
  }
  out["best_value"] = r.best_value;
  out["objective_evals"] = r.objective_evals;
  out["converged"] = r.converged;
  out["qfi"] = qfi_phase_difference(ProbeSpec{{a.alpha, a.alpha}, {n1, n2}});
  os << out.dump(2) << '\n';
  if (!r.converged) {
    err << "optimize: search did not converge after " << r.objective_evals << " evaluations\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian receiver design for distributed phase sensing", "gaussrx"};
  app.require_subcommand(1);
  std::string out_path;

  GfiArgs gfi;
  auto* gfi_cmd = app.add_subcommand("gfi", "Closed-form Fisher informations for an isothermal probe");
  gfi_cmd->add_option("--alpha", gfi.alpha, "Probe amplitude")->capture_default_str();
  gfi_cmd->add_option("--n0", gfi.n0, "Thermal occupation")->capture_default_str()->check(CLI::NonNegativeNumber);
  gfi_cmd->add_option("--energy", gfi.energy, "Measurement energy E")->capture_default_str()->check(CLI::NonNegativeNumber);
  gfi_cmd->add_option("--n-modes", gfi.n_modes, "Mode count for the balanced separable value")->capture_default_str()->check(CLI::PositiveNumber);
  gfi_cmd->add_option("--v11-sq", gfi.v11_sq, "(v1)_1^2 for the unbalanced separable value")->capture_default_str()->check(CLI::Range(0.0, 1.0));

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-eg", "Entanglement gain versus energy (CSV)");
  sweep_cmd->add_option("--mode", sweep.mode, "balanced or unbalanced")->capture_default_str()->check(CLI::IsMember({"balanced", "unbalanced"}));
  sweep_cmd->add_option("--param-grid", sweep.params, "Mode counts (balanced) or (v1)_1^2 values (unbalanced), comma separated")->delimiter(',');
  sweep_cmd->add_option("--energy-grid", sweep.energies, "Energies, comma separated")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.alpha)->capture_default_str();
  sweep_cmd->add_option("--n0", sweep.n0)->capture_default_str()->check(CLI::NonNegativeNumber);

  FirArgs fir_args;
  auto* fir_cmd = app.add_subcommand("fir-map", "Fisher-information ratio over true phases (CSV)");
  fir_cmd->add_option("--theta-steps", fir_args.theta_steps, "Grid points per axis")->capture_default_str()->check(CLI::PositiveNumber);
  fir_cmd->add_option("--energy", fir_args.energy)->capture_default_str()->check(CLI::NonNegativeNumber);
  fir_cmd->add_option("--alpha", fir_args.alpha)->capture_default_str();
  fir_cmd->add_option("--n0", fir_args.n0)->capture_default_str()->check(CLI::NonNegativeNumber);
  fir_cmd->add_option("--theta-min", fir_args.theta_min)->capture_default_str();
  fir_cmd->add_option("--theta-max", fir_args.theta_max)->capture_default_str();

  NonisoArgs noniso;
  auto* noniso_cmd = app.add_subcommand("noniso-map", "Optimized Fisher information over (N1, N2) (CSV)");
  noniso_cmd->add_option("--n1-max", noniso.n1_max)->capture_default_str()->check(CLI::NonNegativeNumber);
  noniso_cmd->add_option("--n2-max", noniso.n2_max)->capture_default_str()->check(CLI::NonNegativeNumber);
  noniso_cmd->add_option("--steps", noniso.steps)->capture_default_str()->check(CLI::PositiveNumber);
  noniso_cmd->add_option("--alpha", noniso.alpha)->capture_default_str();
  noniso_cmd->add_option("--energy", noniso.energy)->capture_default_str()->check(CLI::NonNegativeNumber);

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc-crb", "Monte-Carlo maximum-likelihood check of the Cramer-Rao bound (JSON)");
  mc_cmd->add_option("--m", mc.m, "Outcomes per experiment")->capture_default_str();
  mc_cmd->add_option("--reps", mc.reps, "Repetitions")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "Random seed")->required();
  mc_cmd->add_option("--receiver", mc.receiver)->capture_default_str()->check(CLI::IsMember({"heterodyne", "optimal", "separable"}));
  mc_cmd->add_option("--energy", mc.energy)->capture_default_str()->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--alpha", mc.alpha)->capture_default_str();
  mc_cmd->add_option("--n0", mc.n0)->capture_default_str()->check(CLI::NonNegativeNumber);
  mc_cmd->add_option("--theta1", mc.theta1)->capture_default_str();
  mc_cmd->add_option("--theta2", mc.theta2)->capture_default_str();
  mc_cmd->add_flag("--full-vector", mc.full_vector, "Maximize the likelihood over all phases");

  OptimizeArgs opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Optimize the measurement seed (JSON)");
  opt_cmd->add_option("--alpha", opt.alpha)->capture_default_str();
  opt_cmd->add_option("--n0", opt.n0, "Occupation used for modes without --n1/--n2")->capture_default_str()->check(CLI::NonNegativeNumber);
  opt_cmd->add_option("--n1", opt.n1)->check(CLI::NonNegativeNumber);
  opt_cmd->add_option("--n2", opt.n2)->check(CLI::NonNegativeNumber);
  opt_cmd->add_option("--energy", opt.energy)->capture_default_str()->check(CLI::NonNegativeNumber);
  opt_cmd->add_option("--theta1", opt.theta1)->capture_default_str();
  opt_cmd->add_option("--theta2", opt.theta2)->capture_default_str();
  opt_cmd->add_option("--strategy", opt.strategy)->capture_default_str()->check(CLI::IsMember({"two-mode", "separable"}));

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", out_path, "Write results to this file instead of stdout");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (gfi_cmd->parsed()) code = cmd_gfi(gfi, buffer);
    else if (sweep_cmd->parsed()) code = cmd_sweep_eg(sweep, buffer);
    else if (fir_cmd->parsed()) code = cmd_fir_map(fir_args, buffer);
    else if (noniso_cmd->parsed()) code = cmd_noniso_map(noniso, buffer);
    else if (mc_cmd->parsed()) code = cmd_mc_crb(mc, buffer);
    else if (opt_cmd->parsed()) code = cmd_optimize(opt, buffer, err);
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace gaussrx::cli
