// Copyright 2026 The rqi Authors
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

#include "rqi/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rqi/circulant.hpp"
#include "rqi/defaults.hpp"
#include "rqi/dim2.hpp"
#include "rqi/fixed_point.hpp"
#include "rqi/json_io.hpp"
#include "rqi/sweep.hpp"

namespace rqi::cli {

namespace {

using io::json;

struct RunConfig {
  std::string spec_path;
  std::string state_path;
  std::string out_path;
  std::string csv_path;
  std::string phases;
  std::string phases_json;
  std::string spectrum;
  std::uint64_t seed = 0;
  int n = 2;
  std::optional<double> tol;
  std::int64_t steps = defaults::kMaxSteps;
  int samples = 1;
  int threads = 0;
  double theta = 0.0;
  double p1 = 0.7;
  bool dim2 = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ParseError("not a finite number: '" + s + "'");
  }
  return v;
}

Complex parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_double(re), parse_double(im)};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw ParseError("cannot write " + cfg.out_path);
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

std::vector<double> spectrum_or_default(const RunConfig& cfg) {
  return cfg.spectrum.empty() ? defaults::environment_spectrum(cfg.n)
                              : parse_real_list(cfg.spectrum);
}

ChannelSpec load_spec(const RunConfig& cfg) {
  if (cfg.spec_path.empty()) throw ParseError("--spec is required");
  return io::spec_from_json(io::read_json_file(cfg.spec_path));
}

ComplexMatrix load_state(const RunConfig& cfg, int n) {
  if (cfg.state_path.empty()) throw ParseError("--state is required");
  ComplexMatrix q = io::matrix_from_json(io::read_json_file(cfg.state_path));
  if (q.rows() != n || q.cols() != n) {
    throw ValidationError("state must be " + std::to_string(n) + "x" +
                          std::to_string(n));
  }
  std::string why;
  const double tol = cfg.tol.value_or(defaults::kDensityTol);
  if (!is_density(q, tol, &why)) {
    throw ValidationError("state is not a density matrix: " + why);
  }
  return q;
}

int cmd_apply(const RunConfig& cfg, std::ostream& out) {
  const ChannelSpec spec = load_spec(cfg);
  const ComplexMatrix q = load_state(cfg, spec.n());
  emit(cfg, io::dump(io::matrix_to_json(apply_stinespring(spec, q))), out);
  return kOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const ChannelSpec spec = load_spec(cfg);
  RankPolicy policy;
  policy.absolute_tol = cfg.tol;
  const FixedPointReport rep = analyze(spec, policy);
  json j = io::report_to_json(rep);
  if (cfg.dim2) {
    const dim2::Coefficients c = dim2::coefficients(spec);
    const dim2::UniquenessCertificate cert = dim2::uniqueness_certificate(c);
    std::optional<ComplexMatrix> fp;
    if (cert.unique) fp = dim2::closed_form_fixed_point(c);
    j["dim2"] = io::dim2_to_json(c, cert, fp);
  }
  emit(cfg, io::dump(j), out);
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw ValidationError("--samples must be >= 1");
  if (cfg.n < 1) throw ValidationError("--n must be >= 1");
  SweepConfig sc;
  sc.n = cfg.n;
  sc.samples = cfg.samples;
  sc.seed = cfg.seed;
  sc.spectrum = spectrum_or_default(cfg);
  sc.policy.absolute_tol = cfg.tol;
  sc.threads = cfg.threads;
  // Validates the spectrum once up front so a bad beta is a usage error.
  ChannelSpec::from_spectrum(ComplexMatrix::Identity(cfg.n * cfg.n, cfg.n * cfg.n),
                             sc.spectrum);

  const std::vector<SweepRow> rows = run_sweep(sc);
  const SweepSummary s = summarize(rows);
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, sweep_csv(rows));

  json hist = json::object();
  for (const auto& [rank, count] : s.rank_histogram) hist[std::to_string(rank)] = count;
  const json summary = {{"n", cfg.n},
                        {"samples", s.samples},
                        {"seed", cfg.seed},
                        {"spectrum", sc.spectrum},
                        {"unique_count", s.unique_count},
                        {"unique_fraction", s.unique_fraction},
                        {"failures", s.failures},
                        {"rank_histogram", hist},
                        {"spectral_gap",
                         {{"min", s.gap_min}, {"max", s.gap_max}, {"mean", s.gap_mean}}}};
  emit(cfg, io::dump(summary), out);
  return kOk;
}

int cmd_make(const std::string& kind, const RunConfig& cfg, std::ostream& out) {
  json j;
  if (kind == "sigmaxx") {
    j = io::spec_to_json(dim2::sigma_x_channel(cfg.theta, cfg.p1));
    j["theta"] = cfg.theta;
  } else if (kind == "haar") {
    const std::vector<double> spectrum = spectrum_or_default(cfg);
    j = io::spec_to_json(ChannelSpec::from_spectrum(
        haar_unitary(cfg.n * cfg.n, cfg.seed), spectrum));
    j["seed"] = cfg.seed;
  } else {
    std::optional<PhaseVector> pv;
    if (!cfg.phases.empty()) {
      pv = PhaseVector::from_values(cfg.n, parse_complex_list(cfg.phases));
    } else if (!cfg.phases_json.empty()) {
      pv = io::phases_from_json(io::read_json_file(cfg.phases_json));
    } else {
      pv = generic_phases(cfg.n, cfg.seed, defaults::min_margin(cfg.n));
    }
    const std::vector<double> spectrum = spectrum_or_default(cfg);
    j = io::spec_to_json(circulant_channel(*pv, spectrum));
    j["phases"] = io::phases_to_json(*pv);
    j["margin"] = pv->margin;
    if (cfg.phases.empty() && cfg.phases_json.empty()) j["seed"] = cfg.seed;
  }
  emit(cfg, io::dump(j), out);
  return kOk;
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ChannelSpec spec = load_spec(cfg);
  const ComplexMatrix q0 = load_state(cfg, spec.n());
  const double eps = cfg.tol.value_or(defaults::kIterateEps);
  const Trajectory traj = iterate(spec, q0, cfg.steps, eps);
  emit(cfg, io::trajectory_csv(traj), out);
  err << "converged=" << (traj.converged ? "true" : "false")
      << " steps=" << traj.steps << "\n";
  return kOk;
}

}  // namespace

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item)));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repeated-interaction quantum channels: construction and fixed points",
               "rqi"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
    sub->add_option("--tol", cfg.tol, "Tolerance override");
  };

  CLI::App* apply = app.add_subcommand("apply", "Apply the channel to a state");
  apply->add_option("--spec", cfg.spec_path, "Channel spec JSON")->required();
  apply->add_option("--state", cfg.state_path, "State matrix JSON")->required();
  add_common(apply);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Fixed-point analysis");
  analyze_cmd->add_option("--spec", cfg.spec_path, "Channel spec JSON")->required();
  analyze_cmd->add_flag("--dim2", cfg.dim2, "Add the closed-form n = 2 analysis");
  add_common(analyze_cmd);

  CLI::App* sweep = app.add_subcommand("sweep", "Haar genericity experiment");
  sweep->add_option("--n", cfg.n, "System dimension");
  sweep->add_option("--samples", cfg.samples, "Number of Haar samples");
  sweep->add_option("--seed", cfg.seed, "Base seed");
  sweep->add_option("--spectrum", cfg.spectrum, "Environment spectrum, comma separated");
  sweep->add_option("--threads", cfg.threads, "OpenMP threads (0: all cores)");
  sweep->add_option("--csv", cfg.csv_path, "Per-sample CSV output path");
  add_common(sweep);

  CLI::App* make = app.add_subcommand("make", "Emit a channel spec");
  make->require_subcommand(1);
  CLI::App* make_circ = make->add_subcommand("circulant", "Phase-decorated cyclic shift");
  make_circ->add_option("--n", cfg.n, "System dimension");
  make_circ->add_option("--seed", cfg.seed, "Seed for generic phases");
  make_circ->add_option("--phases", cfg.phases, "Explicit phases, e.g. i,1,1,1");
  make_circ->add_option("--phases-json", cfg.phases_json, "Phase vector JSON");
  make_circ->add_option("--spectrum", cfg.spectrum, "Environment spectrum");
  CLI::App* make_haar = make->add_subcommand("haar", "Haar-random interaction");
  make_haar->add_option("--n", cfg.n, "System dimension");
  make_haar->add_option("--seed", cfg.seed, "Seed");
  make_haar->add_option("--spectrum", cfg.spectrum, "Environment spectrum");
  CLI::App* make_sx = make->add_subcommand("sigmaxx", "exp(i theta sx (x) sx) interaction");
  make_sx->add_option("--theta", cfg.theta, "Angle");
  make_sx->add_option("--p1", cfg.p1, "First environment weight");
  for (CLI::App* sub : {make_circ, make_haar, make_sx}) {
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  }

  CLI::App* iter = app.add_subcommand("iterate", "Iterate the channel from a state");
  iter->add_option("--spec", cfg.spec_path, "Channel spec JSON")->required();
  iter->add_option("--state", cfg.state_path, "Initial state JSON")->required();
  iter->add_option("--steps", cfg.steps, "Maximum number of steps");
  add_common(iter);

  std::vector<const char*> argv{"rqi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (apply->parsed()) return cmd_apply(cfg, out);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    if (iter->parsed()) return cmd_iterate(cfg, out, err);
    for (CLI::App* sub : {make_circ, make_haar, make_sx}) {
      if (sub->parsed()) return cmd_make(sub->get_name(), cfg, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const io::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  }
  return kParseError;
}

}  // namespace rqi::cli
