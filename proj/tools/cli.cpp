// Copyright 2026 The vncorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vncorr/applications.hpp"
#include "vncorr/closedform.hpp"
#include "vncorr/correlator.hpp"
#include "vncorr/io.hpp"
#include "vncorr/witness.hpp"

namespace vncorr::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "json";
  std::string out;
  bool no_timing = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 0;
};

struct OptimizerOptions {
  int starts = 0;
  std::string method = "multistart";
  std::string joint = "simultaneous";
  int grid_resolution = 50;
  int max_iterations = 4000;

  OptimizerConfig config(const CommonOptions& common) const {
    OptimizerConfig cfg;
    cfg.starts = starts;
    cfg.seed = common.seed;
    cfg.workers = common.workers;
    cfg.grid_resolution = grid_resolution;
    cfg.max_iterations = max_iterations;
    cfg.method = method == "grid" ? OptimizerMethod::kQubitGrid : OptimizerMethod::kMultistartLocal;
    cfg.joint = joint == "alternating" ? JointStrategy::kAlternating : JointStrategy::kSimultaneous;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Write the report to PATH instead of stdout");
  cmd->add_option("--seed", common.seed, "Master RNG seed")->capture_default_str();
  cmd->add_option("--workers", common.workers, "Worker threads (0 = all cores); results do not depend on it");
  cmd->add_flag("--no-timing", common.no_timing, "Omit the wall_time_s field");
}

void add_optimizer(CLI::App* cmd, OptimizerOptions& opt) {
  cmd->add_option("--starts", opt.starts, "Random restarts (0 = 16 for d <= 3, else 48)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--method", opt.method, "Minimizer")
      ->check(CLI::IsMember({"multistart", "grid"}))
      ->capture_default_str();
  cmd->add_option("--joint", opt.joint, "Search strategy for q12")
      ->check(CLI::IsMember({"simultaneous", "alternating"}))
      ->capture_default_str();
  cmd->add_option("--grid-resolution", opt.grid_resolution, "Grid resolution for --method grid")
      ->check(CLI::Range(2, 1000));
  cmd->add_option("--max-iterations", opt.max_iterations, "Evaluation budget per simplex run")
      ->check(CLI::PositiveNumber);
}

std::optional<ProjectiveBasis> parse_basis(const std::string& spec, int d) {
  if (spec == "computational") return ProjectiveBasis::computational(d);
  if (spec == "hadamard") return ProjectiveBasis::fourier(d);
  if (spec.rfind("params:", 0) == 0) {
    std::vector<double> values;
    std::stringstream ss(spec.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("basis parameter '" + item + "' is not a number");
      }
    }
    if (values.size() != static_cast<std::size_t>(d * d)) {
      throw UsageError("basis params need d^2 = " + std::to_string(d * d) + " values, got " +
                       std::to_string(values.size()));
    }
    return basis_from_params(Eigen::Map<const RealVector>(values.data(), static_cast<Eigen::Index>(values.size())), d);
  }
  throw UsageError("unknown basis '" + spec + "' (computational, hadamard, params:<list>)");
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : j) {
      if (!s.empty()) s += " ";
      s += x.is_number_float() ? [&] {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x.get<double>());
        return std::string(buf);
      }() : (x.is_string() ? x.get<std::string>() : x.dump());
    }
    rows.emplace_back(prefix, s);
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    return;
  }
  if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    rows.emplace_back(prefix, buf);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::string text;
  for (const auto& [k, v] : rows) {
    char key[64];
    std::snprintf(key, sizeof key, "%-36s", k.c_str());
    text += key;
    text += " ";
    text += v;
    text += "\n";
  }
  return text;
}

Json report_header(const std::string& command, const CommonOptions& common) {
  Json r;
  r["tool"] = "vncorr";
  r["version"] = kVersion;
  r["command"] = command;
  r["seed"] = common.seed;
  return r;
}

Json dims_json(const BipartiteDims& d) { return Json::array({d.m, d.n}); }

// Top eigenvector of a rank-1 state.
std::optional<PureStateVec> as_pure(const DensityMatrix& rho) {
  if (purity(rho) < 1.0 - 1e-10) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho.matrix());
  const Eigen::Index top = eig.eigenvalues().size() - 1;
  Vector v = eig.eigenvectors().col(top);
  return PureStateVec(v / v.norm(), rho.dims());
}

struct CommandResult {
  Json report;
  int exit_code = kSuccess;
};

CommandResult cmd_compute(const std::string& path, std::vector<std::string> measures,
                          const CommonOptions& common, const OptimizerOptions& opt) {
  const std::string text = read_text_file(path);
  const StateDocument doc = parse_state(text);
  const DensityMatrix& rho = doc.rho;
  const OptimizerConfig cfg = opt.config(common);

  std::set<std::string> want(measures.begin(), measures.end());
  if (want.empty() || want.count("all")) want = {"q1", "q2", "q12", "delta"};

  Json r = report_header("compute", common);
  r["input_digest"] = fnv1a_hex(text);
  if (doc.label) r["label"] = *doc.label;
  r["dims"] = dims_json(rho.dims());
  r["starts"] = {{"q1", effective_starts(cfg, rho.dims(), Which::kQ1)},
                 {"q2", effective_starts(cfg, rho.dims(), Which::kQ2)},
                 {"q12", effective_starts(cfg, rho.dims(), Which::kQ12)}};
  r["purity"] = purity(rho);

  Json values;
  bool converged = true;
  long evaluations = 0;
  if (want.count("delta")) {
    const CorrelationReport rep = compute_report(rho, cfg);
    const std::map<std::string, double> all{
        {"q1", rep.q1}, {"q2", rep.q2}, {"q12", rep.q12}, {"delta", rep.delta}};
    for (const char* key : {"q1", "q2", "q12", "delta"}) {
      if (want.count(key)) values[key] = all.at(key);
    }
    converged = rep.converged;
    evaluations = rep.evaluations;
  } else {
    for (auto [key, which] : {std::pair{"q1", Which::kQ1}, {"q2", Which::kQ2}, {"q12", Which::kQ12}}) {
      if (!want.count(key)) continue;
      const MinimizeResult res = minimize_q(rho, which, cfg);
      values[key] = res.value;
      converged = converged && res.converged;
      evaluations += res.evaluations;
    }
  }
  r["values"] = values;
  r["converged"] = converged;
  r["evaluations"] = evaluations;

  if (const auto psi = as_pure(rho)) {
    const SchmidtDecomposition sd = schmidt(*psi);
    r["pure"] = true;
    r["closed_form"] = {{"pure_state", pure_state_correlation(sd.coefficients)},
                        {"schmidt_coefficients", std::vector<double>(sd.coefficients.data(),
                                                                     sd.coefficients.data() + sd.coefficients.size())}};
  } else {
    r["pure"] = false;
  }
  const SpectralBounds lb = spectral_lower_bounds(bloch_decompose(rho));
  r["spectral_lower_bounds"] = {{"q1", lb.lb_q1}, {"q2", lb.lb_q2}, {"q12", std::max(lb.lb_q1, lb.lb_q2)}};
  return {r, converged ? kSuccess : kNotConverged};
}

CommandResult cmd_family(const std::string& family, int n, double fidelity, const std::string& state_out,
                         const CommonOptions& common) {
  FamilyParams p;
  p.family = family == "werner" ? Family::kWerner : Family::kIsotropic;
  p.n = n;
  p.fidelity = fidelity;
  try {
    p.validate();
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
  const DensityMatrix rho = make_family(p);
  const std::string label = std::string(to_string(p.family)) + " n=" + std::to_string(n);
  const std::string state_text = format_state(rho, label);

  Json r = report_header("family", common);
  r["family"] = std::string(to_string(p.family));
  r["n"] = n;
  r["fidelity"] = fidelity;
  r["dims"] = dims_json(rho.dims());
  r["closed_form"] = family_correlation(p);
  r["state_digest"] = fnv1a_hex(state_text);
  if (!state_out.empty()) {
    write_text_file(state_out, state_text);
    r["state_file"] = state_out;
  } else {
    r["state"] = Json::parse(state_text);
  }
  return {r, kSuccess};
}

CommandResult cmd_witness(const std::string& path, const std::string& target, long samples,
                          const std::string& basis1, const std::string& basis2,
                          const CommonOptions& common) {
  const std::string text = read_text_file(path);
  const StateDocument doc = parse_state(text);
  const DensityMatrix& rho = doc.rho;

  WitnessConfig cfg;
  cfg.samples = samples;
  cfg.seed = common.seed;
  cfg.workers = common.workers;
  cfg.target = target == "q1"    ? WitnessTarget::kQ1
               : target == "q2"  ? WitnessTarget::kQ2
               : target == "q12" ? WitnessTarget::kQ12
                                 : WitnessTarget::kDelta;
  if (cfg.target != WitnessTarget::kQ2) cfg.basis1 = parse_basis(basis1, rho.dims().m);
  if (cfg.target != WitnessTarget::kQ1) cfg.basis2 = parse_basis(basis2, rho.dims().n);
  const WitnessEstimate est = estimate(rho, cfg);

  Json r = report_header("witness", common);
  r["input_digest"] = fnv1a_hex(text);
  if (doc.label) r["label"] = *doc.label;
  r["dims"] = dims_json(rho.dims());
  r["target"] = target;
  r["basis1"] = cfg.basis1 ? basis1 : "";
  r["basis2"] = cfg.basis2 ? basis2 : "";
  r["samples"] = est.samples;
  r["f"] = est.f;
  r["mean"] = est.mean;
  r["std_error"] = est.std_error;
  r["inferred"] = est.inferred;
  r["reference"] = est.reference;
  const double gap = est.mean - est.f * est.reference;
  r["discrepancy_sigma"] = est.std_error > 0.0 ? gap / est.std_error : 0.0;
  return {r, kSuccess};
}

CommandResult cmd_screen(const std::string& path, double threshold, const CommonOptions& common,
                         const OptimizerOptions& opt) {
  const std::string text = read_text_file(path);
  const Ensemble e = parse_ensemble(text);
  const ScreenVerdict v = locc_screen(e, opt.config(common), threshold);

  Json r = report_header("screen", common);
  r["input_digest"] = fnv1a_hex(text);
  r["dims"] = dims_json(e.dims());
  r["states"] = e.states().size();
  r["orthogonal"] = v.orthogonal;
  r["all_product"] = v.all_product;
  r["threshold"] = threshold;
  if (v.verdict != Verdict::kPreconditionFailed) r["delta"] = v.delta_value;
  r["verdict"] = std::string(to_string(v.verdict));
  switch (v.verdict) {
    case Verdict::kNotLocallyDistinguishable:
      r["note"] = "delta exceeds the threshold: the states cannot be distinguished by LOCC";
      break;
    case Verdict::kConditionSatisfied:
      r["note"] = "delta is within the threshold: the necessary condition holds; this alone does not decide distinguishability";
      break;
    case Verdict::kPreconditionFailed:
      r["note"] = "the screen needs pairwise orthogonal product states";
      break;
  }
  return {r, kSuccess};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurement-induced quantum correlations of bipartite states", "vncorr"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  OptimizerOptions opt;

  std::string input;
  std::vector<std::string> measures;
  auto* compute = app.add_subcommand("compute", "Q1, Q2, Q12 and delta of a state file");
  compute->add_option("input", input, "State file")->required();
  compute->add_option("--measure", measures, "Quantities to compute")
      ->delimiter(',')
      ->check(CLI::IsMember({"q1", "q2", "q12", "delta", "all"}));
  add_common(compute, common);
  add_optimizer(compute, opt);

  std::string family = "isotropic";
  int family_n = 2;
  double fidelity = 1.0;
  std::string state_out;
  auto* fam = app.add_subcommand("family", "Write an isotropic or Werner state and its closed-form correlation");
  fam->add_option("--family", family)->check(CLI::IsMember({"isotropic", "werner"}))->required();
  fam->add_option("--n", family_n, "Local dimension")->required();
  fam->add_option("--fidelity", fidelity, "f1 (isotropic) or f2 (Werner)")->required();
  fam->add_option("--state-out", state_out, "Write the state file to PATH (embedded in the report otherwise)");
  add_common(fam, common);

  std::string target = "q12";
  long samples = 10000;
  std::string basis1 = "computational";
  std::string basis2 = "computational";
  auto* wit = app.add_subcommand("witness", "Monte Carlo estimate of the random-unitary witness");
  wit->add_option("input", input, "State file")->required();
  wit->add_option("--target", target)->check(CLI::IsMember({"q1", "q2", "q12", "delta"}))->capture_default_str();
  wit->add_option("--samples", samples, "Haar samples")->check(CLI::PositiveNumber)->capture_default_str();
  wit->add_option("--basis1", basis1, "computational | hadamard | params:<d^2 values>")->capture_default_str();
  wit->add_option("--basis2", basis2, "computational | hadamard | params:<d^2 values>")->capture_default_str();
  add_common(wit, common);

  double threshold = kScreenThreshold;
  auto* scr = app.add_subcommand("screen", "Joint-correlation screen of a two-qubit ensemble");
  scr->add_option("input", input, "Ensemble file")->required();
  scr->add_option("--threshold", threshold)->check(CLI::PositiveNumber)->capture_default_str();
  add_common(scr, common);
  add_optimizer(scr, opt);

  auto* blo = app.add_subcommand("bloch", "Export the coefficient matrix C of a state file");
  blo->add_option("input", input, "State file")->required();
  blo->add_option("--out", common.out, "Write to PATH instead of stdout");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    CommandResult result;
    if (*blo) {
      const std::string text = format_bloch(bloch_decompose(parse_state(read_text_file(input)).rho));
      if (common.out.empty()) {
        out << text;
      } else {
        write_text_file(common.out, text);
      }
      return kSuccess;
    }
    if (*compute) result = cmd_compute(input, measures, common, opt);
    if (*fam) result = cmd_family(family, family_n, fidelity, state_out, common);
    if (*wit) result = cmd_witness(input, target, samples, basis1, basis2, common);
    if (*scr) result = cmd_screen(input, threshold, common, opt);

    if (!common.no_timing) {
      result.report["wall_time_s"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    const std::string text = render(result.report, common.format);
    if (common.out.empty()) {
      out << text;
    } else {
      write_text_file(common.out, text);
    }
    if (result.exit_code == kNotConverged) err << "warning: optimizer did not converge\n";
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kValidationError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace vncorr::cli
