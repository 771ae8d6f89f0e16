// Command-line frontend: evaluates the closed-form curves, runs the seeded
// Monte Carlo experiments, decodes single instances, and writes CSV/JSON
// artifacts. Every stochastic command requires an explicit --seed, and rerun
// outputs are byte-identical for any --threads value.
//
// Exit codes: 0 success, 1 runtime error, 2 usage error, 3 a closed-form
// bound was violated by the experiment (distinct so CI can tell a disproved
// inequality from a crash).

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latt/bounds.hpp"
#include "latt/decoder.hpp"
#include "latt/experiments.hpp"
#include "latt/io.hpp"
#include "latt/lattice.hpp"
#include "latt/special.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBoundViolation = 3;

struct GlobalOptions {
  std::size_t threads = 0;  // 0 = all cores
};

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

std::string bool_cell(bool v) { return v ? "true" : "false"; }

void emit(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
  } else {
    latt::write_text_file(path, content);
  }
}

void emit_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  if (path == "-") {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out << ',';
      out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << row[i];
      }
      out << '\n';
    }
    std::cout << out.str();
  } else {
    latt::write_csv(path, header, rows);
  }
}

// ---------------------------------------------------------------------------
// bound-curves

struct BoundCurvesArgs {
  std::vector<std::size_t> n_list{1, 4, 16, 64, 256};
  double theta_min = 0.1;
  double theta_max = 3.0;
  std::size_t steps = 300;
  std::string format = "csv";
  std::string out = "-";
};

int run_bound_curves_cmd(const BoundCurvesArgs& a) {
  if (a.steps < 2) throw std::invalid_argument("bound-curves: --steps must be >= 2");
  if (!(a.theta_min > 0.0) || !(a.theta_max > a.theta_min)) {
    throw std::invalid_argument("bound-curves: need 0 < theta-min < theta-max");
  }
  std::vector<double> grid(a.steps);
  const double step = (a.theta_max - a.theta_min) / static_cast<double>(a.steps - 1);
  for (std::size_t k = 0; k < a.steps; ++k) {
    grid[k] = a.theta_min + static_cast<double>(k) * step;
  }
  const auto results = latt::run_bound_curves(a.n_list, grid);
  if (a.format == "json") {
    emit(a.out, latt::results_to_json(results));
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(results.size());
    for (const auto& r : results) {
      rows.push_back({latt::format_sig12(r.param_value), std::to_string(r.n),
                      latt::format_sig12(r.estimate)});
    }
    emit_csv(a.out, {"theta", "n", "bound"}, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// tail-prob

struct TailArgs {
  std::vector<std::size_t> n_list{1, 2, 4, 8, 16};
  std::vector<double> theta_list{1.5, 0.5};
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
  double N0 = 1.0;
  double kappa = 2.0;
  std::size_t L = 2;
  int tau = 0;
  std::string dx_spec = "fixed";
  std::string format = "csv";
  std::string out = "-";
};

latt::DeltaXSpec parse_dx_spec(const std::string& s) {
  if (s == "fixed") return latt::DeltaXSpec::kFixedAdjacent;
  if (s == "random") return latt::DeltaXSpec::kUniformCodewordPair;
  throw std::invalid_argument("--dx-spec must be 'fixed' or 'random'");
}

int run_tail_cmd(const TailArgs& a, const GlobalOptions& g) {
  latt::ExperimentConfig cfg;
  cfg.master_seed = a.seed;
  cfg.trials = a.trials;
  cfg.n_list = a.n_list;
  cfg.theta_list = a.theta_list;
  cfg.noise_N0 = a.N0;
  cfg.kappa = a.kappa;
  cfg.L = a.L;
  cfg.tau = a.tau;
  cfg.delta_x_spec = parse_dx_spec(a.dx_spec);
  cfg.threads = resolve_threads(g.threads);
  const auto results = latt::run_tail_probability(cfg);

  bool all_hold = true;
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    const bool holds = latt::tail_bound_holds(
        r.estimate, {r.param_value, r.n}, r.std_err);
    all_hold = all_hold && holds;
    rows.push_back({std::to_string(r.n), latt::format_sig12(r.param_value),
                    latt::format_sig12(r.estimate), latt::format_sig12(r.std_err),
                    latt::format_sig12(r.bound_value), bool_cell(holds)});
  }
  if (a.format == "json") {
    emit(a.out, latt::results_to_json(results));
  } else {
    emit_csv(a.out, {"n", "theta", "empirical", "std_err", "bound", "holds"}, rows);
  }
  if (!all_hold) {
    std::cerr << "error: bound-violation: tail probability exceeded its bound "
                 "plus 3 standard errors; see output rows with holds=false\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// concentration

struct ConcentrationArgs {
  std::vector<std::size_t> n_list{4, 16, 64, 256};
  double epsilon = 0.1;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  double N0 = 1.0;
  double kappa = 2.0;
  std::size_t L = 2;
  int tau = 0;
  std::string dx_spec = "fixed";
  std::string format = "csv";
  std::string out = "-";
};

int run_concentration_cmd(const ConcentrationArgs& a, const GlobalOptions& g) {
  latt::ExperimentConfig cfg;
  cfg.master_seed = a.seed;
  cfg.trials = a.trials;
  cfg.n_list = a.n_list;
  cfg.theta_list = {1.0 + a.epsilon};
  cfg.noise_N0 = a.N0;
  cfg.kappa = a.kappa;
  cfg.L = a.L;
  cfg.tau = a.tau;
  cfg.delta_x_spec = parse_dx_spec(a.dx_spec);
  cfg.threads = resolve_threads(g.threads);
  const auto results = latt::run_concentration(cfg, a.epsilon);

  bool all_hold = true;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i + 3 <= results.size(); i += 3) {
    const auto& prob = results[i];
    const auto& mean = results[i + 1];
    const auto& var = results[i + 2];
    const bool holds = prob.estimate <= prob.bound_value + 3.0 * prob.std_err;
    all_hold = all_hold && holds;
    rows.push_back({std::to_string(prob.n), latt::format_sig12(a.epsilon),
                    latt::format_sig12(prob.estimate),
                    latt::format_sig12(prob.std_err),
                    latt::format_sig12(mean.estimate),
                    latt::format_sig12(var.estimate),
                    latt::format_sig12(prob.bound_value),
                    latt::format_sig12(var.bound_value), bool_cell(holds)});
  }
  if (a.format == "json") {
    emit(a.out, latt::results_to_json(results));
  } else {
    emit_csv(a.out,
             {"n", "epsilon", "prob_outside", "prob_std_err", "mean", "variance",
              "bound", "var_expected", "holds"},
             rows);
  }
  if (!all_hold) {
    std::cerr << "error: bound-violation: concentration probability exceeded the "
                 "two-sided bound plus 3 standard errors\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sd-complexity

struct SdArgs {
  std::vector<std::size_t> n_list{4, 6, 8};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double N0 = 1.0;
  double kappa = 2.0;
  std::size_t L = 2;
  int tau = 0;
  double alpha = 2.0;
  double c_sq = 1.0;
  std::string format = "csv";
  std::string out = "-";
};

int run_sd_cmd(const SdArgs& a, const GlobalOptions& g) {
  latt::ExperimentConfig cfg;
  cfg.master_seed = a.seed;
  cfg.trials = a.trials;
  cfg.n_list = a.n_list;
  cfg.theta_list = {};
  cfg.noise_N0 = a.N0;
  cfg.kappa = a.kappa;
  cfg.L = a.L;
  cfg.tau = a.tau;
  cfg.alpha = a.alpha;
  cfg.threads = resolve_threads(g.threads);
  const auto results = latt::run_sd_complexity(cfg);

  bool ordered = true;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i + 2 <= results.size(); i += 2) {
    const auto& csd = results[i];
    const auto& nsc = results[i + 1];
    const auto m = static_cast<std::size_t>(static_cast<double>(csd.n) / a.kappa);
    ordered = ordered && csd.estimate >= nsc.estimate;
    const auto rbound = latt::csd_lower_bound_radius(
        {csd.n, a.kappa, a.alpha, a.N0, a.L,
         latt::codebook_dmax_sq(latt::Codebook::make(a.tau, a.L, m))});
    const double pam_bound = latt::csd_lower_bound_pam(m, a.L, a.c_sq, a.N0);
    rows.push_back({std::to_string(csd.n), std::to_string(m), std::to_string(a.L),
                    latt::format_sig12(a.alpha), latt::format_sig12(a.N0),
                    std::to_string(csd.trials), latt::format_sig12(csd.estimate),
                    latt::format_sig12(csd.std_err), latt::format_sig12(nsc.estimate),
                    latt::format_sig12(nsc.std_err),
                    latt::format_sig12(rbound.exponent_base_L),
                    latt::format_sig12(std::exp(rbound.log_bound)),
                    latt::format_sig12(rbound.log_bound),
                    latt::format_sig12(rbound.log_bound_complex),
                    latt::format_sig12(pam_bound)});
  }
  if (a.format == "json") {
    emit(a.out, latt::results_to_json(results));
  } else {
    emit_csv(a.out,
             {"n", "m", "L", "alpha", "N0", "trials", "mean_csd", "se_csd",
              "mean_nsc", "se_nsc", "radius_exponent_base_L", "radius_bound",
              "radius_log_bound", "radius_log_bound_complex", "pam_log_bound"},
             rows);
  }
  if (!ordered) {
    std::cerr << "error: bound-violation: mean C_SD fell below mean N_SC\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// pep

struct PepArgs {
  std::vector<std::size_t> n_list{4, 16, 64};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  double N0 = 1.0;
  double kappa = 2.0;
  std::uint64_t dx2 = 2;
  double theta = 1.5;
  std::string format = "csv";
  std::string out = "-";
};

// Decomposes ||dx||^2 into unit steps: pairs (1+i) contribute 2, a final
// lone 1 contributes 1.
latt::GaussIntVector build_delta_x(std::uint64_t dx2) {
  if (dx2 == 0) throw std::invalid_argument("pep: --dx2 must be >= 1");
  latt::GaussIntVector dx;
  std::uint64_t remaining = dx2;
  while (remaining >= 2) {
    dx.push_back({1, 1});
    remaining -= 2;
  }
  if (remaining == 1) dx.push_back({1, 0});
  return dx;
}

int run_pep_cmd(const PepArgs& a, const GlobalOptions& g) {
  latt::ExperimentConfig cfg;
  cfg.master_seed = a.seed;
  cfg.trials = a.trials;
  cfg.n_list = a.n_list;
  cfg.theta_list = {a.theta};
  cfg.noise_N0 = a.N0;
  cfg.kappa = a.kappa;
  cfg.threads = resolve_threads(g.threads);
  const auto results = latt::run_pep(cfg, build_delta_x(a.dx2));

  bool all_hold = true;
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i + 2 <= results.size(); i += 2) {
    const auto& mean = results[i];
    const auto& qtail = results[i + 1];
    const bool holds = qtail.estimate <= qtail.bound_value + 3.0 * qtail.std_err;
    all_hold = all_hold && holds;
    rows.push_back({std::to_string(mean.n), std::to_string(mean.trials),
                    latt::format_sig12(mean.estimate),
                    latt::format_sig12(mean.std_err),
                    latt::format_sig12(mean.bound_value),
                    latt::format_sig12(std::fabs(mean.estimate - mean.bound_value)),
                    latt::format_sig12(qtail.param_value),
                    latt::format_sig12(qtail.estimate),
                    latt::format_sig12(qtail.std_err),
                    latt::format_sig12(qtail.bound_value), bool_cell(holds)});
  }
  if (a.format == "json") {
    emit(a.out, latt::results_to_json(results));
  } else {
    emit_csv(a.out,
             {"n", "trials", "estimate", "std_err", "asymptotic", "abs_gap",
              "theta", "qtail_freq", "qtail_std_err", "qtail_bound", "qtail_holds"},
             rows);
  }
  if (!all_hold) {
    std::cerr << "error: bound-violation: tail-event frequency exceeded its "
                 "bound plus 3 standard errors\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// inflation

struct InflationArgs {
  std::vector<std::size_t> m_list{2, 4, 8, 16, 32, 64};
  double Ex = 1.0;
  double alpha_prime = 1.0;
  double R = 1.0;
  double alpha = 2.0;
  double kappa = 2.0;
  double N0 = 1.0;
  std::size_t L = 2;
  int tau = 0;
  std::string format = "csv";
  std::string out = "-";
};

int run_inflation_cmd(const InflationArgs& a) {
  latt::SpherePackingInputs sp;
  sp.Ex = a.Ex;
  sp.alpha_prime = a.alpha_prime;
  sp.R = a.R;
  sp.alpha = a.alpha;
  sp.kappa = a.kappa;
  sp.N0 = a.N0;
  const auto cb = latt::Codebook::make(a.tau, a.L, 1);
  const auto report = latt::run_codebook_inflation(a.m_list, sp, cb);

  if (a.format == "json") {
    nlohmann::json j;
    j["anchor_coefficient"] = report.anchor_coefficient;
    j["codebook_inflatable"] = report.codebook_inflatable;
    j["sp_bound_inflatable"] = report.sp_bound_inflatable;
    j["undetermined"] = report.undetermined;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
      j["rows"].push_back({{"m", row.m},
                           {"rho", row.rho},
                           {"dmin_codebook", row.dmin_codebook},
                           {"dmin_sp_bound", row.dmin_sp_bound},
                           {"g_of_rho", row.g_of_rho}});
    }
    emit(a.out, j.dump(2) + "\n");
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : report.rows) {
      rows.push_back({std::to_string(row.m), latt::format_sig12(row.rho),
                      latt::format_sig12(row.dmin_codebook),
                      latt::format_sig12(row.dmin_sp_bound),
                      latt::format_sig12(row.g_of_rho),
                      bool_cell(report.codebook_inflatable),
                      bool_cell(report.sp_bound_inflatable),
                      bool_cell(report.undetermined)});
    }
    emit_csv(a.out,
             {"m", "rho", "dmin_codebook", "dmin_sp_bound", "g_of_rho",
              "codebook_inflatable", "sp_bound_inflatable", "undetermined"},
             rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// decode

struct DecodeArgs {
  std::size_t n = 6;
  std::size_t m = 3;
  std::size_t L = 2;
  int tau = 0;
  double N0 = 0.1;
  double alpha = 2.0;
  double rho2 = 0.0;  // 0 = derive from alpha
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out = "-";
};

int run_decode_cmd(const DecodeArgs& a) {
  if (a.format != "json") {
    throw std::invalid_argument("decode supports --format json only");
  }
  const latt::LatticeParams params(a.n, a.m);
  const auto cb = latt::Codebook::make(a.tau, a.L, a.m);
  latt::SeededRng rng(a.seed,
                      latt::detail::stream_id(latt::detail::kDomainDecode, 0, 0));
  const latt::ComplexMatrix G = latt::sample_generator(rng, params);
  const latt::GaussIntVector x_hat = latt::sample_codeword(rng, cb);
  const latt::ComplexVector w = latt::sample_complex_gaussian(rng, a.n, a.N0);
  latt::ComplexVector y = G.multiply(latt::to_complex(x_hat));
  for (std::size_t i = 0; i < a.n; ++i) y[i] += w[i];

  const auto constraint = a.rho2 > 0.0
                              ? latt::SphereConstraint::from_rho_sq(a.rho2)
                              : latt::SphereConstraint::from_alpha(a.alpha, a.n, a.N0);
  const auto trace = latt::sphere_decode({G, y, cb, constraint});

  nlohmann::json j;
  j["n"] = a.n;
  j["m"] = a.m;
  j["L"] = a.L;
  j["tau"] = a.tau;
  j["N0"] = a.N0;
  j["rho_sq"] = constraint.rho_sq;
  j["seed"] = a.seed;
  j["found_in_sphere"] = trace.found_in_sphere;
  j["argmin"] = nlohmann::json::array();
  for (const auto& gi : trace.argmin) {
    j["argmin"].push_back({{"re", gi.re}, {"im", gi.im}});
  }
  j["min_metric"] = trace.found_in_sphere ? trace.min_metric : -1.0;
  j["level_counts"] = trace.level_counts;
  j["total_visits"] = trace.total_visits;
  j["leaf_count"] = trace.leaf_count;
  j["true_codeword"] = nlohmann::json::array();
  for (const auto& gi : x_hat) {
    j["true_codeword"].push_back({{"re", gi.re}, {"im", gi.im}});
  }
  emit(a.out, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "latt: distance concentration in random complex-Gaussian lattices.\n"
      "Closed-form tail curves, seeded Monte Carlo tail/concentration/PEP\n"
      "experiments, a counting sphere decoder, and complexity lower bounds.\n"
      "All stochastic commands are reproducible: identical seeds give\n"
      "byte-identical outputs for any --threads value."};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default(true);
  app.set_config("--config", "",
                 "Key=value file mirroring the flag names (sections or dotted "
                 "keys per subcommand); command-line flags take precedence");

  GlobalOptions global;
  app.add_option("--threads", global.threads,
                 "Worker threads (0 = all cores); results do not depend on it");

  // bound-curves -------------------------------------------------------------
  BoundCurvesArgs bc;
  auto* cmd_bc = app.add_subcommand(
      "bound-curves", "Tabulate (theta e^{1-theta})^n over a theta grid");
  cmd_bc->add_option("--n", bc.n_list, "Dimensions n")->delimiter(',');
  cmd_bc->add_option("--theta-min", bc.theta_min, "Grid start (> 0)");
  cmd_bc->add_option("--theta-max", bc.theta_max, "Grid end");
  cmd_bc->add_option("--steps", bc.steps, "Grid points (endpoints included)");
  cmd_bc->add_option("--format", bc.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_bc->add_option("--out", bc.out, "Output path ('-' = stdout)");

  // tail-prob ----------------------------------------------------------------
  TailArgs tail;
  auto* cmd_tail = app.add_subcommand(
      "tail-prob",
      "Monte Carlo tail frequency of the normalized distance ratio "
      "||G(x_hat - x) + w||^2 / (||x_hat - x||^2 + n N0) against its "
      "closed-form bound (upper tail for theta > 1, lower for theta < 1)");
  cmd_tail->add_option("--n", tail.n_list, "Dimensions n")->delimiter(',');
  cmd_tail->add_option("--theta", tail.theta_list, "Thresholds")->delimiter(',');
  cmd_tail->add_option("--trials", tail.trials, "Trials per grid point");
  cmd_tail->add_option("--seed", tail.seed, "Master seed")->required();
  cmd_tail->add_option("--N0", tail.N0, "Per-entry complex noise variance");
  cmd_tail->add_option("--kappa", tail.kappa,
                       "Aspect ratio n/m (m = max(1, floor(n/kappa)))");
  cmd_tail->add_option("--L", tail.L, "Symbols per axis");
  cmd_tail->add_option("--tau", tail.tau, "Range start of the symbol set");
  cmd_tail->add_option("--dx-spec", tail.dx_spec,
                       "fixed (||dx||^2 = 2) or random codeword pair")
      ->check(CLI::IsMember({"fixed", "random"}));
  cmd_tail->add_option("--format", tail.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_tail->add_option("--out", tail.out, "Output path ('-' = stdout)");

  // concentration ------------------------------------------------------------
  ConcentrationArgs conc;
  auto* cmd_conc = app.add_subcommand(
      "concentration",
      "P(|ratio - 1| > epsilon), mean, and variance per n; the ratio "
      "concentrates at 1 with variance 1/n");
  cmd_conc->add_option("--n", conc.n_list, "Dimensions n")->delimiter(',');
  cmd_conc->add_option("--epsilon", conc.epsilon, "Window half-width");
  cmd_conc->add_option("--trials", conc.trials, "Trials per grid point");
  cmd_conc->add_option("--seed", conc.seed, "Master seed")->required();
  cmd_conc->add_option("--N0", conc.N0, "Per-entry complex noise variance");
  cmd_conc->add_option("--kappa", conc.kappa, "Aspect ratio n/m (> 1)");
  cmd_conc->add_option("--L", conc.L, "Symbols per axis");
  cmd_conc->add_option("--tau", conc.tau, "Range start of the symbol set");
  cmd_conc->add_option("--dx-spec", conc.dx_spec, "fixed or random")
      ->check(CLI::IsMember({"fixed", "random"}));
  cmd_conc->add_option("--format", conc.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_conc->add_option("--out", conc.out, "Output path ('-' = stdout)");

  // sd-complexity ------------------------------------------------------------
  SdArgs sd;
  auto* cmd_sd = app.add_subcommand(
      "sd-complexity",
      "Mean sphere-decoding complexity C_SD and sphere count N_SC with "
      "rho^2 = alpha n N0, next to the two closed-form lower bounds");
  cmd_sd->add_option("--n", sd.n_list, "Dimensions n (n/kappa must be integer)")
      ->delimiter(',');
  cmd_sd->add_option("--trials", sd.trials, "Trials per grid point");
  cmd_sd->add_option("--seed", sd.seed, "Master seed")->required();
  cmd_sd->add_option("--N0", sd.N0, "Per-entry complex noise variance (> 0)");
  cmd_sd->add_option("--kappa", sd.kappa, "Aspect ratio n/m (> 1)");
  cmd_sd->add_option("--L", sd.L, "Symbols per axis");
  cmd_sd->add_option("--tau", sd.tau, "Range start of the symbol set");
  cmd_sd->add_option("--alpha", sd.alpha, "Radius factor rho^2 = alpha n N0 (> 1)");
  cmd_sd->add_option("--c-sq", sd.c_sq,
                     "Column-power constant of the exponential-function bound");
  cmd_sd->add_option("--format", sd.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_sd->add_option("--out", sd.out, "Output path ('-' = stdout)");

  // pep ------------------------------------------------------------------------
  PepArgs pep;
  auto* cmd_pep = app.add_subcommand(
      "pep",
      "Monte Carlo pairwise error probability E_H[Q(||H dx||/sqrt(2 N0))] "
      "with its large-n limit Q(||dx||/sqrt(2 N0)) and the tail-event "
      "frequency of the Q-comparison at the given theta");
  cmd_pep->add_option("--n", pep.n_list, "Dimensions n")->delimiter(',');
  cmd_pep->add_option("--trials", pep.trials, "Trials per grid point");
  cmd_pep->add_option("--seed", pep.seed, "Master seed")->required();
  cmd_pep->add_option("--N0", pep.N0, "Per-entry complex noise variance (> 0)");
  cmd_pep->add_option("--kappa", pep.kappa, "Aspect ratio n/m");
  cmd_pep->add_option("--dx2", pep.dx2, "||dx||^2 of the fixed difference vector");
  cmd_pep->add_option("--theta", pep.theta, "Tail threshold (> 0, != 1)");
  cmd_pep->add_option("--format", pep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_pep->add_option("--out", pep.out, "Output path ('-' = stdout)");

  // inflation --------------------------------------------------------------------
  InflationArgs infl;
  auto* cmd_infl = app.add_subcommand(
      "inflation",
      "Minimal-distance trajectories against the search radius rho(m): the "
      "fixed rectangular codebook (constant d_min) versus the "
      "packing-existence lower bound, each judged by the same anchored "
      "linear comparison");
  cmd_infl->add_option("--m", infl.m_list, "Grid of ranks m (increasing)")
      ->delimiter(',');
  cmd_infl->add_option("--Ex", infl.Ex, "Average per-entry power");
  cmd_infl->add_option("--alpha-prime", infl.alpha_prime,
                       "Chordal/geodesic bridging constant");
  cmd_infl->add_option("--R", infl.R, "Rate in bits per dimension");
  cmd_infl->add_option("--alpha", infl.alpha, "Radius factor (> 1)");
  cmd_infl->add_option("--kappa", infl.kappa, "Aspect ratio n/m");
  cmd_infl->add_option("--N0", infl.N0, "Per-entry complex noise variance");
  cmd_infl->add_option("--L", infl.L, "Symbols per axis of the fixed codebook");
  cmd_infl->add_option("--tau", infl.tau, "Range start of the symbol set");
  cmd_infl->add_option("--format", infl.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_infl->add_option("--out", infl.out, "Output path ('-' = stdout)");

  // decode -------------------------------------------------------------------------
  DecodeArgs dec;
  auto* cmd_dec = app.add_subcommand(
      "decode",
      "Draw one seeded instance (G, x_hat, w), run the counting sphere "
      "decoder, and emit the full trace (argmin, N_k, C_SD, N_SC) as JSON");
  cmd_dec->add_option("--n", dec.n, "Ambient dimension");
  cmd_dec->add_option("--m", dec.m, "Lattice rank");
  cmd_dec->add_option("--L", dec.L, "Symbols per axis");
  cmd_dec->add_option("--tau", dec.tau, "Range start of the symbol set");
  cmd_dec->add_option("--N0", dec.N0, "Per-entry complex noise variance (> 0)");
  cmd_dec->add_option("--alpha", dec.alpha, "Radius factor rho^2 = alpha n N0");
  cmd_dec->add_option("--rho2", dec.rho2, "Explicit squared radius (overrides alpha)");
  cmd_dec->add_option("--seed", dec.seed, "Master seed")->required();
  cmd_dec->add_option("--format", dec.format, "json");
  cmd_dec->add_option("--out", dec.out, "Output path ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_bc->parsed()) return run_bound_curves_cmd(bc);
    if (cmd_tail->parsed()) return run_tail_cmd(tail, global);
    if (cmd_conc->parsed()) return run_concentration_cmd(conc, global);
    if (cmd_sd->parsed()) return run_sd_cmd(sd, global);
    if (cmd_pep->parsed()) return run_pep_cmd(pep, global);
    if (cmd_infl->parsed()) return run_inflation_cmd(infl);
    if (cmd_dec->parsed()) return run_decode_cmd(dec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid-argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: runtime: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
