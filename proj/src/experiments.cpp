#include "latt/experiments.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "latt/decoder.hpp"
#include "latt/special.hpp"

namespace latt {

namespace detail {

std::uint64_t stream_id(std::uint64_t domain, std::uint64_t grid, std::uint64_t trial) {
  return (domain << 56) | (grid << 40) | trial;
}

void parallel_trials(std::uint64_t trials, std::size_t threads,
                     const std::function<void(std::uint64_t)>& fn) {
  if (threads <= 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  const std::uint64_t nworkers = std::min<std::uint64_t>(threads, trials);
  std::vector<std::thread> pool;
  pool.reserve(nworkers);
  for (std::uint64_t w = 0; w < nworkers; ++w) {
    const std::uint64_t lo = trials * w / nworkers;
    const std::uint64_t hi = trials * (w + 1) / nworkers;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t t = lo; t < hi; ++t) fn(t);
    });
  }
  for (auto& th : pool) th.join();
}

std::size_t rank_for(std::size_t n, double kappa) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("kappa must be >= 1");
  const auto m = static_cast<std::size_t>(std::floor(static_cast<double>(n) / kappa));
  return std::max<std::size_t>(1, m);
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double binomial_std_err(double p_hat, std::uint64_t trials) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

struct DeltaPair {
  GaussIntVector x_hat;
  GaussIntVector x;
};

// x_hat - x per the configured rule. The fixed rule puts 1+i in the first
// coordinate; the tail law depends on the pair only through ||x_hat - x||.
DeltaPair draw_pair(SeededRng& rng, const Codebook& cb, DeltaXSpec spec) {
  if (spec == DeltaXSpec::kFixedAdjacent) {
    if (cb.L < 2) throw std::invalid_argument("fixed delta-x needs L >= 2");
    GaussIntVector x(cb.m, GaussInt{cb.tau, cb.tau});
    GaussIntVector x_hat = x;
    x_hat[0] = GaussInt{cb.tau + 1, cb.tau + 1};
    return {std::move(x_hat), std::move(x)};
  }
  GaussIntVector x_hat = sample_codeword(rng, cb);
  GaussIntVector x = sample_codeword(rng, cb);
  while (x == x_hat) x = sample_codeword(rng, cb);
  return {std::move(x_hat), std::move(x)};
}

void validate_common(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.n_list.empty()) throw std::invalid_argument("config: empty n list");
  if (!(cfg.noise_N0 >= 0.0)) throw std::invalid_argument("config: N0 must be >= 0");
  if (cfg.L < 1) throw std::invalid_argument("config: L must be >= 1");
}

}  // namespace

std::vector<ExperimentResult> run_bound_curves(const std::vector<std::size_t>& n_list,
                                               const std::vector<double>& theta_grid) {
  std::vector<ExperimentResult> out;
  out.reserve(n_list.size() * theta_grid.size());
  for (const double theta : theta_grid) {
    for (const std::size_t n : n_list) {
      const double bound = chernoff_bound({theta, n});
      ExperimentResult r;
      r.name = "bound_curve";
      r.n = n;
      r.param_name = "theta";
      r.param_value = theta;
      r.estimate = bound;
      r.std_err = 0.0;
      r.bound_value = bound;
      r.trials = 0;
      r.seed = 0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<ExperimentResult> run_tail_probability(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (cfg.theta_list.empty()) throw std::invalid_argument("config: empty theta list");
  for (const double th : cfg.theta_list) {
    if (!(th > 0.0)) throw std::invalid_argument("config: theta must be > 0");
  }

  std::vector<ExperimentResult> out;
  std::uint64_t grid = 0;
  for (const double theta : cfg.theta_list) {
    for (const std::size_t n : cfg.n_list) {
      const auto t0 = Clock::now();
      const std::size_t m = detail::rank_for(n, cfg.kappa);
      const LatticeParams params(n, m);
      const Codebook cb = Codebook::make(cfg.tau, cfg.L, m);
      const NoiseModel noise(cfg.noise_N0);

      std::vector<std::uint8_t> hits(cfg.trials, 0);
      detail::parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        SeededRng rng(cfg.master_seed,
                      detail::stream_id(detail::kDomainTail, grid, t));
        Scenario s{params,           sample_generator(rng, params), {}, {},
                   ComplexVector(n), noise};
        if (noise.N0 > 0.0) s.w = sample_complex_gaussian(rng, n, noise.N0);
        auto pair = draw_pair(rng, cb, cfg.delta_x_spec);
        s.x_hat = std::move(pair.x_hat);
        s.x = std::move(pair.x);
        const double ratio = ratio_statistic(s);
        const bool hit = theta >= 1.0 ? (ratio >= theta) : (ratio <= theta);
        hits[t] = hit ? 1 : 0;
      });
      std::uint64_t count = 0;
      for (const auto h : hits) count += h;

      ExperimentResult r;
      r.name = "tail_prob";
      r.n = n;
      r.param_name = "theta";
      r.param_value = theta;
      r.estimate = static_cast<double>(count) / static_cast<double>(cfg.trials);
      r.std_err = binomial_std_err(r.estimate, cfg.trials);
      r.bound_value = chernoff_bound({theta, n});
      r.trials = cfg.trials;
      r.seed = cfg.master_seed;
      r.wall_time_s = seconds_since(t0);
      out.push_back(std::move(r));
      ++grid;
    }
  }
  return out;
}

std::vector<ExperimentResult> run_concentration(const ExperimentConfig& cfg,
                                                double epsilon) {
  validate_common(cfg);
  if (!(epsilon > 0.0)) throw std::invalid_argument("concentration: epsilon must be > 0");
  if (!(cfg.kappa > 1.0)) throw std::invalid_argument("concentration: kappa must be > 1");

  std::vector<ExperimentResult> out;
  std::uint64_t grid = 0;
  for (const std::size_t n : cfg.n_list) {
    const auto t0 = Clock::now();
    const std::size_t m = detail::rank_for(n, cfg.kappa);
    const LatticeParams params(n, m);
    const Codebook cb = Codebook::make(cfg.tau, cfg.L, m);
    const NoiseModel noise(cfg.noise_N0);

    std::vector<double> ratios(cfg.trials, 0.0);
    detail::parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
      SeededRng rng(cfg.master_seed,
                    detail::stream_id(detail::kDomainConcentration, grid, t));
      Scenario s{params,           sample_generator(rng, params), {}, {},
                 ComplexVector(n), noise};
      if (noise.N0 > 0.0) s.w = sample_complex_gaussian(rng, n, noise.N0);
      auto pair = draw_pair(rng, cb, cfg.delta_x_spec);
      s.x_hat = std::move(pair.x_hat);
      s.x = std::move(pair.x);
      ratios[t] = ratio_statistic(s);
    });

    std::uint64_t outside = 0;
    double sum = 0.0;
    for (const double v : ratios) {
      if (std::fabs(v - 1.0) > epsilon) ++outside;
      sum += v;
    }
    const double mean = sum / static_cast<double>(cfg.trials);
    double ss = 0.0;
    for (const double v : ratios) ss += (v - mean) * (v - mean);
    const double variance =
        cfg.trials > 1 ? ss / static_cast<double>(cfg.trials - 1) : 0.0;
    const double wall = seconds_since(t0);

    const double p_out = static_cast<double>(outside) / static_cast<double>(cfg.trials);
    const double two_sided_bound =
        chernoff_bound({1.0 + epsilon, n}) + chernoff_bound({1.0 - epsilon, n});

    ExperimentResult prob;
    prob.name = "concentration_prob";
    prob.n = n;
    prob.param_name = "epsilon";
    prob.param_value = epsilon;
    prob.estimate = p_out;
    prob.std_err = binomial_std_err(p_out, cfg.trials);
    prob.bound_value = two_sided_bound;
    prob.trials = cfg.trials;
    prob.seed = cfg.master_seed;
    prob.wall_time_s = wall;
    out.push_back(std::move(prob));

    ExperimentResult mn;
    mn.name = "concentration_mean";
    mn.n = n;
    mn.param_name = "epsilon";
    mn.param_value = epsilon;
    mn.estimate = mean;
    mn.std_err = std::sqrt(variance / static_cast<double>(cfg.trials));
    mn.bound_value = 1.0;  // exact mean of the ratio law
    mn.trials = cfg.trials;
    mn.seed = cfg.master_seed;
    out.push_back(std::move(mn));

    ExperimentResult var;
    var.name = "concentration_var";
    var.n = n;
    var.param_name = "epsilon";
    var.param_value = epsilon;
    var.estimate = variance;
    var.std_err = 0.0;
    var.bound_value = 1.0 / static_cast<double>(n);  // exact variance of the law
    var.trials = cfg.trials;
    var.seed = cfg.master_seed;
    out.push_back(std::move(var));

    ++grid;
  }
  return out;
}

std::vector<ExperimentResult> run_sd_complexity(const ExperimentConfig& cfg) {
  validate_common(cfg);
  if (!(cfg.alpha > 1.0)) throw std::invalid_argument("sd-complexity: alpha must be > 1");
  if (!(cfg.noise_N0 > 0.0)) throw std::invalid_argument("sd-complexity: N0 must be > 0");
  if (!(cfg.kappa > 1.0)) throw std::invalid_argument("sd-complexity: kappa must be > 1");

  std::vector<ExperimentResult> out;
  std::uint64_t grid = 0;
  for (const std::size_t n : cfg.n_list) {
    const auto t0 = Clock::now();
    const double md = static_cast<double>(n) / cfg.kappa;
    const auto m = static_cast<std::size_t>(md);
    if (static_cast<double>(m) != md || m < 1) {
      throw std::invalid_argument("sd-complexity: n/kappa must be a positive integer");
    }
    const LatticeParams params(n, m);
    const Codebook cb = Codebook::make(cfg.tau, cfg.L, m);
    cb.size_checked(cfg.enumeration_cap);
    const SphereConstraint constraint =
        SphereConstraint::from_alpha(cfg.alpha, n, cfg.noise_N0);

    std::vector<std::uint64_t> csd(cfg.trials, 0);
    std::vector<std::uint64_t> nsc(cfg.trials, 0);
    detail::parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
      SeededRng rng(cfg.master_seed,
                    detail::stream_id(detail::kDomainSdComplexity, grid, t));
      ComplexMatrix G = sample_generator(rng, params);
      GaussIntVector x_hat = sample_codeword(rng, cb);
      ComplexVector w = sample_complex_gaussian(rng, n, cfg.noise_N0);
      ComplexVector y = G.multiply(to_complex(x_hat));
      for (std::size_t i = 0; i < n; ++i) y[i] += w[i];
      const DecodeTrace trace =
          sphere_decode({G, std::move(y), cb, constraint, cfg.enumeration_cap});
      csd[t] = trace.total_visits;
      nsc[t] = trace.leaf_count;
    });

    auto mean_se = [&](const std::vector<std::uint64_t>& v) {
      double sum = 0.0;
      for (const auto c : v) sum += static_cast<double>(c);
      const double mean = sum / static_cast<double>(cfg.trials);
      double ss = 0.0;
      for (const auto c : v) {
        const double d = static_cast<double>(c) - mean;
        ss += d * d;
      }
      const double se = cfg.trials > 1
                            ? std::sqrt(ss / static_cast<double>(cfg.trials - 1) /
                                        static_cast<double>(cfg.trials))
                            : 0.0;
      return std::pair<double, double>{mean, se};
    };
    const auto [csd_mean, csd_se] = mean_se(csd);
    const auto [nsc_mean, nsc_se] = mean_se(nsc);
    const double wall = seconds_since(t0);

    const CsdRadiusBound rbound = csd_lower_bound_radius(
        {n, cfg.kappa, cfg.alpha, cfg.noise_N0, cfg.L, codebook_dmax_sq(cb)});

    ExperimentResult rc;
    rc.name = "sd_mean_csd";
    rc.n = n;
    rc.param_name = "alpha";
    rc.param_value = cfg.alpha;
    rc.estimate = csd_mean;
    rc.std_err = csd_se;
    rc.bound_value = std::exp(rbound.log_bound);
    rc.trials = cfg.trials;
    rc.seed = cfg.master_seed;
    rc.wall_time_s = wall;
    out.push_back(std::move(rc));

    ExperimentResult rn;
    rn.name = "sd_mean_nsc";
    rn.n = n;
    rn.param_name = "alpha";
    rn.param_value = cfg.alpha;
    rn.estimate = nsc_mean;
    rn.std_err = nsc_se;
    rn.bound_value = 0.0;
    rn.trials = cfg.trials;
    rn.seed = cfg.master_seed;
    out.push_back(std::move(rn));

    ++grid;
  }
  return out;
}

std::vector<ExperimentResult> run_pep(const ExperimentConfig& cfg,
                                      const GaussIntVector& delta_x) {
  validate_common(cfg);
  if (!(cfg.noise_N0 > 0.0)) throw std::invalid_argument("pep: N0 must be > 0");
  std::int64_t dx_sq = 0;
  for (const auto& g : delta_x) {
    dx_sq += static_cast<std::int64_t>(g.re) * g.re +
             static_cast<std::int64_t>(g.im) * g.im;
  }
  if (dx_sq == 0) throw std::invalid_argument("pep: delta_x must be nonzero");

  const double dx_norm = std::sqrt(static_cast<double>(dx_sq));
  const double asymptotic = q_function(dx_norm / std::sqrt(2.0 * cfg.noise_N0));

  std::vector<ExperimentResult> out;
  std::uint64_t grid = 0;
  for (const std::size_t n : cfg.n_list) {
    const auto t0 = Clock::now();
    const std::size_t m = std::max(delta_x.size(), detail::rank_for(n, cfg.kappa));
    const LatticeParams params(n, m);
    GaussIntVector dx_full = delta_x;
    dx_full.resize(m, GaussInt{0, 0});
    const ComplexVector dx_c = to_complex(dx_full);

    std::vector<double> qvals(cfg.trials, 0.0);
    std::vector<std::vector<std::uint8_t>> qtail(
        cfg.theta_list.size(), std::vector<std::uint8_t>(cfg.trials, 0));
    detail::parallel_trials(cfg.trials, cfg.threads, [&](std::uint64_t t) {
      SeededRng rng(cfg.master_seed, detail::stream_id(detail::kDomainPep, grid, t));
      const ComplexMatrix H = sample_generator(rng, params);
      const ComplexVector hv = H.multiply(dx_c);
      const double arg = std::sqrt(norm_sq(hv)) / std::sqrt(2.0 * cfg.noise_N0);
      const double qv = q_function(arg);
      qvals[t] = qv;
      for (std::size_t ti = 0; ti < cfg.theta_list.size(); ++ti) {
        const double theta = cfg.theta_list[ti];
        const double ref =
            q_function(std::sqrt(theta) * dx_norm / std::sqrt(2.0 * cfg.noise_N0));
        const bool hit = theta >= 1.0 ? (qv <= ref) : (qv >= ref);
        qtail[ti][t] = hit ? 1 : 0;
      }
    });

    double sum = 0.0;
    for (const double v : qvals) sum += v;
    const double mean = sum / static_cast<double>(cfg.trials);
    double ss = 0.0;
    for (const double v : qvals) ss += (v - mean) * (v - mean);
    const double se = cfg.trials > 1
                          ? std::sqrt(ss / static_cast<double>(cfg.trials - 1) /
                                      static_cast<double>(cfg.trials))
                          : 0.0;
    const double wall = seconds_since(t0);

    ExperimentResult r;
    r.name = "pep_mean";
    r.n = n;
    r.param_name = "dx_sq";
    r.param_value = static_cast<double>(dx_sq);
    r.estimate = mean;
    r.std_err = se;
    r.bound_value = asymptotic;
    r.trials = cfg.trials;
    r.seed = cfg.master_seed;
    r.wall_time_s = wall;
    out.push_back(std::move(r));

    for (std::size_t ti = 0; ti < cfg.theta_list.size(); ++ti) {
      std::uint64_t count = 0;
      for (const auto h : qtail[ti]) count += h;
      ExperimentResult rt;
      rt.name = "pep_qtail";
      rt.n = n;
      rt.param_name = "theta";
      rt.param_value = cfg.theta_list[ti];
      rt.estimate = static_cast<double>(count) / static_cast<double>(cfg.trials);
      rt.std_err = binomial_std_err(rt.estimate, cfg.trials);
      rt.bound_value = chernoff_bound({cfg.theta_list[ti], n});
      rt.trials = cfg.trials;
      rt.seed = cfg.master_seed;
      out.push_back(std::move(rt));
    }
    ++grid;
  }
  return out;
}

InflationReport run_codebook_inflation(const std::vector<std::size_t>& m_list,
                                       const SpherePackingInputs& sp,
                                       const Codebook& codebook) {
  if (m_list.empty()) throw std::invalid_argument("inflation: empty m list");
  for (std::size_t i = 1; i < m_list.size(); ++i) {
    if (m_list[i] <= m_list[i - 1]) {
      throw std::invalid_argument("inflation: m list must be strictly increasing");
    }
  }

  InflationReport report;
  const double dmin_cb = codebook_dmin(codebook);

  auto rho = [&](std::size_t m) {
    return std::sqrt(sp.alpha * sp.kappa * static_cast<double>(m) * sp.N0);
  };
  auto sp_bound_at = [&](std::size_t m) {
    SpherePackingInputs q = sp;
    q.m = m;
    return sphere_packing_dmin_bound(q);
  };

  // The linear comparison function is anchored at the first grid point of
  // the packing-bound trajectory; the bound's rho-relative coefficient is
  // nondecreasing in m, so the trajectory stays above its anchored line while
  // a constant minimal distance falls below it once rho grows.
  report.anchor_coefficient = sp_bound_at(m_list.front()) / rho(m_list.front());

  std::vector<InflationSample> cb_samples;
  std::vector<InflationSample> sp_samples;
  for (const std::size_t m : m_list) {
    InflationReportRow row;
    row.m = m;
    row.rho = rho(m);
    row.dmin_codebook = dmin_cb;
    row.dmin_sp_bound = sp_bound_at(m);
    row.g_of_rho = report.anchor_coefficient * row.rho;
    report.rows.push_back(row);
    cb_samples.push_back({m, row.dmin_codebook});
    sp_samples.push_back({m, row.dmin_sp_bound});
  }

  if (m_list.size() < 2) {
    report.undetermined = true;
    return report;
  }

  const auto gamma = [&](std::size_t m) { return rho(m); };
  const auto g = [&](double t) { return report.anchor_coefficient * t; };
  report.codebook_inflatable = is_inflatable(cb_samples, gamma, g);
  report.sp_bound_inflatable = is_inflatable(sp_samples, gamma, g);
  return report;
}

}  // namespace latt
