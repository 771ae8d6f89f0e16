#include <doctest.h>

#include <cmath>
#include <map>

#include "latt/experiments.hpp"
#include "latt/special.hpp"

using latt::DeltaXSpec;
using latt::ExperimentConfig;
using latt::ExperimentResult;
using latt::GaussInt;
using latt::GaussIntVector;

namespace {

ExperimentConfig small_cfg() {
  ExperimentConfig cfg;
  cfg.master_seed = 42;
  cfg.trials = 20000;
  cfg.n_list = {1, 8};
  cfg.theta_list = {1.5, 0.5};
  cfg.noise_N0 = 1.0;
  cfg.kappa = 2.0;
  cfg.L = 2;
  cfg.alpha = 2.0;
  cfg.threads = 1;
  return cfg;
}

const ExperimentResult& find(const std::vector<ExperimentResult>& rs,
                             const std::string& name, std::size_t n,
                             double param) {
  for (const auto& r : rs) {
    if (r.name == name && r.n == n && r.param_value == param) return r;
  }
  REQUIRE(false);
  return rs.front();
}

}  // namespace

TEST_CASE("bound curves are pure and ordered in n") {
  const auto rs = latt::run_bound_curves({1, 4, 16, 64, 256},
                                         {0.5, 0.9, 1.0, 1.5, 2.5});
  CHECK(rs.size() == 25);
  for (const auto& r : rs) {
    CHECK(r.std_err == 0.0);
    CHECK(r.estimate == r.bound_value);
  }
  CHECK(find(rs, "bound_curve", 1, 1.0).estimate == 1.0);
  CHECK(find(rs, "bound_curve", 256, 1.5).estimate ==
        doctest::Approx(3.0879384458e-11).epsilon(1e-9));
  for (const double theta : {0.5, 0.9, 1.5, 2.5}) {
    double prev = 2.0;
    for (const std::size_t n : {1, 4, 16, 64, 256}) {
      const double v = find(rs, "bound_curve", n, theta).estimate;
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("tail probabilities respect the bound and match the exact law") {
  auto cfg = small_cfg();
  cfg.trials = 100000;
  cfg.n_list = {1};
  cfg.theta_list = {0.5};
  const auto rs = latt::run_tail_probability(cfg);
  REQUIRE(rs.size() == 1);
  const auto& r = rs.front();
  // Exact: P(chi2_2 <= 1) = 1 - e^{-1/2}.
  CHECK(std::fabs(r.estimate - 0.3934693402873666) < 3.0 * r.std_err);
  CHECK(r.bound_value == doctest::Approx(0.8243606353500641).epsilon(1e-12));
  CHECK(latt::tail_bound_holds(r.estimate, {0.5, 1}, r.std_err));
}

TEST_CASE("tail run covers both tails and holds everywhere") {
  const auto rs = latt::run_tail_probability(small_cfg());
  CHECK(rs.size() == 4);
  for (const auto& r : rs) {
    CHECK(r.estimate >= 0.0);
    CHECK(r.estimate <= 1.0);
    CHECK(std::fabs(r.std_err -
                    std::sqrt(r.estimate * (1 - r.estimate) /
                              static_cast<double>(r.trials))) < 1e-15);
    CHECK(latt::tail_bound_holds(r.estimate, {r.param_value, r.n},
                                          r.std_err));
  }
}

TEST_CASE("tail estimates are thread-count invariant") {
  auto cfg = small_cfg();
  cfg.trials = 5000;
  const auto a = latt::run_tail_probability(cfg);
  cfg.threads = 4;
  const auto b = latt::run_tail_probability(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].estimate == b[i].estimate);
    CHECK(a[i].std_err == b[i].std_err);
  }
}

TEST_CASE("degenerate configs are rejected") {
  auto cfg = small_cfg();
  cfg.trials = 0;
  CHECK_THROWS_AS(latt::run_tail_probability(cfg), std::invalid_argument);
  auto cfg2 = small_cfg();
  cfg2.theta_list = {-1.0};
  CHECK_THROWS_AS(latt::run_tail_probability(cfg2), std::invalid_argument);
  auto cfg3 = small_cfg();
  cfg3.n_list.clear();
  CHECK_THROWS_AS(latt::run_tail_probability(cfg3), std::invalid_argument);
}

TEST_CASE("concentration: unit mean, 1/n variance, nonincreasing tails") {
  auto cfg = small_cfg();
  cfg.trials = 2000;
  cfg.n_list = {4, 16, 64, 256};
  const auto rs = latt::run_concentration(cfg, 0.1);

  const auto& mean16 = find(rs, "concentration_mean", 16, 0.1);
  CHECK(std::fabs(mean16.estimate - 1.0) < 3.0 * mean16.std_err);

  const auto& var16 = find(rs, "concentration_var", 16, 0.1);
  CHECK(var16.estimate > 0.9 / 16.0);
  CHECK(var16.estimate < 1.1 / 16.0);
  CHECK(var16.bound_value == doctest::Approx(1.0 / 16.0));

  double prev = 1.1;
  for (const std::size_t n : {4, 16, 64, 256}) {
    const auto& p = find(rs, "concentration_prob", n, 0.1);
    CHECK(p.estimate <= prev);
    prev = p.estimate;
    // Two-sided bound holds with slack.
    CHECK(p.estimate <= p.bound_value + 3.0 * p.std_err);
  }
}

TEST_CASE("sd-complexity: accounting, bounds attached, growth in m") {
  ExperimentConfig cfg;
  cfg.master_seed = 7;
  cfg.trials = 300;
  cfg.n_list = {4, 6, 8};  // m = 2, 3, 4 at kappa = 2
  cfg.noise_N0 = 1.0;
  cfg.kappa = 2.0;
  cfg.L = 2;
  cfg.alpha = 2.0;
  cfg.threads = 2;
  const auto rs = latt::run_sd_complexity(cfg);
  CHECK(rs.size() == 6);

  double prev_nsc = 0.0;
  for (const std::size_t n : {4, 6, 8}) {
    const auto& csd = find(rs, "sd_mean_csd", n, 2.0);
    const auto& nsc = find(rs, "sd_mean_nsc", n, 2.0);
    CHECK(csd.estimate >= nsc.estimate);  // C_SD >= N_SC pathwise
    CHECK(nsc.estimate >= 1.0);
    CHECK(csd.bound_value > 0.0);
    CHECK(nsc.estimate > prev_nsc);  // complexity grows with the dimension
    prev_nsc = nsc.estimate;
  }

  auto bad = cfg;
  bad.n_list = {5};  // not divisible by kappa
  CHECK_THROWS_AS(latt::run_sd_complexity(bad), std::invalid_argument);
}

TEST_CASE("pep converges to the asymptotic value with the tail event in check") {
  ExperimentConfig cfg;
  cfg.master_seed = 9;
  cfg.trials = 20000;
  cfg.n_list = {4, 16};
  cfg.theta_list = {1.5};
  cfg.noise_N0 = 1.0;
  cfg.kappa = 2.0;
  cfg.threads = 1;
  const GaussIntVector dx{GaussInt{1, 1}};  // ||dx||^2 = 2
  const auto rs = latt::run_pep(cfg, dx);

  const double q1 = latt::q_function(1.0);
  const auto& p4 = find(rs, "pep_mean", 4, 2.0);
  const auto& p16 = find(rs, "pep_mean", 16, 2.0);
  CHECK(p4.bound_value == doctest::Approx(q1).epsilon(1e-12));
  CHECK(std::fabs(p16.estimate - q1) < std::fabs(p4.estimate - q1));

  const auto& c16 = find(rs, "pep_qtail", 16, 1.5);
  CHECK(c16.estimate <= c16.bound_value + 3.0 * c16.std_err);

  CHECK_THROWS_AS(latt::run_pep(cfg, GaussIntVector{GaussInt{0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("the Q-comparison tail frequency matches the noiseless ratio tail in law") {
  // The two events are images of the same chi-squared tail; frequencies from
  // independent streams agree within Monte Carlo error.
  ExperimentConfig pep_cfg;
  pep_cfg.master_seed = 10;
  pep_cfg.trials = 20000;
  pep_cfg.n_list = {16};
  pep_cfg.theta_list = {1.5};
  pep_cfg.noise_N0 = 1.0;
  pep_cfg.kappa = 2.0;
  const auto pep = latt::run_pep(pep_cfg, GaussIntVector{GaussInt{1, 1}});
  const auto& qtail = find(pep, "pep_qtail", 16, 1.5);

  ExperimentConfig tail_cfg = pep_cfg;
  tail_cfg.noise_N0 = 0.0;  // noiseless ratio: ||G dx||^2 / ||dx||^2
  const auto tails = latt::run_tail_probability(tail_cfg);
  const auto& tail = find(tails, "tail_prob", 16, 1.5);

  const double se = std::sqrt(qtail.std_err * qtail.std_err +
                              tail.std_err * tail.std_err);
  CHECK(std::fabs(qtail.estimate - tail.estimate) < 3.0 * se);
}

TEST_CASE("inflation report reproduces the two verdicts") {
  latt::SpherePackingInputs sp;
  sp.Ex = 1.0;
  sp.alpha_prime = 1.0;
  sp.R = 1.0;  // log2 L at L = 2
  sp.alpha = 2.0;
  sp.kappa = 2.0;
  sp.N0 = 1.0;
  const auto cb = latt::Codebook::make(0, 2, 2);
  const auto report =
      latt::run_codebook_inflation({2, 4, 8, 16, 32, 64}, sp, cb);
  CHECK_FALSE(report.undetermined);
  CHECK_FALSE(report.codebook_inflatable);
  CHECK(report.sp_bound_inflatable);
  CHECK(report.rows.size() == 6);
  for (const auto& row : report.rows) {
    CHECK(row.dmin_codebook == 1.0);
    CHECK(row.rho == doctest::Approx(2.0 * std::sqrt(static_cast<double>(row.m))));
  }
  // Exact packing-bound value at m = 8, Ex = 1, alpha' = 1, R = 1.
  const auto& r8 = report.rows[2];
  CHECK(r8.m == 8);
  CHECK(r8.dmin_sp_bound ==
        doctest::Approx(std::sqrt(8.0) * std::pow(2.0, -8.0 / 15.0)).epsilon(1e-12));

  const auto single = latt::run_codebook_inflation({4}, sp, cb);
  CHECK(single.undetermined);
}
