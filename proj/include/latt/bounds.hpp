#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace latt {

// Tail-bound query: the bound on P(ratio >= theta) for theta > 1 and on
// P(ratio <= theta) for theta < 1 is the same expression (theta e^{1-theta})^n.
struct ChernoffQuery {
  double theta = 0.0;
  std::size_t n = 0;
};

// n * (ln theta + 1 - theta).
double chernoff_log(const ChernoffQuery& q);

// (theta e^{1-theta})^n, evaluated in log space. theta = 1 is permitted as
// the limiting evaluation and returns 1. Throws for theta <= 0.
double chernoff_bound(const ChernoffQuery& q);

// empirical_p <= bound + 3 * std_err.
bool tail_bound_holds(double empirical_p, const ChernoffQuery& q,
                               double std_err);

struct ComplexityBoundInputs {
  std::size_t n = 0;
  double kappa = 0.0;    // > 1
  double alpha = 0.0;    // > 1, squared radius rho^2 = alpha n N0
  double N0 = 0.0;       // > 0
  std::size_t L = 0;
  double dmax_sq = 0.0;  // > 0 unless the codebook is degenerate
};

struct CsdRadiusBound {
  double exponent_base_L = 0.0;        // n * min{1/kappa, (alpha-1) N0 / dmax^2}
  double log_bound = 0.0;              // exponent * ln L   (real-symbol reading)
  double log_bound_complex = 0.0;      // exponent * ln L^2 (complex-symbol reading)
};

// Closed-form complexity lower bound L^{n min{1/kappa, (alpha-1)N0/dmax^2}},
// reported in both symbol-count conventions. Throws DegenerateCodebookError
// when dmax_sq = 0.
CsdRadiusBound csd_lower_bound_radius(const ComplexityBoundInputs& b);

// ln of (L^{eta m} - 1)/(L - 1) with eta = (1/2) (c^2 (L^2-1)/(3 N0) + 1)^{-1},
// computed stably in log space. m = 0 yields -inf (the bound is 0).
double csd_lower_bound_pam(std::size_t m, std::size_t L, double c_sq, double N0);

struct ExponentComparison {
  double psi = 0.0;  // > 0, caller-supplied analysis exponent
  double theta = 0.0;
  std::size_t L = 0;
  double kappa = 0.0;
};

// max{psi, ln theta + 1 - theta + (ln L)/kappa}.
double psi_max(const ExponentComparison& e);

// floor((alpha-1) n N0 / (theta dmax^2)) for 1 < theta < alpha.
std::size_t eta_count(std::size_t n, double alpha, double N0, double theta,
                      double dmax_sq);

struct SpherePackingInputs {
  std::size_t m = 0;
  double Ex = 0.0;           // > 0, average per-entry power
  double alpha_prime = 1.0;  // chordal/geodesic bridging constant
  double R = 0.0;            // rate, bits per dimension
  double alpha = 0.0;        // > 1
  double kappa = 0.0;
  double N0 = 0.0;
};

// sqrt(m Ex)/alpha' * (1/2)^{m R / (2m - 1)}.
double sphere_packing_dmin_bound(const SpherePackingInputs& sp);

// The same bound written relative to rho(m) = sqrt(alpha kappa m N0):
// sqrt(Ex/N0) / (alpha' sqrt(alpha kappa)) * (1/2)^{m R / (2m - 1)}.
double sphere_packing_rho_coefficient(const SpherePackingInputs& sp);

struct InflationSample {
  std::size_t m = 0;
  double d_min = 0.0;
};

// True iff there is an index from which every sample satisfies
// d_min(m) >= g(gamma(m)), up to a 1e-9 relative rounding guard. Throws for
// an empty sequence or non-increasing m values.
bool is_inflatable(const std::vector<InflationSample>& samples,
                   const std::function<double(std::size_t)>& gamma,
                   const std::function<double(double)>& g);

}  // namespace latt
