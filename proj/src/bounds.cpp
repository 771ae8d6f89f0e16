#include "latt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latt/errors.hpp"

namespace latt {

double chernoff_log(const ChernoffQuery& q) {
  if (!(q.theta > 0.0)) throw std::invalid_argument("chernoff: theta must be > 0");
  return static_cast<double>(q.n) * (std::log(q.theta) + 1.0 - q.theta);
}

double chernoff_bound(const ChernoffQuery& q) {
  return std::exp(chernoff_log(q));
}

bool tail_bound_holds(double empirical_p, const ChernoffQuery& q,
                               double std_err) {
  return empirical_p <= chernoff_bound(q) + 3.0 * std_err;
}

CsdRadiusBound csd_lower_bound_radius(const ComplexityBoundInputs& b) {
  if (b.n < 1 || b.L < 1) throw std::invalid_argument("radius bound: need n >= 1, L >= 1");
  if (!(b.kappa > 1.0)) throw std::invalid_argument("radius bound: kappa must be > 1");
  if (!(b.alpha > 1.0)) throw std::invalid_argument("radius bound: alpha must be > 1");
  if (!(b.N0 > 0.0)) throw std::invalid_argument("radius bound: N0 must be > 0");
  if (!(b.dmax_sq > 0.0)) {
    throw DegenerateCodebookError("radius bound: dmax^2 = 0 (single-symbol codebook)");
  }
  const double exponent =
      static_cast<double>(b.n) *
      std::min(1.0 / b.kappa, (b.alpha - 1.0) * b.N0 / b.dmax_sq);
  const double lnL = std::log(static_cast<double>(b.L));
  return {exponent, exponent * lnL, exponent * 2.0 * lnL};
}

double csd_lower_bound_pam(std::size_t m, std::size_t L, double c_sq, double N0) {
  if (L < 2) throw std::invalid_argument("pam bound: L must be >= 2");
  if (!(c_sq > 0.0)) throw std::invalid_argument("pam bound: c^2 must be > 0");
  if (!(N0 > 0.0)) throw std::invalid_argument("pam bound: N0 must be > 0");
  if (m == 0) return -std::numeric_limits<double>::infinity();
  const double Ld = static_cast<double>(L);
  const double eta = 0.5 / (c_sq * (Ld * Ld - 1.0) / (3.0 * N0) + 1.0);
  const double t = eta * static_cast<double>(m) * std::log(Ld);  // ln L^{eta m}
  // ln((e^t - 1)/(L - 1)) = t + ln(1 - e^{-t}) - ln(L - 1)
  return t + std::log1p(-std::exp(-t)) - std::log(Ld - 1.0);
}

double psi_max(const ExponentComparison& e) {
  if (!(e.psi > 0.0)) throw std::invalid_argument("psi_max: psi must be > 0");
  if (!(e.theta > 0.0)) throw std::invalid_argument("psi_max: theta must be > 0");
  if (e.L < 1 || !(e.kappa > 0.0)) throw std::invalid_argument("psi_max: bad L or kappa");
  const double second = std::log(e.theta) + 1.0 - e.theta +
                        std::log(static_cast<double>(e.L)) / e.kappa;
  return std::max(e.psi, second);
}

std::size_t eta_count(std::size_t n, double alpha, double N0, double theta,
                      double dmax_sq) {
  if (!(alpha > 1.0)) throw std::invalid_argument("eta_count: alpha must be > 1");
  if (!(theta > 1.0 && theta < alpha)) {
    throw std::invalid_argument("eta_count: need 1 < theta < alpha");
  }
  if (!(N0 > 0.0)) throw std::invalid_argument("eta_count: N0 must be > 0");
  if (!(dmax_sq > 0.0)) throw std::invalid_argument("eta_count: dmax^2 must be > 0");
  const double v = (alpha - 1.0) * static_cast<double>(n) * N0 / (theta * dmax_sq);
  return static_cast<std::size_t>(std::floor(v));
}

double sphere_packing_dmin_bound(const SpherePackingInputs& sp) {
  if (sp.m < 1) throw std::invalid_argument("sphere packing: m must be >= 1");
  if (!(sp.Ex > 0.0) || !(sp.alpha_prime > 0.0) || !(sp.R >= 0.0)) {
    throw std::invalid_argument("sphere packing: bad Ex, alpha', or R");
  }
  const double md = static_cast<double>(sp.m);
  const double exponent = md * sp.R / (2.0 * md - 1.0);
  return std::sqrt(md * sp.Ex) / sp.alpha_prime * std::exp2(-exponent);
}

double sphere_packing_rho_coefficient(const SpherePackingInputs& sp) {
  if (!(sp.alpha > 1.0) || !(sp.kappa > 0.0) || !(sp.N0 > 0.0)) {
    throw std::invalid_argument("sphere packing: bad alpha, kappa, or N0");
  }
  const double md = static_cast<double>(sp.m);
  const double exponent = md * sp.R / (2.0 * md - 1.0);
  return std::sqrt(sp.Ex / sp.N0) / (sp.alpha_prime * std::sqrt(sp.alpha * sp.kappa)) *
         std::exp2(-exponent);
}

bool is_inflatable(const std::vector<InflationSample>& samples,
                   const std::function<double(std::size_t)>& gamma,
                   const std::function<double(double)>& g) {
  if (samples.empty()) throw std::invalid_argument("is_inflatable: empty sample set");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].m <= samples[i - 1].m) {
      throw std::invalid_argument("is_inflatable: m values must be strictly increasing");
    }
  }
  // The condition must hold from some index onward, so only the trailing run
  // of samples decides. The relative guard absorbs rounding when d_min is
  // computed by the same formula as g(gamma).
  bool tail_ok = false;
  for (const auto& s : samples) {
    const double threshold = g(gamma(s.m));
    tail_ok = s.d_min >= threshold * (1.0 - 1e-9);
  }
  return tail_ok;
}

}  // namespace latt
