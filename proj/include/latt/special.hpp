#pragma once

#include <cstddef>

namespace latt {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
// series for x < a + 1 and Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);

// Chi-squared c.d.f. with k degrees of freedom, F(x) = P(k/2, x/2).
// Throws std::invalid_argument for x < 0 or k < 1.
double chi2_cdf(double x, std::size_t k);

// Standard normal upper-tail probability Q(t) = 0.5 * erfc(t / sqrt(2)).
double q_function(double t);

}  // namespace latt
