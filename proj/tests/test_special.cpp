#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "latt/bounds.hpp"
#include "latt/special.hpp"

using latt::chi2_cdf;
using latt::q_function;

namespace {

// Composite-Simpson quadrature of the standard normal density on [t, 40];
// the remainder beyond 40 is below 1e-300. Independent of the erfc path.
double q_by_quadrature(double t) {
  const double b = 40.0;
  const int n = 400000;  // even
  const double h = (b - t) / n;
  auto phi = [](double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
  };
  double s = phi(t) + phi(b);
  for (int i = 1; i < n; ++i) s += phi(t + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("chi2_cdf matches the closed form 1 - e^{-x/2} for k = 2") {
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.2 * i;  // 100 points in (0, 20]
    const double expected = 1.0 - std::exp(-x / 2.0);
    CHECK(std::fabs(chi2_cdf(x, 2) - expected) < 1e-10);
  }
  CHECK(chi2_cdf(0.0, 2) == 0.0);
}

TEST_CASE("chi2_cdf basic domain behavior") {
  CHECK_THROWS_AS(chi2_cdf(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(chi2_cdf(1.0, 0), std::invalid_argument);
  // Monotone nondecreasing in x.
  double prev = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double v = chi2_cdf(0.25 * i, 5);
    CHECK(v >= prev);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
  CHECK(std::fabs(chi2_cdf(2.0, 2) - 0.6321205588285577) < 1e-12);
}

TEST_CASE("chi-squared tails obey the chernoff expression on a (theta, n) grid") {
  const double thetas[] = {0.25, 0.5, 0.75, 1.25, 1.5, 2.0, 3.0};
  for (const double theta : thetas) {
    for (std::size_t n = 1; n <= 64; ++n) {
      const double x = 2.0 * static_cast<double>(n) * theta;
      const double bound = latt::chernoff_bound({theta, n});
      if (theta > 1.0) {
        CHECK(1.0 - chi2_cdf(x, 2 * n) <= bound);
      } else {
        CHECK(chi2_cdf(x, 2 * n) <= bound);
      }
    }
  }
}

TEST_CASE("q_function values and identities") {
  CHECK(q_function(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::fabs(q_function(1.0) - 0.1586552539314571) < 1e-12);
  CHECK(std::fabs(q_function(1.0) - q_by_quadrature(1.0)) < 1e-11);
  CHECK(std::fabs(q_function(2.5) - q_by_quadrature(2.5)) < 1e-11);

  for (double t = -6.0; t <= 6.0; t += 0.25) {
    CHECK(std::fabs(q_function(t) + q_function(-t) - 1.0) < 1e-12);
  }
  // Strictly decreasing.
  double prev = q_function(-8.0);
  for (double t = -7.5; t <= 8.0; t += 0.5) {
    const double v = q_function(t);
    CHECK(v < prev);
    prev = v;
  }
}
