#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "latt/errors.hpp"
#include "latt/lattice.hpp"
#include "latt/qr.hpp"
#include "latt/rng.hpp"

using latt::Complex;
using latt::ComplexMatrix;
using latt::qr_positive_diag;
using latt::SeededRng;

namespace {

double reconstruction_error(const ComplexMatrix& a, const latt::QrFactors& f) {
  double num = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k <= std::min(j, f.q.cols() - 1); ++k) {
        acc += f.q(i, k) * f.r(k, j);
      }
      num += std::norm(a(i, j) - acc);
    }
  }
  return std::sqrt(num) / a.frobenius_norm();
}

double orthonormality_error(const ComplexMatrix& q) {
  double worst = 0.0;
  for (std::size_t a = 0; a < q.cols(); ++a) {
    for (std::size_t b = 0; b < q.cols(); ++b) {
      Complex dot{0.0, 0.0};
      for (std::size_t i = 0; i < q.rows(); ++i) dot += std::conj(q(i, a)) * q(i, b);
      const Complex expect = a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      worst = std::max(worst, std::abs(dot - expect));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("identity factors as identity") {
  const auto f = qr_positive_diag(ComplexMatrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const double qe = i == j ? 1.0 : 0.0;
      CHECK(std::abs(f.q(i, j) - Complex{qe, 0.0}) < 1e-14);
      CHECK(std::abs(f.r(i, j) - Complex{qe, 0.0}) < 1e-14);
    }
  }
}

TEST_CASE("real 2x1 column [3; 4] gives R11 = 5 and Q = [0.6; 0.8]") {
  ComplexMatrix a(2, 1);
  a(0, 0) = 3.0;
  a(1, 0) = 4.0;
  const auto f = qr_positive_diag(a);
  CHECK(f.r(0, 0).real() == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(f.r(0, 0).imag() == 0.0);
  CHECK(f.q(0, 0).real() == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(f.q(1, 0).real() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("500 seeded matrices reconstruct to 1e-10 with positive diagonals") {
  const std::pair<std::size_t, std::size_t> shapes[] = {{4, 2}, {8, 4}, {16, 8}};
  std::size_t done = 0;
  for (std::uint64_t rep = 0; done < 500; ++rep) {
    for (std::uint64_t si = 0; si < 3; ++si) {
      const auto [n, m] = shapes[si];
      if (done >= 500) break;
      SeededRng rng(2024, rep * 8 + si);
      const latt::LatticeParams params(n, m);
      const ComplexMatrix a = latt::sample_generator(rng, params);
      const auto f = qr_positive_diag(a);
      CHECK(reconstruction_error(a, f) < 1e-10);
      CHECK(orthonormality_error(f.q) < 1e-10);
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(f.r(j, j).real() > 0.0);
        CHECK(std::fabs(f.r(j, j).imag()) < 1e-12);
      }
      ++done;
    }
  }
}

TEST_CASE("rank-deficient input is reported") {
  ComplexMatrix a(3, 2);
  a(0, 0) = 1.0;
  a(1, 0) = 2.0;
  a(2, 0) = -1.0;
  // Second column is a scalar multiple of the first.
  a(0, 1) = Complex{2.0, 0.0};
  a(1, 1) = Complex{4.0, 0.0};
  a(2, 1) = Complex{-2.0, 0.0};
  CHECK_THROWS_AS(qr_positive_diag(a), latt::RankDeficientError);

  ComplexMatrix bad(2, 3);
  CHECK_THROWS_AS(qr_positive_diag(bad), std::invalid_argument);
}

TEST_CASE("column norms are invariant under a fixed unitary factor (law check)") {
  // Two-sample KS between ||first column of G U||^2 and ||first column of G||^2
  // over seeded draws; the laws coincide for a bi-unitarily invariant G.
  const std::size_t n = 8, m = 4;
  const latt::LatticeParams params(n, m);

  // Fixed unitary from the QR of a fixed seeded square matrix.
  SeededRng urng(777, 0);
  const latt::LatticeParams mparams(m, m);
  const ComplexMatrix u = qr_positive_diag(latt::sample_generator(urng, mparams)).q;

  const int trials = 100000;
  std::vector<double> with_u(trials), plain(trials);
  for (int t = 0; t < trials; ++t) {
    SeededRng r1(555, 2 * static_cast<std::uint64_t>(t));
    SeededRng r2(555, 2 * static_cast<std::uint64_t>(t) + 1);
    const ComplexMatrix g1 = latt::sample_generator(r1, params);
    const ComplexMatrix g2 = latt::sample_generator(r2, params);
    // First column of G1 * U = G1 * u(:, 0).
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j) acc += g1(i, j) * u(j, 0);
      s += std::norm(acc);
    }
    with_u[t] = s;
    double s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) s2 += std::norm(g2(i, 0));
    plain[t] = s2;
  }
  std::sort(with_u.begin(), with_u.end());
  std::sort(plain.begin(), plain.end());
  double d_stat = 0.0;
  std::size_t i = 0, j = 0;
  while (i < with_u.size() && j < plain.size()) {
    if (with_u[i] <= plain[j]) {
      ++i;
    } else {
      ++j;
    }
    const double f1 = static_cast<double>(i) / with_u.size();
    const double f2 = static_cast<double>(j) / plain.size();
    d_stat = std::max(d_stat, std::fabs(f1 - f2));
  }
  const double crit = 1.628 * std::sqrt(2.0 / static_cast<double>(trials));
  CHECK(d_stat < crit);
}
