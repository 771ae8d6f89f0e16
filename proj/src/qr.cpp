#include "latt/qr.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "latt/errors.hpp"

namespace latt {

namespace {
constexpr double kRankTol = 1e-12;
}

QrFactors qr_positive_diag(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (m == 0 || n < m) throw std::invalid_argument("qr: need rows >= cols >= 1");
  if (!a.all_finite()) throw std::invalid_argument("qr: non-finite input");

  ComplexMatrix w = a;  // working copy, overwritten with R in its upper part
  std::vector<ComplexVector> reflectors(m);
  std::vector<double> betas(m, 0.0);

  for (std::size_t j = 0; j < m; ++j) {
    // Householder vector for column j, acting on rows j..n-1.
    ComplexVector v(n - j);
    double colnorm_sq = 0.0;
    for (std::size_t i = j; i < n; ++i) {
      v[i - j] = w(i, j);
      colnorm_sq += std::norm(w(i, j));
    }
    const double colnorm = std::sqrt(colnorm_sq);
    // Sign chosen so v[0] = x0 + phase(x0) * ||x|| never cancels.
    const Complex phase =
        std::abs(v[0]) > 0.0 ? v[0] / std::abs(v[0]) : Complex{1.0, 0.0};
    const Complex alpha = -phase * colnorm;
    v[0] -= alpha;
    double vnorm_sq = 0.0;
    for (const auto& z : v) vnorm_sq += std::norm(z);
    const double beta = vnorm_sq > 0.0 ? 2.0 / vnorm_sq : 0.0;
    reflectors[j] = v;
    betas[j] = beta;

    // Apply H = I - beta v v^H to the trailing columns.
    if (beta > 0.0) {
      for (std::size_t c = j; c < m; ++c) {
        Complex dot{0.0, 0.0};
        for (std::size_t i = j; i < n; ++i) dot += std::conj(v[i - j]) * w(i, c);
        dot *= beta;
        for (std::size_t i = j; i < n; ++i) w(i, c) -= dot * v[i - j];
      }
    }
    w(j, j) = alpha;
    for (std::size_t i = j + 1; i < n; ++i) w(i, j) = 0.0;
  }

  ComplexMatrix r(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) r(i, j) = w(i, j);

  // Accumulate the thin Q by applying the reflectors to I(:, 0..m-1) in
  // reverse order.
  ComplexMatrix q(n, m);
  for (std::size_t j = 0; j < m; ++j) q(j, j) = 1.0;
  for (std::size_t j = m; j-- > 0;) {
    const auto& v = reflectors[j];
    const double beta = betas[j];
    if (beta == 0.0) continue;
    for (std::size_t c = 0; c < m; ++c) {
      Complex dot{0.0, 0.0};
      for (std::size_t i = j; i < n; ++i) dot += std::conj(v[i - j]) * q(i, c);
      dot *= beta;
      for (std::size_t i = j; i < n; ++i) q(i, c) -= dot * v[i - j];
    }
  }

  // Phase normalization: make every diagonal entry of R real positive while
  // preserving A = QR.
  for (std::size_t j = 0; j < m; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag < kRankTol) {
      throw RankDeficientError("qr: rank-deficient input (|R(j,j)| < 1e-12)");
    }
    const Complex ph = d / mag;
    const Complex phc = std::conj(ph);
    for (std::size_t c = j; c < m; ++c) r(j, c) *= phc;
    r(j, j) = Complex{mag, 0.0};  // clamp the residual imaginary rounding
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= ph;
  }

  return {std::move(q), std::move(r)};
}

}  // namespace latt
