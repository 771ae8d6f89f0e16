#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace latt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense row-major complex matrix. Plain value type, sized at construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }

  ComplexVector multiply(const ComplexVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matvec: shape mismatch");
    ComplexVector y(rows_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
      Complex acc{0.0, 0.0};
      const Complex* row = &data_[i * cols_];
      for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  // A^H x, for tall matrices where the conjugate-transposed product is needed
  // without materializing the adjoint.
  ComplexVector adjoint_multiply(const ComplexVector& x) const {
    if (x.size() != rows_) throw std::invalid_argument("adjoint matvec: shape mismatch");
    ComplexVector y(cols_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
      const Complex* row = &data_[i * cols_];
      const Complex xi = x[i];
      for (std::size_t j = 0; j < cols_; ++j) y[j] += std::conj(row[j]) * xi;
    }
    return y;
  }

  double frobenius_norm_sq() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return s;
  }
  double frobenius_norm() const { return std::sqrt(frobenius_norm_sq()); }

  bool all_finite() const {
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline double norm_sq(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

inline bool all_finite(const ComplexVector& v) {
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

}  // namespace latt
