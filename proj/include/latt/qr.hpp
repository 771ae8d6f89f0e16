#pragma once

#include "latt/matrix.hpp"

namespace latt {

struct QrFactors {
  ComplexMatrix q;  // n x m, orthonormal columns
  ComplexMatrix r;  // m x m, upper triangular, real positive diagonal
};

// Thin Householder QR of an n x m matrix (n >= m), followed by a diagonal
// phase normalization so every R(j,j) is real and strictly positive.
// Throws RankDeficientError when a diagonal entry falls below 1e-12 and
// std::invalid_argument on bad shapes or non-finite input.
QrFactors qr_positive_diag(const ComplexMatrix& a);

}  // namespace latt
