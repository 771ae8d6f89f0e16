#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "latt/matrix.hpp"
#include "latt/rng.hpp"

namespace latt {

// A Gaussian integer held exactly. Ordering is lexicographic on (re, im),
// which is also the codebook enumeration order.
struct GaussInt {
  int re = 0;
  int im = 0;
  auto operator<=>(const GaussInt&) const = default;
};

using GaussIntVector = std::vector<GaussInt>;

inline Complex to_complex(GaussInt g) {
  return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

inline ComplexVector to_complex(const GaussIntVector& v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_complex(v[i]);
  return out;
}

// ||a - b||^2 in exact integer arithmetic.
std::int64_t dist_sq_exact(const GaussIntVector& a, const GaussIntVector& b);

// Ambient dimension n, lattice rank m, aspect ratio kappa = n/m >= 1.
struct LatticeParams {
  std::size_t n = 0;
  std::size_t m = 0;

  LatticeParams(std::size_t n_, std::size_t m_);
  double kappa() const { return static_cast<double>(n) / static_cast<double>(m); }
};

// The finite constellation: every entry has Re and Im in {tau, ..., tau+L-1},
// so there are (L^2)^m codewords.
struct Codebook {
  int tau = 0;
  std::size_t L = 0;
  std::size_t m = 0;
  double power_ex = 0.0;  // exact average per-entry power

  static Codebook make(int tau, std::size_t L, std::size_t m);

  std::size_t symbol_count() const { return L * L; }
  // The L^2 symbols in lexicographic (re, im) order.
  std::vector<GaussInt> symbols() const;
  // (L^2)^m, or throws EnumerationCapError naming the cap when it exceeds it.
  std::uint64_t size_checked(std::uint64_t cap) const;
};

constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct NoiseModel {
  double N0 = 0.0;
  explicit NoiseModel(double n0);
};

// One concrete draw of (G, x_hat, x, w). Codewords are exact integer vectors.
struct Scenario {
  LatticeParams params;
  ComplexMatrix G;
  GaussIntVector x_hat;
  GaussIntVector x;
  ComplexVector w;
  NoiseModel noise;
};

// n x m generator with i.i.d. CN(0, 1/n) entries.
ComplexMatrix sample_generator(SeededRng& rng, const LatticeParams& params);

// ||G (x_hat - x) + w||^2.
double distance_sq(const ComplexMatrix& G, const GaussIntVector& x_hat,
                   const GaussIntVector& x, const ComplexVector& w);

// ||G (x_hat - x) + w||^2 / (||x_hat - x||^2 + n N0). Over fresh draws of
// (G, w) this is distributed exactly as chi2_{2n} / (2n).
double ratio_statistic(const Scenario& s);

// Visits every codeword exactly once, in lexicographic order of the digit
// sequence (re_1, im_1, ..., re_m, im_m). Throws EnumerationCapError first
// when the codebook exceeds cap.
void for_each_codeword(const Codebook& cb,
                       const std::function<void(const GaussIntVector&)>& fn,
                       std::uint64_t cap = kDefaultEnumerationCap);

std::vector<GaussIntVector> enumerate_codebook(
    const Codebook& cb, std::uint64_t cap = kDefaultEnumerationCap);

// max over symbol pairs of |a - b|^2 = 2 (L-1)^2.
double codebook_dmax_sq(const Codebook& cb);

// min over distinct symbol pairs of |a - b| (= 1 for L >= 2).
double codebook_dmin(const Codebook& cb);

// Uniform random codeword (each digit uniform over {tau, ..., tau+L-1}).
GaussIntVector sample_codeword(SeededRng& rng, const Codebook& cb);

}  // namespace latt
