#include "latt/lattice.hpp"

#include <stdexcept>
#include <string>

#include "latt/errors.hpp"

namespace latt {

std::int64_t dist_sq_exact(const GaussIntVector& a, const GaussIntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dist_sq_exact: dim mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t dr = a[i].re - b[i].re;
    const std::int64_t di = a[i].im - b[i].im;
    s += dr * dr + di * di;
  }
  return s;
}

LatticeParams::LatticeParams(std::size_t n_, std::size_t m_) : n(n_), m(m_) {
  if (m < 1 || n < m) {
    throw std::invalid_argument("LatticeParams: need n >= m >= 1");
  }
}

Codebook Codebook::make(int tau, std::size_t L, std::size_t m) {
  if (L < 1 || m < 1) throw std::invalid_argument("Codebook: need L >= 1, m >= 1");
  Codebook cb;
  cb.tau = tau;
  cb.L = L;
  cb.m = m;
  // Per-entry power from the exact marginal: E|x_i|^2 = 2 * mean of t^2 over
  // t in {tau, ..., tau+L-1}.
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < L; ++k) {
    const double t = static_cast<double>(tau) + static_cast<double>(k);
    sum_sq += t * t;
  }
  cb.power_ex = 2.0 * sum_sq / static_cast<double>(L);
  return cb;
}

std::vector<GaussInt> Codebook::symbols() const {
  std::vector<GaussInt> out;
  out.reserve(L * L);
  for (std::size_t a = 0; a < L; ++a) {
    for (std::size_t b = 0; b < L; ++b) {
      out.push_back({tau + static_cast<int>(a), tau + static_cast<int>(b)});
    }
  }
  return out;
}

std::uint64_t Codebook::size_checked(std::uint64_t cap) const {
  const std::uint64_t per_entry = static_cast<std::uint64_t>(L) * L;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > cap / per_entry) {
      throw EnumerationCapError("codebook size (L^2)^m exceeds enumeration cap " +
                                std::to_string(cap));
    }
    total *= per_entry;
  }
  if (total > cap) {
    throw EnumerationCapError("codebook size (L^2)^m exceeds enumeration cap " +
                              std::to_string(cap));
  }
  return total;
}

NoiseModel::NoiseModel(double n0) : N0(n0) {
  if (!(N0 >= 0.0)) throw std::invalid_argument("NoiseModel: N0 must be >= 0");
}

ComplexMatrix sample_generator(SeededRng& rng, const LatticeParams& params) {
  const double var = 1.0 / static_cast<double>(params.n);
  ComplexMatrix g(params.n, params.m);
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = 0; j < params.m; ++j) {
      g(i, j) = rng.next_complex_gaussian(var);
    }
  }
  return g;
}

double distance_sq(const ComplexMatrix& G, const GaussIntVector& x_hat,
                   const GaussIntVector& x, const ComplexVector& w) {
  if (x_hat.size() != G.cols() || x.size() != G.cols() || w.size() != G.rows()) {
    throw std::invalid_argument("distance_sq: shape mismatch");
  }
  if (!G.all_finite() || !all_finite(w)) {
    throw std::invalid_argument("distance_sq: non-finite input");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < G.rows(); ++i) {
    Complex acc = w[i];
    for (std::size_t j = 0; j < G.cols(); ++j) {
      const Complex d{static_cast<double>(x_hat[j].re - x[j].re),
                      static_cast<double>(x_hat[j].im - x[j].im)};
      acc += G(i, j) * d;
    }
    s += std::norm(acc);
  }
  return s;
}

double ratio_statistic(const Scenario& s) {
  const double dx_sq = static_cast<double>(dist_sq_exact(s.x_hat, s.x));
  const double denom = dx_sq + static_cast<double>(s.params.n) * s.noise.N0;
  if (!(denom > 0.0)) {
    throw std::invalid_argument("ratio_statistic: zero denominator (x_hat == x and N0 == 0)");
  }
  return distance_sq(s.G, s.x_hat, s.x, s.w) / denom;
}

void for_each_codeword(const Codebook& cb,
                       const std::function<void(const GaussIntVector&)>& fn,
                       std::uint64_t cap) {
  cb.size_checked(cap);
  const int lo = cb.tau;
  const int hi = cb.tau + static_cast<int>(cb.L) - 1;
  GaussIntVector x(cb.m, GaussInt{lo, lo});
  // Odometer over the digit sequence (re_1, im_1, ..., re_m, im_m) with the
  // last digit fastest, which yields lexicographic order.
  for (;;) {
    fn(x);
    bool carried_out = true;
    std::size_t pos = 2 * cb.m;
    while (pos > 0) {
      --pos;
      int& digit = (pos % 2 == 0) ? x[pos / 2].re : x[pos / 2].im;
      if (digit < hi) {
        ++digit;
        carried_out = false;
        break;
      }
      digit = lo;
    }
    if (carried_out) return;
  }
}

std::vector<GaussIntVector> enumerate_codebook(const Codebook& cb, std::uint64_t cap) {
  std::vector<GaussIntVector> out;
  out.reserve(cb.size_checked(cap));
  for_each_codeword(cb, [&out](const GaussIntVector& x) { out.push_back(x); }, cap);
  return out;
}

double codebook_dmax_sq(const Codebook& cb) {
  const double d = static_cast<double>(cb.L) - 1.0;
  return 2.0 * d * d;
}

double codebook_dmin(const Codebook& cb) {
  if (cb.L < 2) throw DegenerateCodebookError("codebook_dmin: single-symbol codebook");
  return 1.0;
}

GaussIntVector sample_codeword(SeededRng& rng, const Codebook& cb) {
  GaussIntVector x(cb.m);
  for (auto& g : x) {
    g.re = cb.tau + static_cast<int>(rng.next_uint_below(cb.L));
    g.im = cb.tau + static_cast<int>(rng.next_uint_below(cb.L));
  }
  return x;
}

}  // namespace latt
