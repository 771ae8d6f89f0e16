#include "latt/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latt/errors.hpp"
#include "latt/qr.hpp"

namespace latt {

namespace {

constexpr double kTieTol = 1e-12;

// Reduced form shared by the decoder and the oracle: R from the QR of G,
// b = Q^H y, and the constant out-of-column-space offset that makes the
// depth-m partial metric equal ||y - G x||^2.
struct ReducedForm {
  ComplexMatrix r;
  ComplexVector b;
  double base = 0.0;
  std::vector<GaussInt> symbols;
};

ReducedForm reduce(const DecodeProblem& p) {
  const std::size_t n = p.G.rows();
  const std::size_t m = p.G.cols();
  if (p.y.size() != n) throw std::invalid_argument("decode: y has wrong dimension");
  if (p.codebook.m != m) throw std::invalid_argument("decode: codebook rank mismatch");
  if (!(p.constraint.rho_sq > 0.0)) {
    throw std::invalid_argument("decode: rho^2 must be > 0");
  }
  p.codebook.size_checked(p.enumeration_cap);

  QrFactors qr = qr_positive_diag(p.G);
  ComplexVector b = qr.q.adjoint_multiply(p.y);
  // base = ||y - Q b||^2, evaluated as a residual so it can never go negative.
  double base = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = p.y[i];
    for (std::size_t j = 0; j < m; ++j) acc -= qr.q(i, j) * b[j];
    base += std::norm(acc);
  }
  return {std::move(qr.r), std::move(b), base, p.codebook.symbols()};
}

// Increment contributed by fixing coordinate j, given the already-fixed
// coordinates j+1..m-1 of the path. Both search routines compute it through
// this helper so the floating-point result is identical.
inline Complex level_rhs(const ReducedForm& rf, const GaussIntVector& path,
                         std::size_t j) {
  const std::size_t m = rf.r.cols();
  Complex t = rf.b[j];
  for (std::size_t i = j + 1; i < m; ++i) t -= rf.r(j, i) * to_complex(path[i]);
  return t;
}

inline double level_increment(const ReducedForm& rf, std::size_t j,
                              const Complex& rhs, GaussInt symbol) {
  return std::norm(rhs - rf.r(j, j) * to_complex(symbol));
}

// Visit-order-independent argmin with the 1e-12 lexicographic tie window:
// keeps every leaf whose metric is within the window of the running minimum
// and resolves to the lexicographically smallest at the end.
struct ArgminTracker {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, GaussIntVector>> near;

  void offer(double metric, const GaussIntVector& x) {
    if (metric < best) {
      best = metric;
      std::erase_if(near, [&](const auto& e) { return e.first > best + kTieTol; });
    }
    if (metric <= best + kTieTol) near.emplace_back(metric, x);
  }

  bool found() const { return !near.empty(); }

  GaussIntVector resolve() const {
    const GaussIntVector* winner = nullptr;
    for (const auto& [metric, x] : near) {
      if (winner == nullptr || x < *winner) winner = &x;
    }
    return *winner;
  }
};

struct SearchState {
  const ReducedForm& rf;
  double rho_sq;
  std::size_t m;
  GaussIntVector path;
  std::vector<std::uint64_t> counts;
  ArgminTracker argmin;
};

void descend(SearchState& st, std::size_t depth, double partial) {
  const std::size_t j = st.m - depth;  // coordinate fixed at this depth
  const Complex rhs = level_rhs(st.rf, st.path, j);

  const std::size_t nsym = st.rf.symbols.size();
  std::vector<std::pair<double, std::size_t>> order(nsym);
  for (std::size_t s = 0; s < nsym; ++s) {
    order[s] = {level_increment(st.rf, j, rhs, st.rf.symbols[s]), s};
  }
  std::sort(order.begin(), order.end());

  for (const auto& [inc, s] : order) {
    const double metric = partial + inc;
    if (!(metric <= st.rho_sq)) break;  // sorted: the rest exceed the budget too
    st.counts[depth - 1] += 1;
    st.path[j] = st.rf.symbols[s];
    if (depth == st.m) {
      st.argmin.offer(metric, st.path);
    } else {
      descend(st, depth + 1, metric);
    }
  }
}

DecodeTrace finish(std::vector<std::uint64_t> counts, const ArgminTracker& argmin,
                   std::size_t m) {
  DecodeTrace t;
  t.level_counts = std::move(counts);
  t.total_visits = 0;
  for (const auto c : t.level_counts) t.total_visits += c;
  t.leaf_count = t.level_counts[m - 1];
  t.found_in_sphere = argmin.found();
  if (t.found_in_sphere) {
    t.argmin = argmin.resolve();
    t.min_metric = argmin.best;
  } else {
    t.min_metric = std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace

SphereConstraint SphereConstraint::from_rho_sq(double rho_sq) {
  if (!(rho_sq > 0.0)) throw std::invalid_argument("SphereConstraint: rho^2 must be > 0");
  return {rho_sq, std::nullopt};
}

SphereConstraint SphereConstraint::from_alpha(double alpha, std::size_t n, double N0) {
  if (!(alpha > 0.0)) throw std::invalid_argument("SphereConstraint: alpha must be > 0");
  const double rho_sq = alpha * static_cast<double>(n) * N0;
  if (!(rho_sq > 0.0)) throw std::invalid_argument("SphereConstraint: alpha*n*N0 must be > 0");
  return {rho_sq, alpha};
}

DecodeTrace sphere_decode(const DecodeProblem& p) {
  const ReducedForm rf = reduce(p);
  const std::size_t m = p.G.cols();
  SearchState st{rf, p.constraint.rho_sq, m, GaussIntVector(m),
                 std::vector<std::uint64_t>(m, 0), {}};
  descend(st, 1, rf.base);
  return finish(std::move(st.counts), st.argmin, m);
}

DecodeTrace brute_force_oracle(const DecodeProblem& p) {
  const ReducedForm rf = reduce(p);
  const std::size_t m = p.G.cols();
  std::vector<std::uint64_t> counts(m, 0);
  ArgminTracker argmin;

  // Depth k looks only at coordinates m-k..m-1, so reuse a full-length path
  // vector and a plain odometer over the suffix digits.
  for (std::size_t k = 1; k <= m; ++k) {
    GaussIntVector path(m);
    const std::size_t nsym = rf.symbols.size();
    std::vector<std::size_t> digits(k, 0);
    for (;;) {
      for (std::size_t d = 0; d < k; ++d) path[m - k + d] = rf.symbols[digits[d]];
      // Partial metric recomputed from scratch, accumulating levels in the
      // same order as the tree search (last coordinate first).
      double metric = rf.base;
      for (std::size_t kk = 1; kk <= k; ++kk) {
        const std::size_t j = m - kk;
        const Complex rhs = level_rhs(rf, path, j);
        metric += level_increment(rf, j, rhs, path[j]);
      }
      if (metric <= p.constraint.rho_sq) {
        counts[k - 1] += 1;
        if (k == m) argmin.offer(metric, path);
      }
      // Advance the odometer (digits[0] most significant).
      std::size_t pos = k;
      bool carried_out = true;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < nsym) {
          carried_out = false;
          break;
        }
        digits[pos] = 0;
      }
      if (carried_out) break;
    }
  }
  return finish(std::move(counts), argmin, m);
}

std::uint64_t count_nsc(const ComplexMatrix& G, const GaussIntVector& x_hat,
                        const ComplexVector& w, const Codebook& codebook,
                        double rho_sq, std::uint64_t cap) {
  if (x_hat.size() != G.cols() || w.size() != G.rows()) {
    throw std::invalid_argument("count_nsc: shape mismatch");
  }
  ComplexVector y = G.multiply(to_complex(x_hat));
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += w[i];

  std::uint64_t count = 0;
  for_each_codeword(
      codebook,
      [&](const GaussIntVector& x) {
        ComplexVector gx = G.multiply(to_complex(x));
        double metric = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) metric += std::norm(y[i] - gx[i]);
        if (metric <= rho_sq) ++count;
      },
      cap);
  return count;
}

std::uint64_t count_nprime(const GaussIntVector& x_hat, const Codebook& codebook,
                           std::size_t n, double N0, double rho_sq, double theta,
                           std::uint64_t cap) {
  if (x_hat.size() != codebook.m) throw std::invalid_argument("count_nprime: rank mismatch");
  if (!(theta > 0.0)) throw std::invalid_argument("count_nprime: theta must be > 0");
  const double budget = rho_sq / theta - static_cast<double>(n) * N0;
  std::uint64_t count = 0;
  for_each_codeword(
      codebook,
      [&](const GaussIntVector& x) {
        if (static_cast<double>(dist_sq_exact(x_hat, x)) <= budget) ++count;
      },
      cap);
  return count;
}

}  // namespace latt
