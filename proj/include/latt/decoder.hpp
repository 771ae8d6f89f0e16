#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latt/lattice.hpp"
#include "latt/matrix.hpp"

namespace latt {

// Squared search radius. When built from alpha, rho^2 = alpha * n * N0 exactly.
struct SphereConstraint {
  double rho_sq = 0.0;
  std::optional<double> alpha;

  static SphereConstraint from_rho_sq(double rho_sq);
  static SphereConstraint from_alpha(double alpha, std::size_t n, double N0);
};

// Search outcome with full complexity accounting.
//
// level_counts[k-1] is N_k: the number of depth-k suffixes (x_{m-k+1..m})
// whose partial metric is within rho^2. total_visits is C_SD = sum_k N_k and
// leaf_count is N_SC = N_m. argmin is empty and min_metric is +inf when no
// codeword satisfies the constraint.
struct DecodeTrace {
  GaussIntVector argmin;
  double min_metric = 0.0;
  std::vector<std::uint64_t> level_counts;
  std::uint64_t total_visits = 0;
  std::uint64_t leaf_count = 0;
  bool found_in_sphere = false;
};

struct DecodeProblem {
  ComplexMatrix G;  // n x m, full column rank
  ComplexVector y;  // length n
  Codebook codebook;
  SphereConstraint constraint;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Depth-first tree search over codebook suffixes with a fixed radius: no
// radius shrinking and no early termination, so every partial vector whose
// metric fits the budget is visited and counted. Candidates within a level
// are taken in ascending partial-metric order, which only prunes siblings
// that could not have been counted anyway.
//
// Metric convention shared with the oracle: after G = QR, the depth-k partial
// metric is ||y - Q Q^H y||^2 plus the per-level increments accumulated from
// the last coordinate upward, so at depth m it equals ||y - G x||^2 exactly
// and the full sphere constraint coincides with the depth-m recursive one.
//
// When two codewords sit within 1e-12 of the same metric, the one with the
// lexicographically smaller (re, im) digit sequence is returned; the choice
// does not depend on visit order.
DecodeTrace sphere_decode(const DecodeProblem& p);

// Exhaustive reference: enumerates every depth-k suffix outright (no tree
// recursion), recomputing each partial metric from scratch with the same
// accumulation order, and resolves the argmin by the same tie rule. Count
// semantics are bit-identical to sphere_decode by construction.
DecodeTrace brute_force_oracle(const DecodeProblem& p);

// |{x in codebook : ||G x_hat + w - G x||^2 <= rho^2}| by direct evaluation
// of the full metric (no QR), an independent route to leaf_count.
std::uint64_t count_nsc(const ComplexMatrix& G, const GaussIntVector& x_hat,
                        const ComplexVector& w, const Codebook& codebook,
                        double rho_sq,
                        std::uint64_t cap = kDefaultEnumerationCap);

// |{x in codebook : ||x_hat - x||^2 + n N0 <= rho^2 / theta}|; independent of
// G and w, with the distance term exact in integer arithmetic.
std::uint64_t count_nprime(const GaussIntVector& x_hat, const Codebook& codebook,
                           std::size_t n, double N0, double rho_sq, double theta,
                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace latt
