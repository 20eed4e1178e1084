#ifndef KEXTREMAL_DEPENDENCE_HPP
#define KEXTREMAL_DEPENDENCE_HPP

#include <cstddef>
#include <cstdint>

#include "kextremal/sampler.hpp"

namespace kextremal {

enum class Measure { spearman, kendall };
enum class DepMethod { exact_series, monte_carlo };

struct DependenceResult {
  Measure measure = Measure::spearman;
  int K = 0;
  double value = 0.0;
  DepMethod method = DepMethod::exact_series;
  double std_error = 0.0;     // 0 for exact
  std::size_t n_samples = 0;  // 0 for exact
  std::uint64_t seed = 0;     // unused for exact
};

// Spearman's rho between the first and K-th coordinates, summed exactly:
// rho_K = 12 * S_K - 3 with S_K = sum_{j>=K-1} C(2j+1, K-1) / 2^(2j+2).
// Truncation error is bounded below 1e-13 by a geometric tail bound.
DependenceResult spearman_exact(int K);

// 12 * mean(u_1 * u_K) - 3 over a sample batch.
DependenceResult spearman_mc(int K, std::size_t n, std::uint64_t seed);

// 4 * (fraction of disjoint ordered pairs with row a componentwise below
// row b in coordinates (1, K)) - 1. Draws 2 * n_pairs rows. Ties count as
// not-below.
DependenceResult kendall_mc(int K, std::size_t n_pairs, std::uint64_t seed);

// Rank-based estimators on arbitrary coordinate pairs of an existing
// batch: Spearman via rank correlation (average ranks on ties), Kendall
// via O(n log n) inversion counting. i, j are 1-based margins.
DependenceResult rank_corr_from_batch(const SampleBatch& batch, int i, int j,
                                      Measure measure);

}  // namespace kextremal

#endif
