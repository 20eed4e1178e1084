#ifndef KEXTREMAL_SAMPLER_HPP
#define KEXTREMAL_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kextremal/rng.hpp"

namespace kextremal {

// A batch of copula samples. rows and chains are row-major n x K;
// chains[i*K + m-1] = psi_m(rows[i*K + m-1]). Regenerating with the same
// (seed, K, n) reproduces rows bit-identically.
struct SampleBatch {
  int K = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> rows;
  std::vector<double> chains;

  double at(std::size_t i, int j) const { return rows[i * K + j]; }
  double chain_at(std::size_t i, int j) const { return chains[i * K + j]; }
};

// Conditional CDF of coordinate m given the previous one:
// psi_m(u_m) / psi_{m-1}(u_prev), clamped to [0,1]. Throws
// std::invalid_argument when the ratio exceeds 1 beyond 1e-12 (support
// violation) or when an input is not in (0,1).
double conditional_cdf(int m, double u_m, double u_prev);

// Conditional quantile: v_m = q * v_prev, u_m = psi_inv(m, v_m).
// Returns (u_m, v_m). Root-finding-free.
std::pair<double, double> conditional_quantile(int m, double q, double v_prev);

// Draws one row. row and chain must have length K. The chain is carried as
// t = -log v internally, so large K does not underflow intermediate state.
void sample_one(int K, Substream& rng, std::span<double> row,
                std::span<double> chain);

// n rows, produced in fixed-size blocks with per-block substreams; output
// is independent of the number of worker threads.
SampleBatch sample_batch(int K, std::size_t n, std::uint64_t seed);

}  // namespace kextremal

#endif
