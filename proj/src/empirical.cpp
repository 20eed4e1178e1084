#include "kextremal/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kextremal/copula.hpp"
#include "kextremal/rng.hpp"

namespace kextremal {

ParentFamily parse_parent_family(const std::string& name) {
  if (name == "uniform") return ParentFamily::uniform;
  if (name == "exponential") return ParentFamily::exponential;
  if (name == "gumbel") return ParentFamily::gumbel;
  if (name == "pareto_like") return ParentFamily::pareto_like;
  throw std::invalid_argument(
      "unknown parent family '" + name +
      "'; valid: uniform, exponential, gumbel, pareto_like");
}

double parent_quantile(const ParentSpec& parent, double p) {
  switch (parent.family) {
    case ParentFamily::uniform:
      return p;
    case ParentFamily::exponential:
      return -std::log1p(-p);
    case ParentFamily::gumbel:
      return -std::log(-std::log(p));
    case ParentFamily::pareto_like:
      return 1.0 / (1.0 - p);
  }
  throw std::invalid_argument("parent_quantile: bad family");
}

std::vector<double> order_stats_replicates(const ParentSpec& parent,
                                           std::size_t n, int K,
                                           std::size_t N,
                                           std::uint64_t seed) {
  if (K < 1) throw std::invalid_argument("order_stats_replicates: K >= 1");
  if (n < static_cast<std::size_t>(K))
    throw std::invalid_argument("order_stats_replicates: need n >= K");
  std::vector<double> out(N * static_cast<std::size_t>(K));
  std::vector<double> draws(n);
  for (std::size_t rep = 0; rep < N; ++rep) {
    // Per-replicate substream: output is a pure function of (seed, n, K, N).
    Substream rng(seed, rep);
    for (std::size_t i = 0; i < n; ++i)
      draws[i] = parent_quantile(parent, rng.uniform01());
    // Partial selection of the K largest, then sort just those.
    auto kth = draws.begin() + static_cast<std::ptrdiff_t>(K);
    std::nth_element(draws.begin(), kth - 1, draws.end(),
                     std::greater<double>());
    std::sort(draws.begin(), kth, std::greater<double>());
    std::copy(draws.begin(), kth,
              out.begin() + static_cast<std::ptrdiff_t>(
                                rep * static_cast<std::size_t>(K)));
  }
  return out;
}

EmpiricalCopula empirical_copula_build(std::span<const double> replicates,
                                       std::size_t N, int K) {
  if (N < 10) throw std::invalid_argument("empirical_copula_build: N >= 10");
  if (replicates.size() != N * static_cast<std::size_t>(K))
    throw std::invalid_argument("empirical_copula_build: size mismatch");
  EmpiricalCopula ec;
  ec.N = N;
  ec.K = K;
  ec.pseudo_obs.resize(replicates.size());
  std::vector<std::size_t> idx(N);
  for (int col = 0; col < K; ++col) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) {
                       return replicates[a * static_cast<std::size_t>(K) +
                                         static_cast<std::size_t>(col)] <
                              replicates[b * static_cast<std::size_t>(K) +
                                         static_cast<std::size_t>(col)];
                     });
    for (std::size_t r = 0; r < N; ++r) {
      ec.pseudo_obs[idx[r] * static_cast<std::size_t>(K) +
                    static_cast<std::size_t>(col)] =
          static_cast<double>(r + 1) / static_cast<double>(N + 1);
    }
  }
  return ec;
}

double empirical_cdf_at(const EmpiricalCopula& ec,
                        std::span<const double> u) {
  if (u.size() != static_cast<std::size_t>(ec.K))
    throw std::invalid_argument("empirical_cdf_at: dimension mismatch");
  std::size_t count = 0;
  for (std::size_t r = 0; r < ec.N; ++r) {
    bool below = true;
    for (int c = 0; c < ec.K; ++c) {
      if (ec.pseudo_obs[r * static_cast<std::size_t>(ec.K) +
                        static_cast<std::size_t>(c)] >
          u[static_cast<std::size_t>(c)]) {
        below = false;
        break;
      }
    }
    if (below) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(ec.N);
}

std::vector<ConvergenceRow> convergence_report(
    const ParentSpec& parent, std::span<const std::size_t> ns, int K,
    std::size_t N, std::size_t grid_size, std::uint64_t seed) {
  if (N < 1000) throw std::invalid_argument("convergence_report: N >= 1000");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (!(ns[i] > ns[i - 1]))
      throw std::invalid_argument("convergence_report: ns must increase");
  // Shared random grid, drawn once.
  Substream grid_rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL, 0);
  std::vector<double> grid(grid_size * static_cast<std::size_t>(K));
  for (double& g : grid) g = grid_rng.uniform01();
  std::vector<double> cdf_at_grid(grid_size);
  for (std::size_t g = 0; g < grid_size; ++g)
    cdf_at_grid[g] = copula_cdf(std::span<const double>(
        grid.data() + g * static_cast<std::size_t>(K),
        static_cast<std::size_t>(K)));

  const double mc_floor =
      std::sqrt(std::log(2.0 * static_cast<double>(grid_size)) /
                (2.0 * static_cast<double>(N)));
  std::vector<ConvergenceRow> rows;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::size_t n = ns[i];
    const auto reps = order_stats_replicates(
        parent, n, K, N, seed + 0x9E37ULL * (i + 1));
    const auto ec = empirical_copula_build(reps, N, K);
    double d = 0.0;
    for (std::size_t g = 0; g < grid_size; ++g) {
      const double e = empirical_cdf_at(
          ec, std::span<const double>(
                  grid.data() + g * static_cast<std::size_t>(K),
                  static_cast<std::size_t>(K)));
      d = std::max(d, std::abs(e - cdf_at_grid[g]));
    }
    rows.push_back({n, d, mc_floor});
  }
  return rows;
}

}  // namespace kextremal
