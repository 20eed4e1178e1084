#ifndef KEXTREMAL_EMPIRICAL_HPP
#define KEXTREMAL_EMPIRICAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kextremal {

// Continuous parent families, one per attraction regime: uniform (xi < 0),
// exponential and gumbel (xi = 0), pareto_like (xi > 0, survival 1/x).
enum class ParentFamily { uniform, exponential, gumbel, pareto_like };

struct ParentSpec {
  ParentFamily family = ParentFamily::uniform;
};

// Parse "uniform" / "exponential" / "gumbel" / "pareto_like"; throws
// std::invalid_argument listing valid names on failure.
ParentFamily parse_parent_family(const std::string& name);

double parent_quantile(const ParentSpec& parent, double p);

// N replicates of the K largest order statistics of n iid draws from the
// parent, row-major N x K, each row strictly decreasing. Partial selection,
// no full sort of the n draws.
std::vector<double> order_stats_replicates(const ParentSpec& parent,
                                           std::size_t n, int K,
                                           std::size_t N, std::uint64_t seed);

// Columnwise normalized ranks: each column of pseudo_obs is a permutation
// of {1/(N+1), ..., N/(N+1)} (ties broken by input order; a.s. absent).
struct EmpiricalCopula {
  std::size_t N = 0;
  int K = 0;
  std::vector<double> pseudo_obs;  // row-major N x K
};

EmpiricalCopula empirical_copula_build(std::span<const double> replicates,
                                       std::size_t N, int K);

// Fraction of pseudo-observation rows componentwise <= u.
double empirical_cdf_at(const EmpiricalCopula& ec, std::span<const double> u);

struct ConvergenceRow {
  std::size_t n = 0;
  double distance = 0.0;  // sup over the grid of |empirical - copula_cdf|
  double mc_floor = 0.0;  // sqrt(log(2*grid)/(2N))
};

// For each sample size in ns, builds the empirical copula of the K largest
// order statistics and reports its sup-distance to the limit copula over a
// shared random grid.
std::vector<ConvergenceRow> convergence_report(const ParentSpec& parent,
                                               std::span<const std::size_t> ns,
                                               int K, std::size_t N,
                                               std::size_t grid_size,
                                               std::uint64_t seed);

}  // namespace kextremal

#endif
