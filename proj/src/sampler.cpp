#include "kextremal/sampler.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "kextremal/psi.hpp"

namespace kextremal {

namespace {

constexpr std::size_t kBlockSize = 4096;

void check_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument(std::string(what) + " must be in (0,1)");
}

}  // namespace

double conditional_cdf(int m, double u_m, double u_prev) {
  if (m < 2) throw std::invalid_argument("conditional_cdf: m must be >= 2");
  check_open_unit(u_m, "conditional_cdf: u_m");
  check_open_unit(u_prev, "conditional_cdf: u_prev");
  const double v_m = psi(m, u_m).v;
  const double v_prev = psi(m - 1, u_prev).v;
  const double ratio = v_m / v_prev;
  if (ratio > 1.0 + 1e-12)
    throw std::invalid_argument("conditional_cdf: support violation");
  return std::min(std::max(ratio, 0.0), 1.0);
}

std::pair<double, double> conditional_quantile(int m, double q,
                                               double v_prev) {
  if (m < 2)
    throw std::invalid_argument("conditional_quantile: m must be >= 2");
  check_open_unit(q, "conditional_quantile: q");
  check_open_unit(v_prev, "conditional_quantile: v_prev");
  const double v_m = q * v_prev;
  return {psi_inv(m, v_m), v_m};
}

void sample_one(int K, Substream& rng, std::span<double> row,
                std::span<double> chain) {
  if (K < 2) throw std::invalid_argument("sample_one: K must be >= 2");
  if (row.size() != static_cast<std::size_t>(K) ||
      chain.size() != static_cast<std::size_t>(K))
    throw std::invalid_argument("sample_one: output spans must have length K");
  const double u1 = rng.uniform01();
  row[0] = u1;
  chain[0] = u1;
  double t = -std::log(u1);  // t_m = -log v_m, carried in log space
  for (int m = 2; m <= K; ++m) {
    const double q = rng.uniform01();
    t -= std::log(q);
    row[static_cast<std::size_t>(m) - 1] = psi_inv_from_t(m, t);
    chain[static_cast<std::size_t>(m) - 1] = std::exp(-t);
  }
}

SampleBatch sample_batch(int K, std::size_t n, std::uint64_t seed) {
  if (K < 2) throw std::invalid_argument("sample_batch: K must be >= 2");
  if (n < 1) throw std::invalid_argument("sample_batch: n must be >= 1");
  SampleBatch batch;
  batch.K = K;
  batch.n = n;
  batch.seed = seed;
  batch.rows.resize(n * static_cast<std::size_t>(K));
  batch.chains.resize(n * static_cast<std::size_t>(K));

  const std::size_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  auto run_block = [&](std::size_t b) {
    Substream rng(seed, b);
    const std::size_t begin = b * kBlockSize;
    const std::size_t end = std::min(begin + kBlockSize, n);
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t off = i * static_cast<std::size_t>(K);
      sample_one(K, rng,
                 std::span<double>(batch.rows.data() + off,
                                   static_cast<std::size_t>(K)),
                 std::span<double>(batch.chains.data() + off,
                                   static_cast<std::size_t>(K)));
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (n_blocks <= 1 || hw == 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) run_block(b);
    return batch;
  }
  // Blocks own disjoint row ranges and private substreams, so any
  // assignment of blocks to threads yields the same batch.
  std::vector<std::thread> workers;
  const unsigned n_workers = std::min<std::size_t>(hw, n_blocks);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= n_blocks) return;
        run_block(b);
      }
    });
  }
  for (auto& th : workers) th.join();
  return batch;
}

}  // namespace kextremal
