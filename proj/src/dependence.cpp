#include "kextremal/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kextremal/detail/math.hpp"
#include "kextremal/errors.hpp"

namespace kextremal {

namespace {

double lchoose(int n, int k) {
  return detail::lfact(n) - detail::lfact(k) - detail::lfact(n - k);
}

// Average ranks (ties shared), 1-based.
std::vector<double> average_ranks(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

// Merge sort counting inversions (discordant pairs once x is sorted).
std::uint64_t count_inversions(std::vector<double>& a) {
  const std::size_t n = a.size();
  std::vector<double> buf(n);
  std::uint64_t inv = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          inv += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
      std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                buf.begin() + static_cast<std::ptrdiff_t>(hi),
                a.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inv;
}

}  // namespace

DependenceResult spearman_exact(int K) {
  if (K < 2) throw std::invalid_argument("spearman_exact: K must be >= 2");
  // S_K = sum_{j>=K-1} C(2j+1, K-1) / 2^(2j+2); consecutive term ratio
  // tends to 1/4, so a geometric majorant closes the tail.
  const double ln2 = std::log(2.0);
  int j = K - 1;
  double term = std::exp(lchoose(2 * j + 1, K - 1) - (2 * j + 2) * ln2);
  detail::KahanSum sum;
  double ratio = 1.0;
  for (;;) {
    sum.add(term);
    const double a = 2.0 * j + 3.0;
    const double b = 2.0 * j + 2.0;
    const double c = 2.0 * j + 4.0 - K;
    const double d = 2.0 * j + 3.0 - K;
    ratio = (a * b) / (4.0 * c * d);
    const double next = term * ratio;
    if (term < 1e-16 * sum.value() && ratio < 0.9) break;
    term = next;
    ++j;
    if (j > 100000)
      throw NumericError("spearman_exact: series did not settle", 0, j);
  }
  const double tail_bound = term * ratio / (1.0 - ratio);
  if (!(tail_bound < 1e-13))
    throw NumericError("spearman_exact: tail bound too large", tail_bound, j);
  const double rho = 12.0 * sum.value() - 3.0;
  return {Measure::spearman, K, rho, DepMethod::exact_series, 0.0, 0, 0};
}

DependenceResult spearman_mc(int K, std::size_t n, std::uint64_t seed) {
  if (K < 2) throw std::invalid_argument("spearman_mc: K must be >= 2");
  if (n < 100) throw std::invalid_argument("spearman_mc: n must be >= 100");
  const SampleBatch batch = sample_batch(K, n, seed);
  detail::KahanSum s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = batch.at(i, 0) * batch.at(i, K - 1);
    s1.add(p);
    s2.add(p * p);
  }
  const double mean = s1.value() / static_cast<double>(n);
  const double var =
      std::max(0.0, s2.value() / static_cast<double>(n) - mean * mean);
  const double se = 12.0 * std::sqrt(var / static_cast<double>(n));
  return {Measure::spearman, K, 12.0 * mean - 3.0, DepMethod::monte_carlo,
          se, n, seed};
}

DependenceResult kendall_mc(int K, std::size_t n_pairs, std::uint64_t seed) {
  if (K < 2) throw std::invalid_argument("kendall_mc: K must be >= 2");
  if (n_pairs < 1) throw std::invalid_argument("kendall_mc: n_pairs >= 1");
  const SampleBatch batch = sample_batch(K, 2 * n_pairs, seed);
  // tau = 4 * P(row a strictly below row b in coords 1 and K) - 1,
  // estimated on disjoint ordered pairs. Ties count as not-below.
  std::size_t below = 0;
  for (std::size_t p = 0; p < n_pairs; ++p) {
    const std::size_t a = 2 * p, b = 2 * p + 1;
    if (batch.at(a, 0) < batch.at(b, 0) &&
        batch.at(a, K - 1) < batch.at(b, K - 1))
      ++below;
  }
  const double phat =
      static_cast<double>(below) / static_cast<double>(n_pairs);
  const double se =
      4.0 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(n_pairs));
  return {Measure::kendall, K, 4.0 * phat - 1.0, DepMethod::monte_carlo, se,
          2 * n_pairs, seed};
}

DependenceResult rank_corr_from_batch(const SampleBatch& batch, int i, int j,
                                      Measure measure) {
  if (i == j || i < 1 || j < 1 || i > batch.K || j > batch.K)
    throw std::invalid_argument("rank_corr_from_batch: bad margin indices");
  const std::size_t n = batch.n;
  if (n < 2) throw std::invalid_argument("rank_corr_from_batch: n < 2");
  std::vector<double> x(n), y(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = batch.at(r, i - 1);
    y[r] = batch.at(r, j - 1);
  }
  double value;
  if (measure == Measure::spearman) {
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    double mx = 0, my = 0;
    for (std::size_t r = 0; r < n; ++r) {
      mx += rx[r];
      my += ry[r];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t r = 0; r < n; ++r) {
      sxy += (rx[r] - mx) * (ry[r] - my);
      sxx += (rx[r] - mx) * (rx[r] - mx);
      syy += (ry[r] - my) * (ry[r] - my);
    }
    value = sxy / std::sqrt(sxx * syy);
  } else {
    // Sort by x (y as tiebreaker), then discordant pairs are inversions
    // in the y sequence.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
    });
    std::vector<double> ys(n);
    for (std::size_t r = 0; r < n; ++r) ys[r] = y[idx[r]];
    const std::uint64_t inv = count_inversions(ys);
    const double total = 0.5 * static_cast<double>(n) *
                         static_cast<double>(n - 1);
    value = 1.0 - 2.0 * static_cast<double>(inv) / total;
  }
  return {measure, batch.K, value, DepMethod::monte_carlo, 0.0, n,
          batch.seed};
}

}  // namespace kextremal
