// Acceptance suite: runs every release criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kextremal/copula.hpp"
#include "kextremal/dependence.hpp"
#include "kextremal/empirical.hpp"
#include "kextremal/gev.hpp"
#include "kextremal/jpoly.hpp"
#include "kextremal/psi.hpp"
#include "kextremal/rng.hpp"
#include "kextremal/sampler.hpp"
#include "support/quadrature.hpp"
#include "support/stats.hpp"

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. spearman_exact(2) = 2/3 within 1e-12, under 1 ms.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double rho = kextremal::spearman_exact(2).value;
  const double ms = elapsed_ms(t0);
  const double err = std::abs(rho - 2.0 / 3.0);
  report(1, "exact Spearman rho_2 = 2/3", err <= 1e-12 && ms < 1.0,
         "err=" + std::to_string(err) + ", " + std::to_string(ms) + " ms");
}

// 2. kendall_mc(2, 5e5) within 3 se of 1/2.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto tau = kextremal::kendall_mc(2, 500000, 2026);
  const double ms = elapsed_ms(t0);
  const double dev = std::abs(tau.value - 0.5);
  report(2, "Kendall MC tau_2 = 1/2",
         dev <= 3.0 * tau.std_error && ms < 30000.0,
         "dev=" + std::to_string(dev) +
             ", 3se=" + std::to_string(3.0 * tau.std_error));
}

// 3. Decay of rho_K; tau bounds for K <= 8.
void criterion_3() {
  bool ok = true;
  std::string detail;
  double rho2 = 0.0, rho128 = 0.0;
  for (int K : {2, 4, 8, 16, 32, 64, 128}) {
    const double rho = kextremal::spearman_exact(K).value;
    if (!(rho > 0.0)) ok = false;
    if (K == 2) rho2 = rho;
    if (K == 128) rho128 = rho;
  }
  if (!(rho128 < rho2 / 2.0)) ok = false;
  for (int K = 2; K <= 8; ++K) {
    const auto tau = kextremal::kendall_mc(K, 200000, 100 + K);
    const auto rho = kextremal::spearman_mc(K, 200000, 200 + K);
    if (!(tau.value >= -4.0 * tau.std_error)) ok = false;
    if (!(tau.value <= rho.value + 4.0 * (tau.std_error + rho.std_error)))
      ok = false;
  }
  detail = "rho_2=" + std::to_string(rho2) +
           ", rho_128=" + std::to_string(rho128);
  report(3, "rho decays, 0 <= tau <= rho within MC slack", ok, detail);
}

// 4. Copula universality across the three shape regimes.
void criterion_4() {
  using kextremal::GevParams;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(404);
  std::uniform_real_distribution<double> dist(1e-3, 1.0 - 1e-3);
  double worst = 0.0;
  for (const auto& p :
       {GevParams{0, 1, 0}, GevParams{1, 2, 0.5}, GevParams{0, 1, -0.5}}) {
    for (int K : {2, 3, 5}) {
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> u(static_cast<std::size_t>(K));
        for (double& x : u) x = dist(gen);
        std::vector<double> z(u.size());
        for (int m = 1; m <= K; ++m)
          z[static_cast<std::size_t>(m) - 1] = kextremal::gev_quantile(
              p, m, u[static_cast<std::size_t>(m) - 1]);
        worst = std::max(worst, std::abs(kextremal::copula_cdf(u) -
                                         kextremal::mgev_cdf(p, z)));
      }
    }
  }
  const double ms = elapsed_ms(t0);
  report(4, "copula does not depend on (mu, sigma, xi)",
         worst <= 1e-9 && ms < 10000.0,
         "max |C - Sklar| = " + std::to_string(worst));
}

// 5. Density normalization: quadrature (K=2), MC (K=3).
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const double quad = kxtest::adaptive_quad(
      [&](double u2) {
        const double v2 = kextremal::psi(2, u2).v;
        return kxtest::adaptive_quad(
            [&](double u1) {
              const std::array<double, 2> u{u1, u2};
              return kextremal::copula_density(
                  std::span<const double>(u.data(), 2));
            },
            v2, 1.0 - 1e-14, 1e-10);
      },
      1e-10, 1.0 - 1e-10, 1e-9);
  kextremal::Substream rng(505, 0);
  const std::size_t n_mc = 10000000;
  double sum = 0.0;
  std::array<double, 3> u3;
  for (std::size_t i = 0; i < n_mc; ++i) {
    for (double& x : u3) x = rng.uniform01();
    sum += kextremal::copula_density(std::span<const double>(u3.data(), 3));
  }
  const double mc = sum / static_cast<double>(n_mc);
  const double ms = elapsed_ms(t0);
  const bool ok = std::abs(quad - 1.0) <= 1e-6 &&
                  std::abs(mc - 1.0) <= 0.01 && ms < 60000.0;
  report(5, "copula density integrates to 1", ok,
         "quad K=2: " + std::to_string(quad) +
             ", MC K=3: " + std::to_string(mc) + ", " + std::to_string(ms) +
             " ms");
}

// 6. Mixed second differences of the CDF match the density (K=2).
void criterion_6() {
  const double h = 1e-4;
  std::mt19937_64 gen(606);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  auto C = [](double a, double b) {
    return kextremal::copula_cdf(std::array<double, 2>{a, b});
  };
  int checked = 0;
  double worst_rel = 0.0;
  while (checked < 25) {
    const double u1 = dist(gen), u2 = dist(gen);
    const std::array<double, 2> u{u1, u2};
    const double dens = kextremal::copula_density(u);
    if (dens == 0.0) continue;
    if (u1 - h <= kextremal::psi(2, u2 + h).v) continue;  // stencil off edge
    const double fd = (C(u1 + h, u2 + h) - C(u1 - h, u2 + h) -
                       C(u1 + h, u2 - h) + C(u1 - h, u2 - h)) /
                      (4.0 * h * h);
    worst_rel = std::max(worst_rel, std::abs(fd - dens) / dens);
    ++checked;
  }
  report(6, "CDF/density consistency at 25 support points",
         worst_rel <= 1e-4, "max rel err = " + std::to_string(worst_rel));
}

// 7. Sampler correctness: KS uniformity, DKW band, conditional law.
void criterion_7() {
  const std::size_t n = 100000;
  bool ok = true;
  const auto batch4 = kextremal::sample_batch(4, n, 707);
  for (int m = 0; m < 4; ++m) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = batch4.at(i, m);
    if (!kxtest::ks_uniform_pass(std::move(col), 0.01)) ok = false;
  }
  // Conditional law: scaled chain ratios uniform within deciles of u_{m-1}.
  for (int m = 2; m <= 4; ++m) {
    std::vector<std::vector<double>> bins(10);
    for (std::size_t i = 0; i < n; ++i) {
      const auto b = std::min<std::size_t>(
          9, static_cast<std::size_t>(batch4.at(i, m - 2) * 10.0));
      bins[b].push_back(batch4.chain_at(i, m - 1) /
                        batch4.chain_at(i, m - 2));
    }
    for (auto& bin : bins)
      if (!kxtest::ks_uniform_pass(std::move(bin), 0.01)) ok = false;
  }
  // Empirical CDF vs copula_cdf at 20 points, DKW-style band.
  const auto batch3 = kextremal::sample_batch(3, n, 708);
  const double band =
      3.0 * std::sqrt(std::log(40.0) / (2.0 * static_cast<double>(n)));
  std::mt19937_64 gen(709);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  double worst = 0.0;
  for (int g = 0; g < 20; ++g) {
    std::array<double, 3> u;
    for (double& x : u) x = dist(gen);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (batch3.at(i, 0) <= u[0] && batch3.at(i, 1) <= u[1] &&
          batch3.at(i, 2) <= u[2])
        ++count;
    const double emp = static_cast<double>(count) / static_cast<double>(n);
    worst = std::max(worst, std::abs(emp - kextremal::copula_cdf(u)));
  }
  if (worst >= band) ok = false;
  report(7, "sampler: uniform margins, DKW band, conditional law", ok,
         "max CDF dev = " + std::to_string(worst) +
             ", band = " + std::to_string(band));
}

// 8. J-polynomial oracles.
void criterion_8() {
  bool ok = true;
  double worst_diag = 0.0;
  for (int m = 1; m <= 10; ++m) {
    for (double x : {0.0, 0.5, 1.0, 2.5, 6.0}) {
      const std::vector<double> xs(static_cast<std::size_t>(m), x);
      worst_diag = std::max(worst_diag, std::abs(kextremal::j_eval(xs) - 1.0));
    }
  }
  if (worst_diag > 1e-9) ok = false;
  // Iterated integral: nested quadrature vs exp(-x_m) J_m, m <= 4.
  std::function<double(const std::vector<double>&, int, double)> nested =
      [&](const std::vector<double>& w, int level, double upper) -> double {
    if (level == 0) return 1.0;
    return kxtest::adaptive_quad(
        [&](double x) {
          const double weight =
              (level == static_cast<int>(w.size())) ? std::exp(-x) : 1.0;
          return weight * nested(w, level - 1, x);
        },
        w[static_cast<std::size_t>(level) - 1], upper, 1e-9);
  };
  double worst_int = 0.0;
  const std::vector<std::vector<double>> chains{
      {0.4}, {0.3, 1.1}, {0.2, 0.7, 1.5}, {0.1, 0.5, 1.0, 1.9}};
  for (const auto& w : chains) {
    const double oracle = nested(w, static_cast<int>(w.size()), w.back() + 50.0);
    const double closed = std::exp(-w.back()) * kextremal::j_eval(w);
    worst_int = std::max(worst_int, std::abs(closed - oracle));
  }
  if (worst_int > 1e-6) ok = false;
  report(8, "J diagonal identity and iterated-integral oracle", ok,
         "diag err = " + std::to_string(worst_diag) +
             ", integral err = " + std::to_string(worst_int));
}

// 9. Convergence harness.
void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const std::vector<std::size_t> ns{50, 500, 5000};
  const auto rows = kextremal::convergence_report(
      {kextremal::ParentFamily::uniform}, ns, 2, 5000, 200, 99);
  if (!(rows[2].distance < rows[0].distance)) ok = false;
  if (!(rows[2].distance < 2.0 * rows[2].mc_floor)) ok = false;
  const std::vector<std::size_t> one{1000};
  const auto ru = kextremal::convergence_report(
      {kextremal::ParentFamily::uniform}, one, 3, 5000, 200, 910);
  const auto re = kextremal::convergence_report(
      {kextremal::ParentFamily::exponential}, one, 3, 5000, 200, 911);
  if (!(std::abs(ru[0].distance - re[0].distance) < 2.0 * ru[0].mc_floor))
    ok = false;
  // Analytic n=2 oracle: joint CDF of (max, min) of two iid uniforms.
  const std::size_t N = 20000;
  const auto reps = kextremal::order_stats_replicates(
      {kextremal::ParentFamily::uniform}, 2, 2, N, 912);
  const double band = std::sqrt(std::log(2.0 * 25.0 / 0.001) / (2.0 * N));
  double worst = 0.0;
  for (double u = 0.1; u < 1.0; u += 0.2) {
    for (double v = 0.1; v < 1.0; v += 0.2) {
      const double vv = std::min(u, v);
      const double analytic = 2.0 * u * vv - vv * vv;
      std::size_t count = 0;
      for (std::size_t r = 0; r < N; ++r)
        if (reps[2 * r] <= u && reps[2 * r + 1] <= v) ++count;
      worst = std::max(
          worst, std::abs(static_cast<double>(count) / N - analytic));
    }
  }
  if (worst >= band) ok = false;
  const double ms = elapsed_ms(t0);
  if (ms >= 300000.0) ok = false;
  report(9, "empirical convergence and parent invariance", ok,
         "d(50)=" + std::to_string(rows[0].distance) +
             ", d(5000)=" + std::to_string(rows[2].distance) + ", floor=" +
             std::to_string(rows[2].mc_floor) + ", " + std::to_string(ms) +
             " ms");
}

// 10. Figure reproduction via the CLI.
void criterion_10() {
  const std::string cmd =
      std::string(KX_CLI_PATH) + " sample --k 4 --n 200 --seed 0";
  FILE* pipe = popen(cmd.c_str(), "r");
  bool ok = pipe != nullptr;
  std::size_t data_rows = 0;
  if (pipe) {
    char buf[4096];
    bool header = true;
    while (std::fgets(buf, sizeof(buf), pipe)) {
      if (header) {
        header = false;
        continue;
      }
      std::array<double, 4> u;
      if (std::sscanf(buf, "%lf,%lf,%lf,%lf", &u[0], &u[1], &u[2], &u[3]) !=
          4) {
        ok = false;
        break;
      }
      ++data_rows;
      try {
        if (!kextremal::support_check(u).in_support) ok = false;
      } catch (...) {
        ok = false;
      }
    }
    if (pclose(pipe) != 0) ok = false;
  }
  if (data_rows != 200) ok = false;
  report(10, "figure data: 200 in-support rows from the 4-extremal copula",
         ok, std::to_string(data_rows) + " rows");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
