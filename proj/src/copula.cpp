#include "kextremal/copula.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kextremal/detail/math.hpp"
#include "kextremal/jpoly.hpp"
#include "kextremal/psi.hpp"

namespace kextremal {

namespace {

void check_interior(std::span<const double> us, const char* what) {
  if (us.empty()) throw std::invalid_argument(std::string(what) + ": empty point");
  for (double u : us)
    if (!(u > 0.0 && u < 1.0))
      throw std::invalid_argument(std::string(what) +
                                  ": coordinates must be in (0,1)");
}

}  // namespace

double mgev_pdf(const GevParams& p, std::span<const double> zs) {
  if (zs.empty()) throw std::invalid_argument("mgev_pdf: empty point");
  if (!omega_support(p, zs)) return 0.0;
  const double lam_last = *lambda_fn(p, zs.back());
  if (std::isinf(lam_last)) return 0.0;
  double log_p = -lam_last;
  for (double z : zs) {
    const double d = *lambda_deriv(p, z);
    log_p += std::log(-d);
  }
  return std::exp(log_p);
}

double mgev_cdf(const GevParams& p, std::span<const double> zs) {
  const int K = static_cast<int>(zs.size());
  if (K < 1) throw std::invalid_argument("mgev_cdf: empty point");
  // Lambda at the running minima; Lambda is decreasing so the chain of
  // Lambda-values is nondecreasing. Coordinates past the upper endpoint
  // contribute Lambda = 0; a minimum at or below the lower endpoint forces
  // the whole CDF to 0.
  std::vector<double> lam(static_cast<std::size_t>(K));
  double running = zs[0];
  for (int k = 0; k < K; ++k) {
    running = std::min(running, zs[k]);
    if (p.xi > kXiZeroTol && running <= p.mu - p.sigma / p.xi) return 0.0;
    double value;
    if (p.xi < -kXiZeroTol && running >= p.mu - p.sigma / p.xi) {
      value = 0.0;
    } else {
      value = *lambda_fn(p, running);
    }
    if (std::isinf(value)) return 0.0;
    lam[static_cast<std::size_t>(k)] = value;
  }
  if (lam.back() > 745.0) return 0.0;  // exp underflows anyway
  return std::exp(-lam.back()) * j_eval(lam);
}

SupportFlag support_check(std::span<const double> us) {
  check_interior(us, "support_check");
  SupportFlag flag;
  flag.psi_chain.reserve(us.size());
  flag.in_support = true;
  for (std::size_t j = 0; j < us.size(); ++j) {
    const double v = psi(static_cast<int>(j) + 1, us[j]).v;
    if (j > 0 && !(flag.psi_chain.back() > v)) flag.in_support = false;
    flag.psi_chain.push_back(v);
  }
  return flag;
}

double copula_density(std::span<const double> us) {
  check_interior(us, "copula_density");
  const int K = static_cast<int>(us.size());
  // t_j = -log psi_j(u_j); the support condition is t strictly increasing.
  std::vector<double> t(static_cast<std::size_t>(K));
  for (int j = 0; j < K; ++j) {
    t[static_cast<std::size_t>(j)] =
        (j == 0) ? -std::log(us[0]) : t_of_u(j + 1, us[static_cast<std::size_t>(j)]);
    if (j > 0 && !(t[static_cast<std::size_t>(j)] > t[static_cast<std::size_t>(j) - 1]))
      return 0.0;
  }
  // c_K = [prod_{j<K} psi_j(u_j) t_j^{j-1}/(j-1)!]^{-1}
  //       * [t_K^{K-1}/(K-1)!]^{-1}, assembled in log space.
  double log_c = 0.0;
  for (int j = 1; j < K; ++j) {
    const double tj = t[static_cast<std::size_t>(j) - 1];
    log_c += tj + detail::lfact(j - 1);
    if (j > 1) log_c -= (j - 1) * std::log(tj);
  }
  const double tK = t[static_cast<std::size_t>(K) - 1];
  log_c += detail::lfact(K - 1);
  if (K > 1) log_c -= (K - 1) * std::log(tK);
  return std::exp(log_c);
}

double copula_cdf(std::span<const double> us) {
  const int K = static_cast<int>(us.size());
  if (K < 1) throw std::invalid_argument("copula_cdf: empty point");
  for (double u : us) {
    if (!(u >= 0.0 && u <= 1.0))
      throw std::invalid_argument("copula_cdf: coordinates must be in [0,1]");
    if (u == 0.0) return 0.0;
  }
  // Running-minimum chain in psi space, carried as w = -log v so the
  // running min becomes a running max. Coordinates at 1 have w = 0.
  std::vector<double> w(static_cast<std::size_t>(K));
  double running = 0.0;
  for (int k = 0; k < K; ++k) {
    const double u = us[static_cast<std::size_t>(k)];
    double tk = 0.0;
    if (u < 1.0) tk = (k == 0) ? -std::log(u) : t_of_u(k + 1, u);
    running = std::max(running, tk);
    w[static_cast<std::size_t>(k)] = running;
  }
  if (w.back() > 745.0) return 0.0;
  return std::exp(-w.back()) * j_eval(w);
}

double bivariate_margin_cdf(int l, int m, double u, double v) {
  if (l < 1 || l >= m)
    throw std::invalid_argument("bivariate_margin_cdf: need 1 <= l < m");
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("bivariate_margin_cdf: u,v must be in [0,1]");
  std::vector<double> point(static_cast<std::size_t>(m), 1.0);
  point[static_cast<std::size_t>(l) - 1] = u;
  point[static_cast<std::size_t>(m) - 1] = v;
  return copula_cdf(point);
}

}  // namespace kextremal
