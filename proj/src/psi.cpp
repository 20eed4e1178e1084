#include "kextremal/psi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kextremal/detail/math.hpp"
#include "kextremal/errors.hpp"

namespace kextremal {

namespace {

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("psi: m must be >= 1");
}

void check_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0))
    throw std::invalid_argument(std::string(what) + " must be in (0,1)");
}

// log of the j-th Poisson term, -t + j*log t - log j!.
double log_term(int j, double t, double log_t) {
  return -t + j * log_t - detail::lfact(j);
}

}  // namespace

double log_partial_exp_sum(int m, double t) {
  check_m(m);
  if (t < 0.0) throw std::invalid_argument("log_partial_exp_sum: t < 0");
  if (t == 0.0) return 0.0;
  if (m == 1) return -t;
  const double log_t = std::log(t);
  // Largest term sits at j = min(m-1, floor(t)); compare before casting so
  // huge t cannot overflow the int.
  const int jmax =
      (t >= static_cast<double>(m - 1)) ? m - 1 : static_cast<int>(t);
  const double lmax = log_term(jmax, t, log_t);
  detail::KahanSum acc;
  for (int j = 0; j < m; ++j) acc.add(std::exp(log_term(j, t, log_t) - lmax));
  return lmax + std::log(acc.value());
}

double t_of_u(int m, double u) {
  check_m(m);
  check_open_unit(u, "t_of_u: u");
  const double target = std::log(u);
  // f(t) = exp(-t) sum_{j<m} t^j/j! decreases from 1 to 0, so
  // g(t) = log f(t) - log u has a unique root; bracket then expand.
  double lo = 0.0;
  double hi = m + 10.0 * std::sqrt(static_cast<double>(m)) + 50.0;
  while (log_partial_exp_sum(m, hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9)
      throw NumericError("t_of_u: bracket expansion failed", lo, hi);
  }
  double t = std::min(std::max(static_cast<double>(m), lo + 1e-3),
                      0.5 * (lo + hi));
  const int max_iter = 200;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double lf = log_partial_exp_sum(m, t);
    const double g = lf - target;
    if (g > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    if (std::abs(g) <= 1e-14) return t;
    if (hi - lo <= std::max(1e-14, 4.0 * 2.220446049250313e-16 * hi)) {
      return 0.5 * (lo + hi);
    }
    // g'(t) = f'(t)/f(t) with f'(t) = -exp(-t) t^{m-1}/(m-1)!.
    const double log_df =
        -t + (m - 1) * std::log(t) - detail::lfact(m - 1);
    const double gprime = -std::exp(log_df - lf);
    double next = t - g / gprime;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  throw NumericError("t_of_u: no convergence after 200 iterations", lo, hi);
}

PsiValue psi(int m, double u) {
  check_m(m);
  check_open_unit(u, "psi: u");
  if (m == 1) return {1, u, u, -std::log(u)};
  const double t = t_of_u(m, u);
  return {m, u, std::exp(-t), t};
}

double psi_inv(int m, double v) {
  check_m(m);
  check_open_unit(v, "psi_inv: v");
  return psi_inv_from_t(m, -std::log(v));
}

double psi_inv_from_t(int m, double t) {
  check_m(m);
  if (t < 0.0) throw std::invalid_argument("psi_inv_from_t: t < 0");
  return std::exp(log_partial_exp_sum(m, t));
}

double psi_deriv(int m, double u) {
  check_m(m);
  check_open_unit(u, "psi_deriv: u");
  if (m == 1) return 1.0;
  const double t = t_of_u(m, u);
  return std::exp(detail::lfact(m - 1) - (m - 1) * std::log(t));
}

}  // namespace kextremal
