#include "kextremal/gev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kextremal/detail/math.hpp"
#include "kextremal/psi.hpp"

namespace kextremal {

namespace {

bool xi_is_zero(double xi) { return std::abs(xi) <= kXiZeroTol; }

}  // namespace

GevType gev_type(const GevParams& p) {
  if (xi_is_zero(p.xi)) return GevType::gumbel;
  return p.xi > 0.0 ? GevType::frechet : GevType::weibull;
}

std::optional<double> lambda_fn(const GevParams& p, double z) {
  const double s = (z - p.mu) / p.sigma;
  if (xi_is_zero(p.xi)) return std::exp(-s);
  const double w = p.xi * s;
  if (w <= -1.0) return std::nullopt;
  // log space: avoids overflow of the power near the lower endpoint.
  return std::exp(-std::log1p(w) / p.xi);
}

std::optional<double> lambda_deriv(const GevParams& p, double z) {
  const double s = (z - p.mu) / p.sigma;
  if (xi_is_zero(p.xi)) return -std::exp(-s) / p.sigma;
  const double w = p.xi * s;
  if (w <= -1.0) return std::nullopt;
  // d/dz [1 + xi*s]^(-1/xi) = -(1/sigma) [1 + xi*s]^(-1/xi - 1)
  return -std::exp(-(1.0 / p.xi + 1.0) * std::log1p(w)) / p.sigma;
}

namespace {

// -1: below the lower endpoint (Lambda = +inf), +1: above the upper
// endpoint (Lambda = 0), 0: interior.
int endpoint_side(const GevParams& p, double z) {
  if (xi_is_zero(p.xi)) return 0;
  const double endpoint = p.mu - p.sigma / p.xi;
  if (p.xi > 0.0 && z <= endpoint) return -1;
  if (p.xi < 0.0 && z >= endpoint) return +1;
  return 0;
}

}  // namespace

double gev_cdf(const GevParams& p, int m, double z) {
  if (m < 1) throw std::invalid_argument("gev_cdf: m must be >= 1");
  const int side = endpoint_side(p, z);
  if (side < 0) return 0.0;
  if (side > 0) return 1.0;
  const double lam = *lambda_fn(p, z);
  if (std::isinf(lam)) return 0.0;
  return std::exp(log_partial_exp_sum(m, lam));
}

double gev_pdf(const GevParams& p, int m, double z) {
  if (m < 1) throw std::invalid_argument("gev_pdf: m must be >= 1");
  if (endpoint_side(p, z) != 0) return 0.0;
  const auto lam = lambda_fn(p, z);
  if (!lam) return 0.0;
  const auto dlam = lambda_deriv(p, z);
  if (std::isinf(*lam) || *lam <= 0.0) return 0.0;
  const double power = (m == 1) ? 0.0 : (m - 1) * std::log(*lam);
  return std::exp(-*lam + power - detail::lfact(m - 1)) * std::abs(*dlam);
}

double gev_quantile(const GevParams& p, int m, double u) {
  if (!(u > 0.0 && u < 1.0))
    throw std::invalid_argument("gev_quantile: u must be in (0,1)");
  const double t = t_of_u(m, u);  // Lambda at the quantile
  if (xi_is_zero(p.xi)) return p.mu - p.sigma * std::log(t);
  // Lambda(z) = t  <=>  z = mu + sigma * (t^(-xi) - 1) / xi
  return p.mu + p.sigma * std::expm1(-p.xi * std::log(t)) / p.xi;
}

bool omega_support(const GevParams& p, std::span<const double> zs) {
  if (zs.empty()) return false;
  for (std::size_t i = 1; i < zs.size(); ++i)
    if (!(zs[i - 1] > zs[i])) return false;
  if (!xi_is_zero(p.xi)) {
    const double endpoint = p.mu - p.sigma / p.xi;
    if (p.xi > 0.0 && !(zs.back() > endpoint)) return false;
    if (p.xi < 0.0 && !(zs.front() < endpoint)) return false;
  }
  return true;
}

}  // namespace kextremal
