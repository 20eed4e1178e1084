#ifndef KEXTREMAL_COPULA_HPP
#define KEXTREMAL_COPULA_HPP

#include <span>
#include <vector>

#include "kextremal/gev.hpp"

namespace kextremal {

// Result of the copula support test, carrying the psi chain
// (psi_1(u_1),...,psi_K(u_K)) for reuse. The point is in the support iff
// the chain is strictly decreasing.
struct SupportFlag {
  bool in_support = false;
  std::vector<double> psi_chain;
};

// Joint density of the limiting K largest order statistics:
// (-1)^K exp(-Lambda(z_K)) * prod_j Lambda'(z_j) on Omega_xi, else 0.
double mgev_pdf(const GevParams& p, std::span<const double> zs);

// Joint CDF via running minima m_k = min(z_1..z_k) and
// H_K = exp(-Lambda(m_K)) * J_K(Lambda(m_1),...,Lambda(m_K)).
double mgev_cdf(const GevParams& p, std::span<const double> zs);

// Strictly interior coordinates required; throws std::invalid_argument
// otherwise.
SupportFlag support_check(std::span<const double> us);

// Copula density c_K; zero off the support, strictly positive on it.
// Interior coordinates required.
double copula_density(std::span<const double> us);

// Copula CDF C_K on the closed unit cube. Any zero coordinate gives 0;
// coordinates equal to 1 drop out of the running-minimum chain.
double copula_cdf(std::span<const double> us);

// C_{l,m}(u,v): the bivariate margin for coordinates l < m, obtained by
// setting every other coordinate to 1.
double bivariate_margin_cdf(int l, int m, double u, double v);

}  // namespace kextremal

#endif
