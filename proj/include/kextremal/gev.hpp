#ifndef KEXTREMAL_GEV_HPP
#define KEXTREMAL_GEV_HPP

#include <optional>
#include <span>

namespace kextremal {

// Location/scale/shape triple of a generalized extreme value distribution.
// sigma must be positive; the sign of xi selects the type (Gumbel for
// xi = 0, Frechet for xi > 0, Weibull for xi < 0).
struct GevParams {
  double mu = 0.0;
  double sigma = 1.0;
  double xi = 0.0;
};

enum class GevType { gumbel, frechet, weibull };

GevType gev_type(const GevParams& p);

// Shape values closer to zero than this are evaluated on the Gumbel branch
// to avoid cancellation in log1p(xi*s)/xi.
inline constexpr double kXiZeroTol = 1e-12;

// The auxiliary function Lambda(z): [1 + xi*(z-mu)/sigma]^(-1/xi) for
// xi != 0, exp(-(z-mu)/sigma) for xi = 0. Strictly decreasing and positive.
// Returns nullopt when z lies outside the shape-dependent domain
// (xi*(z-mu)/sigma <= -1), including the endpoint mu - sigma/xi itself.
std::optional<double> lambda_fn(const GevParams& p, double z);

// d(Lambda)/dz; strictly negative on the domain.
std::optional<double> lambda_deriv(const GevParams& p, double z);

// Marginal CDF of the m-th largest limiting order statistic,
// G_m(z) = exp(-Lambda) * sum_{j<m} Lambda^j/j!. Defined for all real z
// via the 0/1 endpoint conventions.
double gev_cdf(const GevParams& p, int m, double z);

// Marginal density g_m(z) = exp(-Lambda) * |Lambda'| * Lambda^(m-1)/(m-1)!,
// zero outside the domain. (The raw product Lambda' * Lambda^(m-1) is
// negative; the density takes the magnitude.)
double gev_pdf(const GevParams& p, int m, double z);

// Inverse of gev_cdf on (0,1). Throws std::invalid_argument for u outside
// the open interval.
double gev_quantile(const GevParams& p, int m, double u);

// Membership in the joint support Omega_xi: strictly decreasing
// coordinates plus the shape-dependent endpoint constraint.
bool omega_support(const GevParams& p, std::span<const double> zs);

}  // namespace kextremal

#endif
