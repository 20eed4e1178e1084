#ifndef KEXTREMAL_PSI_HPP
#define KEXTREMAL_PSI_HPP

namespace kextremal {

// One evaluation of the increasing map psi_m: (0,1) -> (0,1) defined by
// u = v * sum_{j<m} (-1)^j (log v)^j / j! with v = psi_m(u). Writing
// t = -log v turns the implicit equation into u = exp(-t) * sum_{j<m} t^j/j!,
// i.e. t is the inverse of the regularized upper incomplete gamma function
// with integer shape m. psi_1 is the identity.
struct PsiValue {
  int m;
  double u;
  double v;  // psi_m(u)
  double t;  // -log v
};

// log of exp(-t) * sum_{j=0}^{m-1} t^j/j!, evaluated as a log-sum-exp so it
// stays finite for t well past 700.
double log_partial_exp_sum(int m, double t);

// Solves exp(-t) * sum_{j<m} t^j/j! = u for t >= 0. Safeguarded Newton on a
// monotone bracket; throws NumericError (with the final bracket) if the
// 200-iteration cap is hit, std::invalid_argument for u outside (0,1).
double t_of_u(int m, double u);

PsiValue psi(int m, double u);

// Explicit inverse: u = v * sum_{j<m} (-1)^j (log v)^j/j!. No root-finding.
double psi_inv(int m, double v);

// Same inverse parameterized by t = -log v; usable when v itself would
// underflow.
double psi_inv_from_t(int m, double t);

// d(psi_m)/du = (m-1)! / t^(m-1) with t = -log psi_m(u).
double psi_deriv(int m, double u);

}  // namespace kextremal

#endif
