#include "kextremal/jpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "kextremal/detail/math.hpp"

namespace kextremal {

namespace {

// x^j / j!, accumulated by term ratios so intermediates never overflow
// for the argument ranges the copula produces.
double power_over_factorial(double x, int j) {
  double term = 1.0;
  for (int k = 1; k <= j; ++k) term *= x / k;
  return term;
}

}  // namespace

std::vector<double> j_suffix_table(std::span<const double> xs) {
  const int m = static_cast<int>(xs.size());
  if (m < 1) throw std::invalid_argument("j_suffix_table: empty arguments");
  // out[L-1] = J_L over the suffix of length L.
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int L = 1; L <= m; ++L) {
    const int s = m - L;  // suffix start (0-based)
    const double x_last = xs[m - 1];
    detail::KahanSum acc;
    double head = 1.0;
    acc.add(head);
    for (int j = 1; j < L; ++j) {
      head *= x_last / j;
      acc.add(head);
    }
    for (int j = 1; j < L; ++j) {
      const double w = power_over_factorial(xs[s + j - 1], j);
      acc.add(-w * out[L - j - 1]);
    }
    out[L - 1] = acc.value();
  }
  return out;
}

double j_eval(std::span<const double> xs) {
  return j_suffix_table(xs).back();
}

}  // namespace kextremal
