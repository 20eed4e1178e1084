#ifndef KEXTREMAL_JPOLY_HPP
#define KEXTREMAL_JPOLY_HPP

#include <span>
#include <vector>

namespace kextremal {

// The polynomial family behind the joint CDF representation:
//   J_1 = 1,
//   J_m(x_1,...,x_m) = sum_{j=0}^{m-1} x_m^j/j!
//                      - sum_{j=1}^{m-1} (x_j^j/j!) * J_{m-j}(x_{j+1},...,x_m).
// Arguments are nonnegative (they are Lambda-values / -log psi values).

// J_m(x_1,...,x_m) for m = xs.size(). O(m^2) via the suffix table.
double j_eval(std::span<const double> xs);

// [J_1(x_m), J_2(x_{m-1},x_m), ..., J_m(x_1,...,x_m)]: J over every
// contiguous suffix, bottom-up. The recursion only ever consumes suffixes,
// so one pass computes them all.
std::vector<double> j_suffix_table(std::span<const double> xs);

}  // namespace kextremal

#endif
