#ifndef KEXTREMAL_DETAIL_MATH_HPP
#define KEXTREMAL_DETAIL_MATH_HPP

#include <array>
#include <cmath>

namespace kextremal::detail {

// log(n!) with exact table up to 170! (the last factorial representable
// in double), lgamma beyond.
inline double lfact(int n) {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    double f = 1.0;
    t[0] = 0.0;
    for (int i = 1; i <= 170; ++i) {
      f *= i;
      t[i] = std::log(f);
    }
    return t;
  }();
  if (n <= 170) return table[static_cast<std::size_t>(n)];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

// Neumaier compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double value() const { return sum + comp; }
};

}  // namespace kextremal::detail

#endif
