#ifndef KEXTREMAL_ERRORS_HPP
#define KEXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kextremal {

// Thrown when an iterative routine fails to converge. Carries the final
// bracket so callers can report where the search stalled.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), bracket_lo(lo), bracket_hi(hi) {}

  double bracket_lo;
  double bracket_hi;
};

}  // namespace kextremal

#endif
