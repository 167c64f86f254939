#pragma once

#include <complex>
#include <stdexcept>

namespace radsol {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Numerical failure (instability, non-convergence, non-finite data).
// The CLI maps this to exit code 2; usage/contract errors map to 1.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radsol
