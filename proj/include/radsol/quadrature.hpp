#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "radsol/common.hpp"

namespace radsol {

// Composite Simpson quadrature on finite intervals plus truncated line and
// Laplace-type integrals. All reductions run left to right through a single
// compensated long-double accumulator, so results are bit-reproducible across
// runs and thread counts.

struct QuadSpec {
  double step = 0.01;       // target sample spacing h; panel counts are forced even
  double trunc_tol = 1e-12; // truncation tolerance for infinite domains
};

// Neumaier-compensated sum.
class NeumaierSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

// Smallest even panel count >= length/max_step (at least 2).
int even_panels(double length, double max_step);

// min(step, pi/(20*omega)): keeps >= 40 samples per oscillation of e^{i omega t}.
double oscillation_capped_step(double step, double omega);

// Truncation horizon T with e^{-(re_z+rho_eff) T} (1+amp) <= tol, per the
// |L[f](z)| <= ||f||_rho / (Re z + rho) bound.
double laplace_horizon(double re_z, double rho_eff, double amp_bound, double trunc_tol);

// Composite Simpson with weights h/3 * {1,4,2,...,2,4,1}; exact for cubics.
// Rejects odd n_panels (std::invalid_argument) and non-finite samples
// (numeric_error).
cplx simpson(const std::function<cplx(double)>& f, double a, double b, int n_panels);

// Simpson over consecutive pieces pts[0] < pts[1] < ... < pts.back(), each
// piece with an even panel count at spacing <= max_step. Placing integrand
// kinks on piece boundaries restores full Simpson order.
cplx simpson_pieces(const std::function<cplx(double)>& f, std::span<const double> pts,
                    double max_step);

// Truncation of an integral over R to [-radius, radius].
cplx integrate_line(const std::function<cplx(double)>& f, const QuadSpec& spec, double radius);

// Simpson approximation of int_0^T e^{-z t} f(t) dt.
cplx laplace_trunc(const std::function<cplx(double)>& f, cplx z, double T, double step);

// Simpson over integer-indexed samples f(0..n-1) with spacing h, (n-1) even.
// The reduction is chunked on a fixed grid and combined in chunk order, so it
// may execute in parallel without changing a single bit of the result.
double simpson_indexed(int n, double h, const std::function<double(int)>& f);

// Simpson weight (1, 4 or 2) of sample j among n samples.
inline double simpson_weight(int j, int n) {
  if (j == 0 || j == n - 1) return 1.0;
  return (j % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace radsol
