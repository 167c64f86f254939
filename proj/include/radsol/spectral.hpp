#pragma once

#include <vector>

#include "radsol/common.hpp"
#include "radsol/profile.hpp"
#include "radsol/quadrature.hpp"

namespace radsol {

// Laplace-side analysis of the amplitude dynamics. The memory kernel is
// k_w(t) = cos(w t) q*q(t); its transform
//   K_w(z) = (1/2) L[q*q](z + iw) + (1/2) L[q*q](z - iw)
// is analytic for Re(z) > -rho. The resolvent V_w(z) = 1/(z + K_w(z)) has a
// single simple real pole at z = -theta_w in the strip Re(z) >= -rho/2; the
// amplitude decays like a0 r_w e^{-theta_w t} with residue
// r_w = 1/(1 + K'_w(-theta_w)). At z = 0 the kernel collapses to
// K_w(0) = 2 pi^2 q^(w)^2, the leading decay-rate asymptote.

struct ThetaResult {
  double theta = 0.0;             // decay rate, negated pole location
  double residue = 1.0;           // r_w = 1/(1 + K'_w(-theta_w))
  double theta_asymptotic = 0.0;  // 2 pi^2 q^(w)^2
  int newton_iters = 0;
  double final_residual = 0.0;    // |s + K_w(s)| at the accepted root
  bool used_bisection = false;
};

// Quadrature table for one (profile, omega): autocorrelation samples on a
// fixed Simpson grid, evaluated and accumulated in long double so that the
// near-total cancellation in K_w(0) (values down to ~1e-13 from O(1)
// integrands) still comes out to ~1e-10 relative accuracy.
class SpectralKernel {
 public:
  // spec.step <= 0 picks the kernel default min(0.0025, pi/(20 w));
  // spec.trunc_tol <= 0 picks 1e-16.
  SpectralKernel(const Profile& p, double omega, QuadSpec spec = {0.0, 0.0});

  // Frequency-shifted Laplace pair (primary route).
  cplx K(cplx z) const;
  // Equivalent direct form int_0^T e^{-zt} cos(w t) q*q(t) dt (cross-check).
  cplx K_direct(cplx z) const;
  // Moment identity K'(z) = -L[t k_w(t)](z); no finite differences.
  cplx K_prime(cplx z) const;

  double omega() const { return omega_; }
  double rho() const { return rho_; }
  double horizon() const { return horizon_; }

 private:
  void require_in_strip(cplx z) const;

  double omega_ = 0.0;
  double rho_ = 1.0;
  double horizon_ = 0.0;
  std::vector<long double> t_, w_, qq_;  // nodes, Simpson weights (incl. h/3), q*q samples
};

// 2 pi^2 q^(omega)^2, the leading term of theta_w.
double theta_asymptotic(const Profile& p, double omega);

// One-shot kernel evaluations.
cplx K(const Profile& p, double omega, cplx z, QuadSpec spec = {0.0, 0.0});
cplx K_prime(const Profile& p, double omega, cplx z, QuadSpec spec = {0.0, 0.0});

// Newton iteration on the real axis for s + K_w(s) = 0 starting from
// s0 = -theta_asymptotic, with bisection fallback on
// [-2 theta_asymptotic - 1e-3, 0]. Throws numeric_error when both fail
// (omega below the validated regime).
ThetaResult find_theta(const Profile& p, double omega, QuadSpec spec = {0.0, 0.0});

// sup over [0, 3 * support_radius] of e^{rho_eff t} |q*q(t)|, sampled;
// used for diagnostic windows and truncation horizons.
double autocorr_rho_norm(const Profile& p, double rho_eff);

}  // namespace radsol
