#pragma once

#include <functional>
#include <vector>

#include "radsol/common.hpp"
#include "radsol/profile.hpp"
#include "radsol/quadrature.hpp"
#include "radsol/sim_field.hpp"
#include "radsol/spectral.hpp"
#include "radsol/time_series.hpp"

namespace radsol {

// Long-time structure of the oscillator field in the frame moving with the
// wave. With Q_l(z) = L[q(. + l)](z), the tail profile is
//   sigma_w(l) = Q_l(-theta_w - i w),
// and psi(t + l, t) ~ a0 w r_w sigma_w(l) e^{-theta_w t}. Its formal theta->0
// limit Q_l(-i w) splits into three regimes:
//   l << 0 :  e^{i w l} Q_l(-i w) -> 2 pi q^(-w)   (trailing periodic wave)
//   l ~  0 :  Q_l(-i w) = i q(l)/w + O(1/w^2)      (copy of the wave)
//   l >> 0 :  exponential decay.
// At theta > 0 the true profile grows like e^{theta |l|} towards the rear
// (older radiation was emitted when the wave was stronger), so the far-field
// comparison against 2 pi q^(-w) is made on the formal profile.

struct SigmaProfile {
  std::vector<double> l_grid;
  std::vector<cplx> sigma;         // Q_l(-theta - i w), the true pole profile
  std::vector<cplx> sigma_formal;  // Q_l(-i w), theta -> 0 limit
  cplx far_field_ref;              // 2 pi q^(-w)
  std::vector<cplx> near_field_ref;  // i q(l)/w
};

struct FitResult {
  double rate = 0.0;       // fitted decay exponent (minus the log-slope)
  double prefactor = 0.0;  // e^{intercept}
  double t_lo = 0.0, t_hi = 0.0;
  double rms_log_residual = 0.0;
  int n_used = 0;
};

// sigma_w(l) by truncated Laplace quadrature; requires theta.theta < rho.
cplx sigma_at(const Profile& p, const ThetaResult& theta, double omega, double l,
              const QuadSpec& spec = {0.0, 0.0});
// Q_l(-i w), the formal profile used for far/near-field references.
cplx sigma_formal_at(const Profile& p, double omega, double l, const QuadSpec& spec = {0.0, 0.0});

SigmaProfile sigma_profile(const Profile& p, const ThetaResult& theta, double omega,
                           std::vector<double> l_grid, const QuadSpec& spec = {0.0, 0.0});
SigmaProfile sigma_profile(const Profile& p, const ThetaResult& theta, double omega,
                           double l_min, double l_max, double dl,
                           const QuadSpec& spec = {0.0, 0.0});

// Ordinary least squares of ln a against t on [t_lo, t_hi]. When the window
// contains non-positive samples, the envelope of |a| at its local maxima is
// fitted instead. Throws numeric_error with fewer than 10 usable samples.
FitResult fit_decay(const TimeSeries& a, double t_lo, double t_hi);

// Default fit window [0.2, 0.9] * t_final: skips the initial transient and
// the last samples.
inline std::pair<double, double> default_fit_window(double t_final) {
  return {0.2 * t_final, 0.9 * t_final};
}

// Relative sup-norm deviation between a recorded frame psi(t + l, t) and
// a0 w r_w sigma(l) e^{-theta t}, normalized by the peak magnitude of the
// prediction (sigma passes through zeros, so pointwise relative error is
// meaningless). The sigma profile must live on the frame's l grid.
double compare_frame(const FrameSlice& frame, const ThetaResult& theta, const SigmaProfile& sp,
                     double a0, double omega);

// psi0(x) + w int_0^T e^{-i w s} a(s) q(x - s) ds, the pointwise lab-frame
// limit of e^{-i w t} psi(x, t). Warns on stderr when the truncation tail
// estimate exceeds 1e-6.
cplx lab_frame_limit(const std::function<cplx(double)>& psi0, const TimeSeries& a,
                     const Profile& p, double omega, double x);

}  // namespace radsol
