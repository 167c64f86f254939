#pragma once

#include <functional>
#include <optional>

#include "radsol/common.hpp"
#include "radsol/profile.hpp"
#include "radsol/quadrature.hpp"
#include "radsol/time_series.hpp"

namespace radsol {

// Field-free route to the amplitude a(t): the renewal equation
//   a(t) = a0 + f_w(t) + int_0^t phi_w(t-s) a(s) ds,
//   phi_w(t) = -int_0^t cos(w s) q*q(s) ds,
// solved by trapezoidal product integration on a uniform grid. phi_w(0) = 0
// makes the update explicit. The differentiated (delay-ODE) form
//   a'(t) = j_w(t) - int_0^t cos(w(t-s)) q*q(t-s) a(s) ds
// is kept as a residual check only.

struct RenewalConfig {
  Profile profile = Profile::sech();
  double omega = 2.0;
  double a0 = 1.0;
  std::function<cplx(double)> psi0;  // null means psi0 == 0
  double t_final = 200.0;
  double dt = 0.0;  // <= 0 picks the default pi/(20 omega)

  // Replaces phi_w by a constant (the -2 pi^2 q^(w)^2 limit in the
  // discretization check); normal runs leave this unset.
  std::optional<double> phi_constant_override;

  double dt_or_default() const { return dt > 0 ? dt : kPi / (20.0 * omega); }
};

// phi_w(t) for t >= 0; step <= 0 picks pi/(20 omega) capped at 0.005.
double phi(const Profile& p, double omega, double t, double step = 0.0);

// j_w(t) = -(1/w) int Re[e^{iwt} psi0(x)] q(x-t) dx over the supports' overlap.
double j_forcing(const Profile& p, double omega, const std::function<cplx(double)>& psi0,
                 double t, const QuadSpec& spec = {0.005, 1e-14});

TimeSeries solve_renewal(const RenewalConfig& cfg);

// Max over interior grid times of |centered-difference a' - (j_w - conv)|.
double residual_delay_ode(const TimeSeries& a, const RenewalConfig& cfg);

}  // namespace radsol
