#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "radsol/common.hpp"
#include "radsol/profile.hpp"
#include "radsol/time_series.hpp"

namespace radsol {

// Direct lab-frame simulation of the driven oscillator field
//   psi_t = i w psi + w a(t) q(x - t),
//   a'(t) = -(1/w) int Re[psi(x,t)] q(x - t) dx,
// by classical RK4 on a fixed spatial grid with dx = dt locked. psi is
// diagonal in x (no spatial derivatives), so there is no boundary condition;
// the grid bound only keeps the drive's support and recorded frames inside.
// The drive q(x - t) is evaluated from the closed form at every stage time,
// never advected on the grid. The conserved energy
//   E = a^2/2 + (1/(2 w^2)) int |psi|^2 dx
// is tracked as a runtime invariant. Locking dx = dt makes the moving-frame
// slice psi(t + l, t) an exact integer index shift.

struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 1.0;
  int n_points = 0;

  double x(int j) const { return x_min + j * dx; }
  // x_min snapped to an integer multiple of dx, (n_points - 1) forced even,
  // x_max >= t_final + support_radius(p, 1e-14) + 5.
  static Grid for_run(const Profile& p, double t_final, double dx);
  void validate() const;
};

struct FieldState {
  double t = 0.0;
  double a = 0.0;
  Grid grid;
  std::vector<cplx> psi;
};

struct FrameWindow {
  double l_min = 0.0;
  double l_max = 0.0;
};

struct SimConfig {
  Profile profile = Profile::sech();
  double omega = 2.0;
  double a0 = 1.0;
  std::function<cplx(double)> psi0;  // null means psi0 == 0
  double t_final = 200.0;
  double dt = 0.0;  // <= 0 picks the default pi/(10 omega); dx is locked to dt
  int sample_stride = 1;
  std::optional<FrameWindow> frames;  // moving-frame recording window
  std::vector<double> frame_times;    // snapped to steps; empty means {t_final}

  double dt_or_default() const { return dt > 0 ? dt : kPi / (10.0 * omega); }
};

// Moving-frame slice psi(t + l, t), l on a uniform grid of spacing dl = dx.
struct FrameSlice {
  double t = 0.0;
  double l_min = 0.0;
  double dl = 1.0;
  std::vector<cplx> psi;

  int size() const { return static_cast<int>(psi.size()); }
  double l(int k) const { return l_min + k * dl; }
};

struct RunResult {
  TimeSeries a_series;       // a(t) every sample_stride steps
  TimeSeries energy_series;  // E(t) on the same cadence
  FieldState final_state;
  std::vector<FrameSlice> frames;
  double max_energy_drift = 0.0;  // max |E - E0| / E0 over recorded samples
};

// da = -(1/w) Simpson_x(Re(psi) q(x - t_eval)), dpsi_j = i w psi_j + w a q(x_j - t_eval).
// Throws numeric_error when the field has gone non-finite.
void rhs(const FieldState& state, const SimConfig& cfg, double t_eval, double& da,
         std::span<cplx> dpsi);

// One classical RK4 step of length cfg.dt_or_default(); stages evaluate the
// drive at t, t + dt/2, t + dt.
FieldState step_rk4(const FieldState& state, const SimConfig& cfg);

// E = a^2/2 + (1/(2 w^2)) Simpson_x |psi|^2.
double energy(const FieldState& state, const SimConfig& cfg);

FieldState initial_state(const SimConfig& cfg);

RunResult run(const SimConfig& cfg);

}  // namespace radsol
