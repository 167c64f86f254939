#include "radsol/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

namespace radsol {

namespace {

// sup over u >= 0 of e^{rho_eff u} |q(u)|, sampled; amplitude bound for the
// sigma truncation horizon.
double q_rho_norm(const Profile& p, double rho_eff) {
  const double R = p.compact_support() ? 1.0 : 3.0 * p.support_radius(1e-14);
  double sup = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double u = R * i / 2000.0;
    sup = std::max(sup, std::exp(rho_eff * u) * std::fabs(p.q(u)));
  }
  return sup;
}

cplx q_laplace(const Profile& p, double theta, double omega, double l, QuadSpec spec) {
  if (!(theta < p.rho()))
    throw std::domain_error("sigma: theta = " + std::to_string(theta) +
                            " >= rho = " + std::to_string(p.rho()) +
                            ", Laplace integral diverges");
  double step = spec.step > 0 ? spec.step : 0.01;
  step = oscillation_capped_step(step, omega);
  if (!p.breakpoints().empty()) step = std::min(step, 2e-3);  // kinked profiles
  const double tol = spec.trunc_tol > 0 ? spec.trunc_tol : 1e-12;
  const cplx z(-theta, -omega);

  double t_lo = 0.0, t_hi;
  if (p.compact_support()) {
    // q(t + l) lives on t in [-1 - l, 1 - l]
    t_lo = std::max(0.0, -1.0 - l);
    t_hi = 1.0 - l;
    if (!(t_hi > t_lo)) return {0.0, 0.0};
  } else {
    const double rho_eff = 0.9 * p.rho();
    const double rate = rho_eff - theta;
    if (!(rate > 0))
      throw std::domain_error("sigma: theta too close to rho for the truncation bound");
    const double amp = q_rho_norm(p, rho_eff) * std::exp(-rho_eff * l);
    t_hi = laplace_horizon(0.0, rate, amp, tol);
    if (!(t_hi > 0)) return {0.0, 0.0};
  }

  std::vector<double> pts{t_lo};
  for (double b : p.breakpoints()) {
    for (double s : {-b - l, b - l})
      if (s > t_lo && s < t_hi) pts.push_back(s);
  }
  pts.push_back(t_hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  return simpson_pieces([&](double t) { return std::exp(-z * t) * p.q(t + l); }, pts, step);
}

}  // namespace

cplx sigma_at(const Profile& p, const ThetaResult& theta, double omega, double l,
              const QuadSpec& spec) {
  return q_laplace(p, theta.theta, omega, l, spec);
}

cplx sigma_formal_at(const Profile& p, double omega, double l, const QuadSpec& spec) {
  return q_laplace(p, 0.0, omega, l, spec);
}

SigmaProfile sigma_profile(const Profile& p, const ThetaResult& theta, double omega,
                           std::vector<double> l_grid, const QuadSpec& spec) {
  SigmaProfile sp;
  sp.l_grid = std::move(l_grid);
  sp.far_field_ref = 2.0 * kPi * p.hat(-omega);
  sp.sigma.resize(sp.l_grid.size());
  sp.sigma_formal.resize(sp.l_grid.size());
  sp.near_field_ref.resize(sp.l_grid.size());
  for (std::size_t i = 0; i < sp.l_grid.size(); ++i) {
    const double l = sp.l_grid[i];
    sp.sigma[i] = q_laplace(p, theta.theta, omega, l, spec);
    sp.sigma_formal[i] =
        theta.theta == 0.0 ? sp.sigma[i] : q_laplace(p, 0.0, omega, l, spec);
    sp.near_field_ref[i] = cplx(0.0, p.q(l) / omega);
  }
  return sp;
}

SigmaProfile sigma_profile(const Profile& p, const ThetaResult& theta, double omega,
                           double l_min, double l_max, double dl, const QuadSpec& spec) {
  if (!(dl > 0) || !(l_max > l_min)) throw std::invalid_argument("sigma_profile: bad l grid");
  std::vector<double> grid;
  const int n = static_cast<int>(std::floor((l_max - l_min) / dl + 1e-9));
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) grid.push_back(l_min + i * dl);
  return sigma_profile(p, theta, omega, std::move(grid), spec);
}

FitResult fit_decay(const TimeSeries& a, double t_lo, double t_hi) {
  const auto [i_lo, i_hi] = a.index_window(t_lo, t_hi);
  if (i_hi < i_lo) throw numeric_error("fit_decay: empty window");

  bool positive = true;
  for (int i = i_lo; i <= i_hi && positive; ++i) positive = a[i] > 0.0;

  std::vector<double> ts, ys;
  if (positive) {
    for (int i = i_lo; i <= i_hi; ++i) {
      ts.push_back(a.t(i));
      ys.push_back(std::log(a[i]));
    }
  } else {
    // envelope of |a| at its local maxima
    for (int i = std::max(i_lo, 1); i <= std::min(i_hi, a.size() - 2); ++i) {
      const double v = std::fabs(a[i]);
      if (v > 0.0 && v >= std::fabs(a[i - 1]) && v >= std::fabs(a[i + 1])) {
        ts.push_back(a.t(i));
        ys.push_back(std::log(v));
      }
    }
  }
  if (ts.size() < 10)
    throw numeric_error("fit_decay: only " + std::to_string(ts.size()) +
                        " usable samples in window (need 10)");

  const double n = static_cast<double>(ts.size());
  double t_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    t_mean += ts[i];
    y_mean += ys[i];
  }
  t_mean /= n;
  y_mean /= n;
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dtc = ts[i] - t_mean;
    stt += dtc * dtc;
    sty += dtc * (ys[i] - y_mean);
  }
  if (!(stt > 0.0)) throw numeric_error("fit_decay: degenerate time window");
  const double slope = sty / stt;
  const double intercept = y_mean - slope * t_mean;

  FitResult fr;
  fr.rate = -slope;
  fr.prefactor = std::exp(intercept);
  fr.t_lo = t_lo;
  fr.t_hi = t_hi;
  fr.n_used = static_cast<int>(ts.size());
  double ss = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = ys[i] - (intercept + slope * ts[i]);
    ss += r * r;
  }
  fr.rms_log_residual = std::sqrt(ss / n);
  return fr;
}

double compare_frame(const FrameSlice& frame, const ThetaResult& theta, const SigmaProfile& sp,
                     double a0, double omega) {
  if (sp.l_grid.size() != frame.psi.size())
    throw std::invalid_argument("compare_frame: sigma grid and frame grid differ in size");
  for (std::size_t k = 0; k < sp.l_grid.size(); ++k) {
    if (std::fabs(sp.l_grid[k] - frame.l(static_cast<int>(k))) > 1e-9)
      throw std::invalid_argument("compare_frame: sigma grid and frame grid are different grids");
  }
  const double decay = a0 * omega * theta.residue * std::exp(-theta.theta * frame.t);
  double peak = 0.0, dev = 0.0, field_peak = 0.0;
  for (std::size_t k = 0; k < sp.l_grid.size(); ++k) {
    const cplx pred = decay * sp.sigma[k];
    peak = std::max(peak, std::abs(pred));
    dev = std::max(dev, std::abs(frame.psi[k] - pred));
    field_peak = std::max(field_peak, std::abs(frame.psi[k]));
  }
  if (peak == 0.0) return field_peak == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return dev / peak;
}

cplx lab_frame_limit(const std::function<cplx(double)>& psi0, const TimeSeries& a,
                     const Profile& p, double omega, double x) {
  const cplx base = psi0 ? psi0(x) : cplx(0.0, 0.0);
  if (a.size() < 3) return base;
  const double R = p.compact_support() ? 1.0 : p.support_radius(1e-12);

  int i_lo = std::max(0, static_cast<int>(std::ceil((x - R - a.t0) / a.dt)));
  int i_hi = std::min(a.size() - 1, static_cast<int>(std::floor((x + R - a.t0) / a.dt)));
  if (i_hi - i_lo + 1 >= 3 && (i_hi - i_lo) % 2 != 0) --i_hi;  // even panel count
  if (i_hi - i_lo + 1 < 3) return base;

  // truncation warning when q's window extends past the recorded series
  if (x + R > a.t_final() + a.dt) {
    const double tail = std::fabs(a[a.size() - 1]) * 2.0 / p.rho();
    if (tail > 1e-6)
      std::cerr << "lab_frame_limit: truncation tail estimate " << tail
                << " exceeds 1e-6 at x = " << x << "\n";
  }

  NeumaierSum re, im;
  const int n = i_hi - i_lo + 1;
  for (int k = 0; k < n; ++k) {
    const double s = a.t(i_lo + k);
    const cplx v = std::exp(cplx(0.0, -omega * s)) * a[i_lo + k] * p.q(x - s);
    const double w = simpson_weight(k, n);
    re.add(w * v.real());
    im.add(w * v.imag());
  }
  const long double scale = static_cast<long double>(a.dt) / 3.0L;
  return base + omega * cplx(static_cast<double>(scale * re.value()),
                             static_cast<double>(scale * im.value()));
}

}  // namespace radsol
