#include "radsol/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace radsol {

namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr double kNewtonTol = 1e-14;
constexpr int kNewtonMaxIter = 50;

cld exp_cld(cld z) {
  const ld m = std::exp(z.real());
  return {m * std::cos(z.imag()), m * std::sin(z.imag())};
}

}  // namespace

double autocorr_rho_norm(const Profile& p, double rho_eff) {
  const double R = p.compact_support() ? 2.0 : 3.0 * p.support_radius(1e-14);
  double sup = 0.0;
  for (int i = 0; i <= 3000; ++i) {
    const double t = R * i / 3000.0;
    sup = std::max(sup, std::exp(rho_eff * t) * std::fabs(p.autocorr(t)));
  }
  return sup;
}

SpectralKernel::SpectralKernel(const Profile& p, double omega, QuadSpec spec) {
  if (!(omega > 0)) throw std::invalid_argument("SpectralKernel: omega must be positive");
  omega_ = omega;
  rho_ = p.rho();

  double step = spec.step > 0 ? spec.step : 0.0025;
  step = oscillation_capped_step(step, omega);
  const double tol = spec.trunc_tol > 0 ? spec.trunc_tol : 1e-16;

  // rho_eff below the nominal rate absorbs polynomial factors in q*q
  // (e.g. 2t/sinh t ~ 4t e^{-t}); the extra (1 + T) covers the t-weighted
  // integrand of K'.
  if (p.compact_support()) {
    horizon_ = 2.0;
  } else {
    const double rho_eff = 0.9 * rho_;
    const double amp = autocorr_rho_norm(p, rho_eff);
    const double t0 = laplace_horizon(0.0, rho_eff, amp, tol);
    horizon_ = laplace_horizon(0.0, rho_eff, amp * (1.0 + t0), tol);
  }

  // piece boundaries on kinks of q*q keep composite Simpson at full order
  std::vector<double> pts{0.0};
  for (double b : p.autocorr_breakpoints())
    if (b > 0.0 && b < horizon_) pts.push_back(b);
  pts.push_back(horizon_);

  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const int n = even_panels(pts[k + 1] - pts[k], step);
    const ld a = pts[k];
    const ld h = (static_cast<ld>(pts[k + 1]) - a) / n;
    for (int j = 0; j <= n; ++j) {
      const ld t = (j == n) ? static_cast<ld>(pts[k + 1]) : a + j * h;
      t_.push_back(t);
      w_.push_back(h / 3.0L * static_cast<ld>(simpson_weight(j, n + 1)));
      qq_.push_back(p.autocorr_ld(t));
    }
  }
}

void SpectralKernel::require_in_strip(cplx z) const {
  if (!(z.real() > -0.5 * rho_))
    throw std::domain_error("K: Re(z) = " + std::to_string(z.real()) +
                            " outside validated strip Re(z) > -rho/2 = " +
                            std::to_string(-0.5 * rho_));
}

cplx SpectralKernel::K(cplx z) const {
  require_in_strip(z);
  const cld zp(static_cast<ld>(z.real()), static_cast<ld>(z.imag()) + static_cast<ld>(omega_));
  const cld zm(static_cast<ld>(z.real()), static_cast<ld>(z.imag()) - static_cast<ld>(omega_));
  NeumaierSum re, im;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const cld e = exp_cld(-zp * t_[i]) + exp_cld(-zm * t_[i]);
    const ld c = 0.5L * w_[i] * qq_[i];
    re.add(c * e.real());
    im.add(c * e.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

cplx SpectralKernel::K_direct(cplx z) const {
  require_in_strip(z);
  const cld zl(static_cast<ld>(z.real()), static_cast<ld>(z.imag()));
  NeumaierSum re, im;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const cld e = exp_cld(-zl * t_[i]) * std::cos(static_cast<ld>(omega_) * t_[i]);
    const ld c = w_[i] * qq_[i];
    re.add(c * e.real());
    im.add(c * e.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

cplx SpectralKernel::K_prime(cplx z) const {
  require_in_strip(z);
  const cld zl(static_cast<ld>(z.real()), static_cast<ld>(z.imag()));
  const ld om = static_cast<ld>(omega_);
  NeumaierSum re, im;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const cld e = exp_cld(-zl * t_[i]) * std::cos(om * t_[i]);
    const ld c = -w_[i] * t_[i] * qq_[i];
    re.add(c * e.real());
    im.add(c * e.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

double theta_asymptotic(const Profile& p, double omega) {
  const double h = p.hat(omega);
  return 2.0 * kPi * kPi * h * h;
}

cplx K(const Profile& p, double omega, cplx z, QuadSpec spec) {
  return SpectralKernel(p, omega, spec).K(z);
}

cplx K_prime(const Profile& p, double omega, cplx z, QuadSpec spec) {
  return SpectralKernel(p, omega, spec).K_prime(z);
}

ThetaResult find_theta(const Profile& p, double omega, QuadSpec spec) {
  const SpectralKernel kernel(p, omega, spec);
  ThetaResult out;
  out.theta_asymptotic = theta_asymptotic(p, omega);

  const double strip_edge = -0.5 * p.rho();
  auto g = [&](double s) { return s + kernel.K(cplx(s, 0.0)).real(); };

  // Newton from the asymptote; K is nearly linear there since |K'| << 1
  // for omega in the validated regime. An asymptote outside the strip
  // (omega far too small) goes straight to bisection.
  double s = -out.theta_asymptotic;
  bool newton_ok = false;
  double fs = 0.0;
  int it = 0;
  if (!(s > strip_edge)) {
    s = 0.0;
    fs = g(s);
    it = kNewtonMaxIter;
  } else {
    fs = g(s);
  }
  for (; it < kNewtonMaxIter; ++it) {
    if (std::fabs(fs) <= kNewtonTol) {
      newton_ok = true;
      break;
    }
    const double fp = 1.0 + kernel.K_prime(cplx(s, 0.0)).real();
    if (!std::isfinite(fp) || std::fabs(fp) < 1e-8) break;
    const double s_next = s - fs / fp;
    if (!(s_next > strip_edge) || !std::isfinite(s_next)) break;
    s = s_next;
    fs = g(s);
  }

  if (!newton_ok) {
    // bracket [-2 theta_asym - 1e-3, 0]: g(0) = K(0) >= 0 for the built-ins
    double lo = std::max(-2.0 * out.theta_asymptotic - 1e-3, strip_edge * 0.999);
    double hi = 0.0;
    double glo = g(lo), ghi = g(hi);
    if (!(glo <= 0.0 && ghi >= 0.0))
      throw numeric_error("find_theta: no pole bracket at omega = " + std::to_string(omega) +
                          " (omega below the validated regime)");
    for (int k = 0; k < 200 && hi - lo > 1e-17; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (g(mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    s = 0.5 * (lo + hi);
    fs = g(s);
    out.used_bisection = true;
  }

  out.newton_iters = it;
  out.final_residual = std::fabs(fs);
  // roots below the kernel's extended-precision noise floor are exact zeros
  // of the closed form (tent at sinc zeros), not resolvable decay rates
  out.theta = (std::fabs(s) < 1e-17) ? 0.0 : -s;
  out.residue = 1.0 / (1.0 + kernel.K_prime(cplx(s, 0.0)).real());
  return out;
}

}  // namespace radsol
