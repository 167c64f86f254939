#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "radsol/common.hpp"
#include "radsol/quadrature.hpp"

namespace radsol {

// Solitary-wave profile q(x): pointwise evaluation, Fourier transform
// q^(k) = (1/2pi) int e^{-ikx} q(x) dx, autocorrelation
// q*q(t) = int q(x+t) q(x) dx, and effective-support logic.
//
// Built-in shapes (width and amplitude fixed at the model normalization):
//   sech      q = sech(x)        q^ = sech(pi k/2)/2        q*q = 2t/sinh(t)
//   gaussian  q = exp(-x^2)      q^ = exp(-k^2/4)/(2 sqrt(pi))
//                                q*q = sqrt(pi/2) exp(-t^2/2)
//   peakon    q = exp(-|x|)      q^ = 1/(pi (1+k^2))        q*q = (1+|t|) e^{-|t|}
//   tent      q = max(1-|x|, 0)  q^ = sinc^2(k/2)/(2pi)     q*q = cubic B-spline on [-2,2]
// sinc is the unnormalized sin(x)/x. All built-ins are even, so q^ is real
// and even and q*q is even.

enum class ProfileKind { Sech, Gaussian, Peakon, Tent, Custom };

class Profile {
 public:
  static Profile sech();
  static Profile gaussian();
  static Profile peakon();
  static Profile tent();
  // Custom shape: q must be even and bounded by C e^{-rho |x|}.
  static Profile custom(std::function<double(double)> eval, double rho);
  // Name lookup for CLI flags / config files: "sech"|"gaussian"|"peakon"|"tent".
  static Profile from_name(std::string_view name);

  ProfileKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  // Decay exponent rho with e^{rho|x|} q(x) bounded. Tent is compactly
  // supported; its rho is a bookkeeping value and support_radius() is 1.
  double rho() const { return rho_; }
  bool has_closed_hat() const { return closed_hat_; }
  bool has_closed_autocorr() const { return closed_autocorr_; }
  bool compact_support() const { return kind_ == ProfileKind::Tent; }

  double q(double x) const;
  long double q_ld(long double x) const;

  // Fourier transform, 1/(2pi) normalization. Custom goes through quadrature.
  double hat(double k) const;
  // Same integral evaluated by quadrature regardless of closed forms
  // (cross-check route for the closed expressions).
  double hat_by_quadrature(double k, const QuadSpec& spec = {0.005, 1e-14}) const;

  // Autocorrelation; even, evaluated at |t|.
  double autocorr(double t) const;
  long double autocorr_ld(long double t) const;
  double autocorr_by_quadrature(double t, const QuadSpec& spec = {0.005, 1e-14}) const;

  // R with |q(x)| <= tol for |x| >= R. Rejects tol outside (0,1).
  double support_radius(double tol) const;

  // Kink locations of q (x >= 0 by evenness; mirrored by callers as needed).
  // Empty for smooth profiles.
  std::vector<double> breakpoints() const;
  // Kink locations of q*q on t > 0.
  std::vector<double> autocorr_breakpoints() const;

 private:
  Profile() = default;

  ProfileKind kind_ = ProfileKind::Custom;
  std::string name_;
  double rho_ = 1.0;
  bool closed_hat_ = false;
  bool closed_autocorr_ = false;
  std::function<double(double)> custom_eval_;
  double custom_sup_bound_ = 0.0;  // sup e^{rho|x|} |q|, sampled at construction
};

// Unnormalized sinc(x) = sin(x)/x.
double sinc(double x);

}  // namespace radsol
