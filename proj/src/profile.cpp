#include "radsol/profile.hpp"

#include <algorithm>
#include <cmath>

namespace radsol {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

long double sech_ld(long double x) {
  // coshl overflows near 11356; the true value is then below every tolerance
  const long double c = std::cosh(x);
  return std::isinf(c) ? 0.0L : 1.0L / c;
}

// 2t/sinh(t), even; series 2 - t^2/3 + 7t^4/180 for small |t|
long double sech_autocorr_ld(long double t) {
  t = std::fabs(t);
  if (t < 1e-6L) return 2.0L - t * t / 3.0L + 7.0L * t * t * t * t / 180.0L;
  const long double s = std::sinh(t);
  return std::isinf(s) ? 0.0L : 2.0L * t / s;
}

long double tent_autocorr_ld(long double t) {
  t = std::fabs(t);
  if (t >= 2.0L) return 0.0L;
  if (t <= 1.0L) return 2.0L / 3.0L - t * t + t * t * t / 2.0L;
  const long double u = 2.0L - t;
  return u * u * u / 6.0L;
}

}  // namespace

double sinc(double x) {
  if (std::fabs(x) < 1e-4) return 1.0 - x * x / 6.0 + x * x * x * x / 120.0;
  return std::sin(x) / x;
}

Profile Profile::sech() {
  Profile p;
  p.kind_ = ProfileKind::Sech;
  p.name_ = "sech";
  p.rho_ = 1.0;
  p.closed_hat_ = p.closed_autocorr_ = true;
  return p;
}

Profile Profile::gaussian() {
  Profile p;
  p.kind_ = ProfileKind::Gaussian;
  p.name_ = "gaussian";
  p.rho_ = 2.0;  // working constant: e^{2|x|} e^{-x^2} is bounded
  p.closed_hat_ = p.closed_autocorr_ = true;
  return p;
}

Profile Profile::peakon() {
  Profile p;
  p.kind_ = ProfileKind::Peakon;
  p.name_ = "peakon";
  p.rho_ = 1.0;
  p.closed_hat_ = p.closed_autocorr_ = true;
  return p;
}

Profile Profile::tent() {
  Profile p;
  p.kind_ = ProfileKind::Tent;
  p.name_ = "tent";
  p.rho_ = 1.0;  // unused for truncation: support is [-1,1]
  p.closed_hat_ = p.closed_autocorr_ = true;
  return p;
}

Profile Profile::custom(std::function<double(double)> eval, double rho) {
  if (!eval) throw std::invalid_argument("Profile::custom: null evaluator");
  if (!(rho > 0)) throw std::invalid_argument("Profile::custom: rho must be positive");
  Profile p;
  p.kind_ = ProfileKind::Custom;
  p.name_ = "custom";
  p.rho_ = rho;
  p.custom_eval_ = std::move(eval);
  // sample sup e^{rho|x|}|q| for support estimates
  double sup = 0.0;
  const double xmax = 60.0 / rho;
  for (int i = 0; i <= 2000; ++i) {
    const double x = xmax * i / 2000.0;
    sup = std::max(sup, std::exp(rho * x) * std::fabs(p.custom_eval_(x)));
  }
  p.custom_sup_bound_ = sup;
  return p;
}

Profile Profile::from_name(std::string_view name) {
  if (name == "sech") return sech();
  if (name == "gaussian") return gaussian();
  if (name == "peakon") return peakon();
  if (name == "tent") return tent();
  throw std::invalid_argument("unknown profile '" + std::string(name) +
                              "' (expected sech|gaussian|peakon|tent)");
}

double Profile::q(double x) const { return static_cast<double>(q_ld(x)); }

long double Profile::q_ld(long double x) const {
  switch (kind_) {
    case ProfileKind::Sech:
      return sech_ld(x);
    case ProfileKind::Gaussian:
      return std::exp(-x * x);
    case ProfileKind::Peakon:
      return std::exp(-std::fabs(x));
    case ProfileKind::Tent:
      return std::max(1.0L - std::fabs(x), 0.0L);
    case ProfileKind::Custom:
      return custom_eval_(static_cast<double>(x));
  }
  return 0.0L;
}

double Profile::hat(double k) const {
  switch (kind_) {
    case ProfileKind::Sech:
      return static_cast<double>(sech_ld(kPiL * static_cast<long double>(k) / 2.0L) / 2.0L);
    case ProfileKind::Gaussian:
      return std::exp(-k * k / 4.0) / (2.0 * kSqrtPi);
    case ProfileKind::Peakon:
      return 1.0 / (kPi * (1.0 + k * k));
    case ProfileKind::Tent: {
      const double s = sinc(k / 2.0);
      return s * s / (2.0 * kPi);
    }
    case ProfileKind::Custom:
      return hat_by_quadrature(k);
  }
  return 0.0;
}

double Profile::hat_by_quadrature(double k, const QuadSpec& spec) const {
  const double R = support_radius(spec.trunc_tol);
  const double step = oscillation_capped_step(spec.step, std::fabs(k));
  // piece boundaries at kinks of q
  std::vector<double> pts{-R};
  for (double b : breakpoints()) {
    for (double s : {-b, b})
      if (s > -R && s < R) pts.push_back(s);
  }
  pts.push_back(R);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const cplx integral = simpson_pieces(
      [&](double x) { return std::exp(cplx(0.0, -k * x)) * q(x); }, pts, step);
  // q real and even: transform is real
  return integral.real() / (2.0 * kPi);
}

double Profile::autocorr(double t) const { return static_cast<double>(autocorr_ld(t)); }

long double Profile::autocorr_ld(long double t) const {
  t = std::fabs(t);
  switch (kind_) {
    case ProfileKind::Sech:
      return sech_autocorr_ld(t);
    case ProfileKind::Gaussian:
      return std::sqrt(kPiL / 2.0L) * std::exp(-t * t / 2.0L);
    case ProfileKind::Peakon:
      return (1.0L + t) * std::exp(-t);
    case ProfileKind::Tent:
      return tent_autocorr_ld(t);
    case ProfileKind::Custom:
      return autocorr_by_quadrature(static_cast<double>(t));
  }
  return 0.0L;
}

double Profile::autocorr_by_quadrature(double t, const QuadSpec& spec) const {
  t = std::fabs(t);
  const double R = support_radius(spec.trunc_tol);
  const double lo = -R - t, hi = R;
  if (!(lo < hi)) return 0.0;
  // kinks of q(x) at +-b and of q(x+t) at +-b - t
  std::vector<double> pts{lo};
  for (double b : breakpoints()) {
    for (double s : {-b, b, -b - t, b - t})
      if (s > lo && s < hi) pts.push_back(s);
  }
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const cplx integral =
      simpson_pieces([&](double x) { return cplx(q(x + t) * q(x), 0.0); }, pts, spec.step);
  return integral.real();
}

double Profile::support_radius(double tol) const {
  if (!(tol > 0.0) || !(tol < 1.0)) throw std::invalid_argument("support_radius: tol must be in (0,1)");
  switch (kind_) {
    case ProfileKind::Sech:
      return std::log(2.0 / tol);  // sech(x) <= 2 e^{-x}
    case ProfileKind::Gaussian:
      return std::sqrt(std::log(1.0 / tol));
    case ProfileKind::Peakon:
      return std::log(1.0 / tol);
    case ProfileKind::Tent:
      return 1.0;
    case ProfileKind::Custom: {
      if (custom_sup_bound_ <= tol) return 1.0;
      return std::log(custom_sup_bound_ / tol) / rho_;
    }
  }
  return 1.0;
}

std::vector<double> Profile::breakpoints() const {
  switch (kind_) {
    case ProfileKind::Peakon:
      return {0.0};
    case ProfileKind::Tent:
      return {0.0, 1.0};
    default:
      return {};
  }
}

std::vector<double> Profile::autocorr_breakpoints() const {
  switch (kind_) {
    case ProfileKind::Tent:
      return {1.0, 2.0};
    default:
      return {};  // peakon's q*q is smooth on t > 0 (kink only at t = 0)
  }
}

}  // namespace radsol
