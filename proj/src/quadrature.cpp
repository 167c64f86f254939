#include "radsol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radsol/parallel.hpp"

namespace radsol {

int even_panels(double length, double max_step) {
  if (!(length > 0) || !(max_step > 0)) throw std::invalid_argument("even_panels: need positive length and step");
  int n = static_cast<int>(std::ceil(length / max_step - 1e-12));
  n = std::max(n, 2);
  if (n % 2 != 0) ++n;
  return n;
}

double oscillation_capped_step(double step, double omega) {
  if (omega <= 0) return step;
  return std::min(step, kPi / (20.0 * omega));
}

double laplace_horizon(double re_z, double rho_eff, double amp_bound, double trunc_tol) {
  const double rate = re_z + rho_eff;
  if (!(rate > 0)) throw std::invalid_argument("laplace_horizon: Re(z) + rho must be positive");
  const double tol = std::clamp(trunc_tol, 1e-300, 0.5);
  return (std::log(1.0 / tol) + std::log1p(std::max(0.0, amp_bound))) / rate;
}

cplx simpson(const std::function<cplx(double)>& f, double a, double b, int n_panels) {
  if (!(a < b)) throw std::invalid_argument("simpson: need a < b");
  if (n_panels <= 0 || n_panels % 2 != 0) throw std::invalid_argument("simpson: n_panels must be even and positive");
  const double h = (b - a) / n_panels;
  NeumaierSum re, im;
  for (int j = 0; j <= n_panels; ++j) {
    const double x = (j == n_panels) ? b : a + j * h;
    const cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw numeric_error("simpson: non-finite sample at x = " + std::to_string(x));
    const double w = simpson_weight(j, n_panels + 1);
    re.add(static_cast<long double>(w) * v.real());
    im.add(static_cast<long double>(w) * v.imag());
  }
  const long double scale = static_cast<long double>(h) / 3.0L;
  return {static_cast<double>(scale * re.value()), static_cast<double>(scale * im.value())};
}

cplx simpson_pieces(const std::function<cplx(double)>& f, std::span<const double> pts,
                    double max_step) {
  if (pts.size() < 2) throw std::invalid_argument("simpson_pieces: need at least two boundary points");
  NeumaierSum re, im;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (!(pts[k] < pts[k + 1])) throw std::invalid_argument("simpson_pieces: boundaries must be strictly increasing");
    const cplx piece = simpson(f, pts[k], pts[k + 1], even_panels(pts[k + 1] - pts[k], max_step));
    re.add(piece.real());
    im.add(piece.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

cplx integrate_line(const std::function<cplx(double)>& f, const QuadSpec& spec, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("integrate_line: radius must be positive");
  return simpson(f, -radius, radius, even_panels(2.0 * radius, spec.step));
}

cplx laplace_trunc(const std::function<cplx(double)>& f, cplx z, double T, double step) {
  if (!(T > 0)) throw std::invalid_argument("laplace_trunc: T must be positive");
  auto g = [&](double t) { return std::exp(-z * t) * f(t); };
  return simpson(g, 0.0, T, even_panels(T, step));
}

double simpson_indexed(int n, double h, const std::function<double(int)>& f) {
  if (n < 3 || (n - 1) % 2 != 0) throw std::invalid_argument("simpson_indexed: need an odd sample count >= 3");
  constexpr std::size_t kChunk = 2048;
  const std::size_t chunks = par::chunk_count(static_cast<std::size_t>(n), kChunk);
  std::vector<long double> partial(chunks, 0.0L);
  par::for_chunks(static_cast<std::size_t>(n), kChunk,
                  [&](std::size_t lo, std::size_t hi, std::size_t c) {
                    NeumaierSum acc;
                    for (std::size_t j = lo; j < hi; ++j) {
                      const int jj = static_cast<int>(j);
                      acc.add(static_cast<long double>(simpson_weight(jj, n)) * f(jj));
                    }
                    partial[c] = acc.value();
                  });
  NeumaierSum total;
  for (long double p : partial) total.add(p);
  const double out = static_cast<double>(static_cast<long double>(h) / 3.0L * total.value());
  if (!std::isfinite(out)) throw numeric_error("simpson_indexed: non-finite reduction");
  return out;
}

}  // namespace radsol
