#include <cmath>
#include <complex>

#include "doctest.h"
#include "radsol/common.hpp"
#include "radsol/profile.hpp"
#include "radsol/quadrature.hpp"

using namespace radsol;

TEST_CASE("simpson is exact for cubics and constants") {
  auto cube = [](double x) { return cplx(x * x * x, 0.0); };
  CHECK(simpson(cube, 0.0, 1.0, 2).real() == doctest::Approx(0.25).epsilon(1e-15));

  auto one = [](double) { return cplx(1.0, 0.0); };
  CHECK(simpson(one, 0.0, 2.0, 4).real() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("simpson resolves a complex oscillation") {
  // int_0^pi e^{ix} dx = (e^{i pi} - 1)/i = 2i
  auto f = [](double x) { return std::exp(cplx(0.0, x)); };
  const cplx v = simpson(f, 0.0, kPi, 64);
  CHECK(std::abs(v - cplx(0.0, 2.0)) <= 1e-7);
}

TEST_CASE("simpson rejects bad panel counts and non-finite samples") {
  auto one = [](double) { return cplx(1.0, 0.0); };
  CHECK_THROWS_AS(simpson(one, 0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(simpson(one, 0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(simpson(one, 0.0, 1.0, -2), std::invalid_argument);

  auto bad = [](double x) { return cplx(x == 0.5 ? NAN : 1.0, 0.0); };
  CHECK_THROWS_AS(simpson(bad, 0.0, 1.0, 2), numeric_error);
}

TEST_CASE("integrate_line: gaussian, zero and peakon kink") {
  const Profile g = Profile::gaussian();
  const double radius = g.support_radius(1e-14);
  const cplx vg = integrate_line([&](double x) { return cplx(g.q(x), 0.0); },
                                 QuadSpec{0.01, 1e-14}, radius);
  CHECK(std::fabs(vg.real() - std::sqrt(kPi)) <= 1e-10);

  const cplx vz = integrate_line([](double) { return cplx(0.0, 0.0); }, QuadSpec{0.01, 1e-14}, 1.0);
  CHECK(vz == cplx(0.0, 0.0));

  // int e^{-|x|} = 2; the kink limits the observable Simpson order
  const Profile pk = Profile::peakon();
  const cplx vp = integrate_line([&](double x) { return cplx(pk.q(x), 0.0); },
                                 QuadSpec{0.005, 1e-14}, 35.0);
  CHECK(std::fabs(vp.real() - 2.0) <= 1e-6);
}

TEST_CASE("laplace_trunc against closed transforms") {
  // L[e^{-t}](1) = 1/2
  const cplx v1 = laplace_trunc([](double t) { return cplx(std::exp(-t), 0.0); }, cplx(1.0, 0.0),
                                60.0, 0.01);
  CHECK(std::fabs(v1.real() - 0.5) <= 1e-9);
  CHECK(std::fabs(v1.imag()) <= 1e-12);

  const cplx v0 = laplace_trunc([](double) { return cplx(0.0, 0.0); }, cplx(1.0, 0.0), 10.0, 0.01);
  CHECK(v0 == cplx(0.0, 0.0));

  // peakon autocorrelation (1+t)e^{-t}: L = 1/(s+1) + 1/(s+1)^2 at s = 0.3
  const double s = 0.3;
  const double expected = 1.0 / (s + 1.0) + 1.0 / ((s + 1.0) * (s + 1.0));
  const cplx v2 = laplace_trunc([](double t) { return cplx((1.0 + t) * std::exp(-t), 0.0); },
                                cplx(s, 0.0), 25.0, 0.01);
  CHECK(std::fabs(v2.real() - expected) <= 1e-8);

  CHECK_THROWS_AS(laplace_trunc([](double) { return cplx(1.0, 0.0); }, cplx(1.0, 0.0), -1.0, 0.01),
                  std::invalid_argument);
}

TEST_CASE("fourth-order convergence on a smooth oscillatory integrand") {
  auto f = [](double x) { return cplx(std::exp(-x * x) * std::cos(3.0 * x), 0.0); };
  const double ref = simpson(f, 0.0, 2.0, 20000).real();
  const double e1 = std::fabs(simpson(f, 0.0, 2.0, 40).real() - ref);
  const double e2 = std::fabs(simpson(f, 0.0, 2.0, 80).real() - ref);
  CHECK(e1 / e2 >= 12.0);
}

TEST_CASE("linearity of integrate_line at fixed sampling") {
  const Profile g = Profile::gaussian();
  auto f = [&](double x) { return cplx(g.q(x), 0.0); };
  auto h = [](double x) { return cplx(std::cos(x), std::sin(2.0 * x)); };
  const double alpha = 1.7, beta = -0.3;
  const QuadSpec spec{0.01, 1e-12};
  const double radius = 8.0;
  auto combo = [&](double x) { return alpha * f(x) + beta * h(x); };
  const cplx lhs = integrate_line(combo, spec, radius);
  const cplx rhs = alpha * integrate_line(f, spec, radius) + beta * integrate_line(h, spec, radius);
  CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(rhs)));
}

TEST_CASE("laplace_trunc conjugate symmetry for real integrands") {
  auto f = [](double t) { return cplx((1.0 + t) * std::exp(-t), 0.0); };
  const cplx z(0.4, 1.3);
  const cplx a = laplace_trunc(f, z, 30.0, 0.01);
  const cplx b = laplace_trunc(f, std::conj(z), 30.0, 0.01);
  CHECK(std::abs(b - std::conj(a)) <= 1e-15 * (1.0 + std::abs(a)));
}

TEST_CASE("simpson_pieces restores order across kinks") {
  // int_{-1}^{1} e^{-|x|} dx = 2(1 - e^{-1}); kink at 0 on a piece boundary
  auto f = [](double x) { return cplx(std::exp(-std::fabs(x)), 0.0); };
  const double pts[] = {-1.0, 0.0, 1.0};
  const double exact = 2.0 * (1.0 - std::exp(-1.0));
  CHECK(std::fabs(simpson_pieces(f, pts, 0.005).real() - exact) <= 1e-11);
  // same integral with the kink landing mid-panel (402 panels over [-1,1]
  // puts x = 0 on an odd node): the error degrades to ~h^2/3
  const double misaligned =
      simpson(f, -1.0, 1.0, 402).real();
  CHECK(std::fabs(misaligned - exact) > 1e-7);
}

TEST_CASE("simpson_indexed reproduces a closed-form integral") {
  // int_0^20 sin(0.37 x) dx; the reduction is chunked, so this also exercises
  // the fixed-order partial combination
  const int n = 20001;
  const double h = 1e-3;
  auto f = [&](int j) { return std::sin(0.37 * j * h); };
  const double v = simpson_indexed(n, h, f);
  const double exact = (1.0 - std::cos(0.37 * 20.0)) / 0.37;
  CHECK(std::fabs(v - exact) <= 1e-12);
  CHECK_THROWS_AS(simpson_indexed(4, h, f), std::invalid_argument);
}
