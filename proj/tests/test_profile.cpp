#include <cmath>
#include <random>

#include "doctest.h"
#include "radsol/profile.hpp"
#include "radsol/quadrature.hpp"

using namespace radsol;

namespace {
const Profile kAll[] = {Profile::sech(), Profile::gaussian(), Profile::peakon(), Profile::tent()};
}

TEST_CASE("pointwise evaluation of the built-in shapes") {
  CHECK(Profile::sech().q(0.0) == 1.0);
  CHECK(Profile::tent().q(2.0) == 0.0);
  CHECK(Profile::tent().q(0.25) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(Profile::peakon().q(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(Profile::gaussian().q(2.0) == doctest::Approx(std::exp(-4.0)).epsilon(1e-15));
}

TEST_CASE("closed-form transforms at reference points") {
  // sech: q^(2) = sech(pi)/2
  CHECK(Profile::sech().hat(2.0) ==
        doctest::Approx(0.5 / std::cosh(kPi)).epsilon(1e-14));
  // tent: q^(2 pi) = sinc(pi)^2/(2 pi) = 0
  CHECK(std::fabs(Profile::tent().hat(2.0 * kPi)) <= 1e-20);
  // peakon: q^(0) = 1/pi
  CHECK(Profile::peakon().hat(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  // gaussian: q^(0) = 1/(2 sqrt(pi))
  CHECK(Profile::gaussian().hat(0.0) ==
        doctest::Approx(0.5 / std::sqrt(kPi)).epsilon(1e-15));
}

TEST_CASE("closed-form autocorrelations at reference points") {
  CHECK(Profile::sech().autocorr(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(Profile::peakon().autocorr(1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(Profile::gaussian().autocorr(0.0) ==
        doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-15));
  // tent: q*q(0) = int (1-|x|)^2 = 2/3, continuity at the knot t = 1
  CHECK(Profile::tent().autocorr(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(Profile::tent().autocorr(1.0 - 1e-12) ==
        doctest::Approx(Profile::tent().autocorr(1.0 + 1e-12)).epsilon(1e-9));
  // sech near zero runs through the series branch
  CHECK(Profile::sech().autocorr(1e-8) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("support radius") {
  CHECK(Profile::tent().support_radius(1e-12) == 1.0);
  CHECK(Profile::peakon().support_radius(1e-12) ==
        doctest::Approx(-std::log(1e-12)).epsilon(1e-14));
  CHECK(Profile::sech().support_radius(1e-12) ==
        doctest::Approx(std::log(2e12)).epsilon(1e-14));
  for (const auto& p : kAll) {
    // peakon's closed-form inverse is exact, so q(R) = tol up to roundoff
    const double R = p.support_radius(1e-12);
    CHECK(std::fabs(p.q(R)) <= 1e-12 * (1.0 + 1e-9));
    CHECK(std::fabs(p.q(R + 3.0)) <= 1e-12);
  }
  CHECK_THROWS_AS(Profile::sech().support_radius(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Profile::sech().support_radius(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Profile::sech().support_radius(-1e-3), std::invalid_argument);
}

TEST_CASE("evenness holds exactly") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> xs(-30.0, 30.0);
  for (const auto& p : kAll) {
    for (int i = 0; i < 1000; ++i) {
      const double x = xs(rng);
      CHECK(p.q(x) == p.q(-x));
      CHECK(p.autocorr(x) == p.autocorr(-x));
    }
  }
}

TEST_CASE("closed forms agree with quadrature") {
  for (const auto& p : kAll) {
    for (double k : {0.0, 1.0, 2.0, 4.0}) {
      CHECK(std::fabs(p.hat(k) - p.hat_by_quadrature(k)) <= 1e-9);
    }
    for (double t : {0.0, 0.5, 1.0, 3.0}) {
      CHECK(std::fabs(p.autocorr(t) - p.autocorr_by_quadrature(t)) <= 1e-9);
    }
  }
}

TEST_CASE("Plancherel: 2 pi int q^(k)^2 dk = q*q(0)") {
  for (const auto& p : kAll) {
    const bool heavy_tail = p.kind() == ProfileKind::Peakon || p.kind() == ProfileKind::Tent;
    const double cutoff = heavy_tail ? 500.0 : 25.0;
    const double step = heavy_tail ? 0.05 : 0.01;
    const cplx integral = integrate_line(
        [&](double k) {
          const double h = p.hat(k);
          return cplx(h * h, 0.0);
        },
        QuadSpec{step, 1e-14}, cutoff);
    CHECK(std::fabs(2.0 * kPi * integral.real() - p.autocorr(0.0)) <= 1e-8);
  }
}

TEST_CASE("custom profiles run through the numeric paths") {
  const Profile c = Profile::custom([](double x) { return std::exp(-x * x); }, 2.0);
  const Profile g = Profile::gaussian();
  CHECK(c.q(0.7) == g.q(0.7));
  CHECK(std::fabs(c.hat(1.5) - g.hat(1.5)) <= 1e-9);
  CHECK(std::fabs(c.autocorr(0.8) - g.autocorr(0.8)) <= 1e-9);
  CHECK(c.support_radius(1e-10) >= g.support_radius(1e-10) - 1e-6);

  const Profile zero = Profile::custom([](double) { return 0.0; }, 1.0);
  CHECK(zero.q(1.0) == 0.0);
  CHECK(zero.autocorr(0.5) == 0.0);
  CHECK(zero.hat(2.0) == 0.0);

  CHECK_THROWS_AS(Profile::custom(nullptr, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Profile::custom([](double) { return 0.0; }, -1.0), std::invalid_argument);
}

TEST_CASE("profile names") {
  CHECK(Profile::from_name("sech").kind() == ProfileKind::Sech);
  CHECK(Profile::from_name("gaussian").kind() == ProfileKind::Gaussian);
  CHECK(Profile::from_name("peakon").kind() == ProfileKind::Peakon);
  CHECK(Profile::from_name("tent").kind() == ProfileKind::Tent);
  CHECK_THROWS_AS(Profile::from_name("soliton"), std::invalid_argument);
}
