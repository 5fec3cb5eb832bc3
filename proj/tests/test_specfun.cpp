#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lagasym/error.hpp"
#include "lagasym/specfun.hpp"

using namespace lagasym;

namespace {

const double pi = std::numbers::pi;

bool close(cplx a, cplx b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

}  // namespace

TEST_SUITE("specfun") {
  TEST_CASE("Airy reference values") {
    const FunPair a0 = airy(0.0);
    CHECK(a0.value.real() == doctest::Approx(std::pow(3.0, -2.0 / 3) / std::tgamma(2.0 / 3)).epsilon(1e-15));
    CHECK(a0.derivative.real() == doctest::Approx(-std::pow(3.0, -1.0 / 3) / std::tgamma(1.0 / 3)).epsilon(1e-15));
    const FunPair a = airy(1.5);
    CHECK(a.value.real() == doctest::Approx(0.071749497008105409674).epsilon(1e-13));
    CHECK(a.derivative.real() == doctest::Approx(-0.097382012842301319218).epsilon(1e-13));
    const FunPair b = airy(-5.0);
    CHECK(b.value.real() == doctest::Approx(0.35076100902411431979).epsilon(1e-13));
    CHECK(b.derivative.real() == doctest::Approx(0.32719281855444313679).epsilon(1e-13));
    CHECK(airy(-15.0).value.real() == doctest::Approx(0.27821749087082892953).epsilon(1e-12));
    CHECK(close(airy(cplx(3, 4)).value, cplx(0.014554546690944634862, -0.047435251515492836146), 1e-12));
    const double x = 10.0;
    const double lead = std::exp(-2.0 / 3 * std::pow(x, 1.5)) / (2 * std::sqrt(pi) * std::pow(x, 0.25));
    CHECK(airy(x).value.real() == doctest::Approx(lead).epsilon(0.01));
  }

  TEST_CASE("Wronskians") {
    for (double x : {-5.0, 0.0, 5.0, 2.5}) {
      const FunPair a = airy(x), b = airy_bi(x);
      const cplx w = a.value * b.derivative - a.derivative * b.value;
      CHECK(std::abs(w - 1.0 / pi) <= 1e-10 / pi);
    }
    for (double alpha : {0.0, 0.7, 1.0, 2.5}) {
      for (cplx z : {cplx(1.0), cplx(10.0), cplx(2.0, 1.0), cplx(30.0, 5.0), cplx(-3.0, 2.0), cplx(0.01, 0.0)}) {
        const FunPair j = bessel_j(alpha, z), y = bessel_y(alpha, z);
        const cplx wy = j.value * y.derivative - j.derivative * y.value;
        CHECK(close(wy, 2.0 / (pi * z), 1e-10));
        const FunPair h1 = hankel(alpha, z, 1), h2 = hankel(alpha, z, 2);
        const cplx wh = h1.value * h2.derivative - h1.derivative * h2.value;
        CHECK(close(wh, cplx(0, -4.0) / (pi * z), 1e-10));
      }
    }
  }

  TEST_CASE("Bessel reference values") {
    const FunPair j0 = bessel_j(0.0, 0.0);
    CHECK(j0.value == cplx(1.0));
    CHECK(j0.derivative == cplx(0.0));
    for (double x : {1.0, 5.0, 40.0})
      CHECK(bessel_j(0.5, x).value.real() == doctest::Approx(std::sqrt(2 / (pi * x)) * std::sin(x)).epsilon(1e-13));
    const double z = 1e-6;
    CHECK(bessel_j(0.3, z).value.real() == doctest::Approx(std::pow(z / 2, 0.3) / std::tgamma(1.3)).epsilon(1e-10));
    CHECK(bessel_j(0.7, 3.2).value.real() == doctest::Approx(0.097720467525300014018).epsilon(1e-13));
    CHECK(bessel_j(0.7, 3.2).derivative.real() == doctest::Approx(-0.44858226096590046175).epsilon(1e-13));
    CHECK(bessel_j(0.7, 30.0).value.real() == doctest::Approx(-0.1439297427255668584).epsilon(1e-12));
    CHECK(close(bessel_j(0.0, cplx(2, 1)).value, cplx(0.18785372808246171619, -0.64616943515398071638), 1e-13));
    CHECK(bessel_y(2.0, 1.5).value.real() == doctest::Approx(-0.93219375976297390523).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), Error);
  }

  TEST_CASE("Hankel reference values") {
    CHECK(close(hankel(1.3, cplx(5, 2), 1).value, cplx(-0.024763429752500323714, 0.042590137859789890767), 1e-12));
    CHECK(close(hankel(0.5, cplx(-3, 1), 2).value, cplx(-1.2194213620101924464, -0.023516557854926613848), 1e-12));
    CHECK(close(hankel(0.7, cplx(40, 3), 1).value, cplx(0.005822807297045203012, 0.0023356979830808279986), 1e-12));
    const cplx z(2, 1);
    CHECK(close(hankel(0.7, z, 1).value + hankel(0.7, z, 2).value, 2.0 * bessel_j(0.7, z).value, 1e-10));
    // H^(1)_{1/2}(z) = -i sqrt(2/(pi z)) e^{iz}
    for (cplx w : {cplx(1.0), cplx(3.0, 2.0), cplx(35.0, 1.0)})
      CHECK(close(hankel(0.5, w, 1).value, cplx(0, -1) * std::sqrt(2.0 / (pi * w)) * std::exp(cplx(0, 1) * w), 1e-12));
    CHECK_THROWS_AS(hankel(0.5, 0.0, 1), Error);
  }

  TEST_CASE("conjugation symmetry") {
    for (cplx z : {cplx(1, 2), cplx(-4, 3), cplx(12, -7)}) {
      CHECK(close(airy(std::conj(z)).value, std::conj(airy(z).value), 1e-14));
      CHECK(close(bessel_j(0.7, std::conj(z)).value, std::conj(bessel_j(0.7, z).value), 1e-14));
    }
  }

  TEST_CASE("derivatives match central differences") {
    const double h = 1e-5;
    for (cplx z : {cplx(0.7), cplx(-3.0), cplx(2.0, 1.5), cplx(12.0, 3.0), cplx(30.0, -2.0)}) {
      const cplx fd_ai = (airy(z + h).value - airy(z - h).value) / (2 * h);
      CHECK(close(fd_ai, airy(z).derivative, 1e-6));
      const cplx fd_j = (bessel_j(1.3, z + h).value - bessel_j(1.3, z - h).value) / (2 * h);
      CHECK(close(fd_j, bessel_j(1.3, z).derivative, 1e-6));
      const cplx fd_h = (hankel(0.4, z + h, 2).value - hankel(0.4, z - h, 2).value) / (2 * h);
      CHECK(close(fd_h, hankel(0.4, z, 2).derivative, 1e-6));
    }
  }

  TEST_CASE("continuity across the switch radii") {
    // first-order Taylor step from just inside to just outside each radius
    const double e = 1e-9;
    auto step = [](const FunPair& in, cplx zin, const FunPair& out, cplx zout) {
      return close(in.value + in.derivative * (zout - zin), out.value, 1e-10);
    };
    for (double th : {0.0, 1.0, 2.0, 2.5, 3.14159}) {
      const cplx u = std::polar(1.0, th);
      const cplx a0 = airy_switch_radius * (1 - e) * u, a1 = airy_switch_radius * (1 + e) * u;
      const cplx b0 = bessel_switch_radius * (1 - e) * u, b1 = bessel_switch_radius * (1 + e) * u;
      CHECK(step(airy(a0), a0, airy(a1), a1));
      CHECK(step(bessel_j(0.7, b0), b0, bessel_j(0.7, b1), b1));
      CHECK(step(hankel(0.7, b0, 1), b0, hankel(0.7, b1, 1), b1));
    }
  }

  TEST_CASE("gamma") {
    CHECK(gamma_fn(1.0) == 1.0);
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
    for (double x : {0.3, 7.7}) CHECK(gamma_fn(x + 1) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-13));
    double f = 1.0;
    for (int n = 1; n <= 20; ++n) {
      f *= n;
      CHECK(gamma_fn(n + 1.0) == doctest::Approx(f).epsilon(1e-13));
    }
  }
}
