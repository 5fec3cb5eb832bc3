#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lagasym/error.hpp"
#include "lagasym/mrs.hpp"
#include "lagasym/quadrature.hpp"

using namespace lagasym;

namespace {

// (1/2pi) int_0^beta Q'(x) sqrt(x/(beta-x)) dx with x = beta sin^2(theta);
// the integrand becomes a trigonometric polynomial in theta.
double mrs_integral(const WeightSpec& s, double beta) {
  const RealPolynomial dq = s.q().derivative();
  const QuadratureRule g = gauss_legendre(64);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double th = std::numbers::pi / 4 * (1.0 + g.nodes[i]);
    const double sn = std::sin(th);
    acc += g.weights[i] * dq(beta * sn * sn) * 2.0 * beta * sn * sn;
  }
  return acc * std::numbers::pi / 4 / (2 * std::numbers::pi);
}

}  // namespace

TEST_SUITE("mrs") {
  TEST_CASE("closed forms for monomials") {
    CHECK(mrs_beta(WeightSpec(0.0, {0.0, 1.0}), 50).beta_n == doctest::Approx(200.0).epsilon(1e-15));
    for (long n : {10, 20, 40, 80}) {
      const double b2 = mrs_beta(WeightSpec(0.0, {0.0, 0.0, 1.0}), n).beta_n;
      CHECK(b2 == doctest::Approx(std::sqrt(8.0 * n / 3.0)).epsilon(1e-13));
      const double b3 = mrs_beta(WeightSpec(0.0, {0.0, 0.0, 0.0, 2.0}), n).beta_n;
      // (1/2) m q_m A_m = 1.5 * 2 * 5/16
      CHECK(b3 == doctest::Approx(std::cbrt(n / (1.5 * 2.0 * 5.0 / 16.0))).epsilon(1e-13));
    }
  }

  TEST_CASE("frozen roots") {
    CHECK(mrs_beta(WeightSpec(0.0, {0.0, 0.0, 1.0, 0.0, 1.0}), 10).beta_n ==
          doctest::Approx(1.9867172854664240095).epsilon(1e-14));
    CHECK(mrs_beta(WeightSpec(0.0, {0.0, 1.0, 1.0}), 10).beta_n ==
          doctest::Approx(4.8413915654200079096).epsilon(1e-14));
  }

  TEST_CASE("defining integral residual") {
    for (auto q : std::vector<std::vector<double>>{{0, 1}, {0, 0, 1}, {0, 1, 1}, {0, 0, 1, 0, 1}})
      for (long n : {10, 20, 40, 80}) {
        const WeightSpec s(0.0, q);
        const MrsResult r = mrs_beta(s, n);
        CHECK(std::abs(r.residual) <= 1e-12 * n);
        CHECK(std::abs(mrs_integral(s, r.beta_n) - n) <= 1e-12 * n);
      }
  }

  TEST_CASE("x^2+x at n=100 against bisection") {
    const WeightSpec s(0.0, {0.0, 1.0, 1.0});
    double lo = 0.0, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mrs_lhs(s, mid) < 100.0 ? lo : hi) = mid;
    }
    CHECK(mrs_beta(s, 100).beta_n == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-12));
  }

  TEST_CASE("series coefficients") {
    auto c1 = mrs_series_coeffs(WeightSpec(0.0, {0.0, 1.0}));
    CHECK(c1.beta0 == doctest::Approx(4.0));
    CHECK(c1.beta1 == 0.0);
    auto c2 = mrs_series_coeffs(WeightSpec(0.0, {0.0, 0.0, 1.0}));
    CHECK(c2.beta0 == doctest::Approx(std::pow(3.0 / 8.0, -0.5)));
    CHECK(c2.beta1 == 0.0);
    auto c3 = mrs_series_coeffs(WeightSpec(0.0, {0.0, 1.0, 1.0}));
    CHECK(c3.beta1 == doctest::Approx(-1.0 / 3.0));
  }

  TEST_CASE("series error shrinks like n^{-2/m}") {
    const WeightSpec s(0.0, {0.0, 1.0, 1.0});
    const auto c = mrs_series_coeffs(s);
    auto err = [&](long n) {
      const double b = mrs_beta(s, n).beta_n;
      const double r = std::sqrt(static_cast<double>(n));
      return std::abs(b - r * (c.beta0 + c.beta1 / r)) / b;
    };
    // m = 2: halving n^{-1} each time n quadruples
    const double e1 = err(100), e2 = err(400), e3 = err(1600);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
    CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.1));
  }

  TEST_CASE("monotone in n") {
    const WeightSpec s(0.0, {0.0, -1.0, 0.5, 1.0});
    double prev = 0.0;
    for (long n = 5; n <= 60; ++n) {
      const double b = mrs_beta(s, n).beta_n;
      CHECK(b > prev);
      prev = b;
    }
  }

  TEST_CASE("rescaled field") {
    for (long n : {3, 17, 80}) {
      const WeightSpec s(0.0, {0.0, 1.0});
      const RealPolynomial v = rescaled_field(s, mrs_beta(s, n).beta_n, n);
      CHECK(v[1] == doctest::Approx(4.0));
      const WeightSpec s2(0.0, {0.0, 0.0, 3.0});
      const RealPolynomial v2 = rescaled_field(s2, mrs_beta(s2, n).beta_n, n);
      CHECK(v2[2] == doctest::Approx(1.0 / (0.5 * 2 * 3.0 / 8.0)).epsilon(1e-13));
    }
    const WeightSpec s(0.0, {0.0, 1.0, 1.0});
    const double lim = 1.0 / (0.5 * 2 * 3.0 / 8.0);
    const double d1 = rescaled_field(s, mrs_beta(s, 100).beta_n, 100)[2] - lim;
    const double d2 = rescaled_field(s, mrs_beta(s, 10000).beta_n, 10000)[2] - lim;
    CHECK(std::abs(d2) < std::abs(d1) / 5);
  }

  TEST_CASE("undefined for fields without a unique root") {
    // Q = x^3 - 3x^2 + 3x: G has a local dip, small n has several roots
    const WeightSpec s(0.0, {0.0, 40.0, -40.0, 9.0});
    bool saw_error = false;
    for (long n = 1; n <= 30; ++n) {
      try {
        mrs_beta(s, n);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::mrs_undefined);
        saw_error = true;
      }
    }
    CHECK(saw_error);
  }
}
