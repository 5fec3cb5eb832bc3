#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "lagasym/error.hpp"
#include "lagasym/oracle.hpp"

using namespace lagasym;
namespace mp = boost::multiprecision;

namespace {

const double pi = std::numbers::pi;
using big = mp_real<200>;

double rel(const xreal& a, const xreal& b) { return static_cast<double>(mp::abs(a - b) / mp::abs(b)); }

const OracleTable& laguerre_table(double alpha) {
  static std::map<double, OracleTable> cache;
  auto it = cache.find(alpha);
  if (it == cache.end()) it = cache.emplace(alpha, build_table(WeightSpec(alpha, {0.0, 1.0}), 40)).first;
  return it->second;
}

// det of the k x k Hankel matrix of the moments, by Gaussian elimination.
big hankel_det(const std::vector<big>& mu, int k) {
  std::vector<std::vector<big>> m(k, std::vector<big>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = mu[i + j];
  big det = 1;
  for (int c = 0; c < k; ++c) {
    det *= m[c][c];
    for (int r = c + 1; r < k; ++r) {
      const big f = m[r][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("moments") {
    for (double alpha : {0.0, 0.7, -0.4}) {
      const WeightSpec spec(alpha, {0.0, 1.0});
      const auto mu = compute_moments(spec, 20, 50);
      for (int k = 0; k <= 20; ++k) CHECK(rel(mu[k], mp::tgamma(xreal(k) + xreal(alpha) + 1)) < 1e-40);
    }
    const auto g = compute_moments(WeightSpec(0.0, {0.0, 0.0, 1.0}), 3, 50);
    CHECK(rel(g[0], mp::sqrt(boost::math::constants::pi<xreal>()) / 2) < 1e-40);
    const auto h = compute_moments(WeightSpec(0.5, {1.0, 1.0, 0.0, 0.0, 1.0}), 30, 50);
    for (int k = 1; k < 30; ++k) CHECK(h[k + 1] / h[k] > h[k] / h[k - 1]);
    const auto hi = compute_moments(WeightSpec(0.5, {1.0, 1.0, 0.0, 0.0, 1.0}), 30, 100);
    for (int k = 0; k <= 30; ++k) CHECK(rel(h[k], hi[k]) < 1e-45);
  }

  TEST_CASE("Laguerre closed forms") {
    for (double alpha : {0.0, 0.7, -0.4, 2.0}) {
      const auto& t = laguerre_table(alpha);
      const xreal a(alpha);
      for (int n = 0; n <= t.n_max; ++n) {
        CHECK(rel(t.a[n], 2 * xreal(n) + a + 1) < 1e-18);
        const xreal bn = mp::sqrt(xreal(n + 1) * (xreal(n + 1) + a));
        CHECK(rel(t.b[n], bn) < 1e-18);
        const xreal gn = 1 / mp::sqrt(mp::tgamma(xreal(n + 1)) * mp::tgamma(xreal(n) + a + 1));
        CHECK(rel(t.gamma[n], gn) < 1e-18);
        if (n >= 1) CHECK(static_cast<double>(mp::abs(t.gamma[n] * t.b[n - 1] / t.gamma[n - 1] - 1)) < 1e-20);
        CHECK(t.b[n] > 0);
      }
      CHECK(rel(t.gamma[0], 1 / mp::sqrt(t.moments[0])) < 1e-30);
    }
  }

  TEST_CASE("Hankel determinants for the half-range Gaussian") {
    const auto t = build_table(WeightSpec(0.0, {0.0, 0.0, 1.0}), 14);
    std::vector<big> mu(30);
    for (int k = 0; k < 30; ++k) mu[k] = mp::tgamma(big(k + 1) / 2) / 2;
    std::vector<big> d(16);
    d[0] = 1;
    for (int k = 1; k <= 15; ++k) d[k] = hankel_det(mu, k);
    for (int n = 0; n <= 12; ++n) {
      const big b2 = d[n] * d[n + 2] / (d[n + 1] * d[n + 1]);
      CHECK(rel(t.b[n], xreal(mp::sqrt(b2))) < 1e-25);
    }
  }

  TEST_CASE("polynomial evaluation") {
    const auto& t = laguerre_table(0.5);
    const double x = 1.7;
    const cplx p1 = eval_pn(t, 1, x);
    CHECK(p1.real() == doctest::Approx(static_cast<double>((xreal(x) - t.a[0]) * t.gamma[0] / t.b[0])).epsilon(1e-15));
    // p_1 for the Laguerre weight: (x - alpha - 1) / sqrt(Gamma(alpha + 2))
    CHECK(p1.real() == doctest::Approx((x - 1.5) / std::sqrt(std::tgamma(2.5))).epsilon(1e-14));
    const cplx z(3.0, 2.0);
    CHECK(std::abs(eval_pn(t, 17, std::conj(z)) - std::conj(eval_pn(t, 17, z))) < 1e-14 * std::abs(eval_pn(t, 17, z)));
    CHECK_THROWS_AS(eval_pn(t, 41, 1.0), Error);
    CHECK(eval_pn_times_exp(t, 5, x, std::log(2.0)).real() == doctest::Approx(2 * eval_pn(t, 5, x).real()).epsilon(1e-14));
  }

  TEST_CASE("interlacing zeros for the Laguerre weight") {
    const auto& t = laguerre_table(0.0);
    const int n = 15;
    const double top = 4.0 * n * 1.05;
    std::vector<double> z15, z14;
    double prev15 = eval_pn(t, n, 1e-9).real(), prev14 = eval_pn(t, n - 1, 1e-9).real();
    const int steps = 20000;
    for (int i = 1; i <= steps; ++i) {
      const double x = top * i / steps;
      const double v15 = eval_pn(t, n, x).real(), v14 = eval_pn(t, n - 1, x).real();
      if ((v15 > 0) != (prev15 > 0)) z15.push_back(x);
      if ((v14 > 0) != (prev14 > 0)) z14.push_back(x);
      prev15 = v15;
      prev14 = v14;
    }
    REQUIRE(z15.size() == 15);
    REQUIRE(z14.size() == 14);
    for (int i = 0; i < 14; ++i) {
      CHECK(z15[i] < z14[i]);
      CHECK(z14[i] < z15[i + 1]);
    }
  }

  TEST_CASE("Christoffel-Darboux kernel") {
    const auto& t = laguerre_table(0.5);
    const int n = 10;
    CHECK(cd_kernel(t, n, 1.3, 7.1) == doctest::Approx(cd_kernel(t, n, 7.1, 1.3)).epsilon(1e-15));
    CHECK(cd_kernel(t, n, 2.0, 2.0) > 0.0);
    for (double x : {0.5, 3.0, 20.0}) {
      const double y = x + 1e-4;
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += eval_pn(t, k, x).real() * eval_pn(t, k, y).real();
      CHECK(cd_sum(t, n, x, y) == doctest::Approx(s).epsilon(1e-15));
    }
    // trace identity on an exp-sinh trapezoid rule in double precision
    double trace = 0.0;
    const double h = 1.0 / 64;
    for (double s = -4.5; s <= 3.2; s += h) {
      const double x = std::exp(0.5 * pi * std::sinh(s));
      trace += h * cd_kernel(t, n, x, x) * x * 0.5 * pi * std::cosh(s);
    }
    CHECK(trace == doctest::Approx(n).epsilon(1e-10));
    CHECK_THROWS_AS(cd_kernel(laguerre_table(-0.4), n, 0.0, 1.0), Error);
    CHECK_THROWS_AS(cd_kernel(t, n, -1.0, 1.0), Error);
  }

  TEST_CASE("Cauchy transform") {
    const auto& t = laguerre_table(0.0);
    // C(w)(-1) = -(i / 2 pi) e E_1(1)
    const cplx c0 = cauchy_transform(t, 0, -1.0);
    CHECK(std::abs(c0 - cplx(0, -0.59634736232319407434 / (2 * pi))) < 1e-14);
    const int n = 3;
    // z^{n+1} C(pi_n w)(z) -> -1 / (2 pi i gamma_n^2)
    const double g = static_cast<double>(t.gamma[n]);
    const cplx lim = -1.0 / (cplx(0, 2 * pi) * g * g);
    for (double r : {1e4, 1e5}) {
      const cplx z(0.0, r);
      const cplx v = std::pow(z, n + 1) * cauchy_transform(t, n, z);
      CHECK(std::abs(v / lim - 1.0) < 20.0 / r);
    }
    const cplx z(2.0, 0.5);
    CHECK(std::abs(cauchy_transform(t, 5, std::conj(z)) + std::conj(cauchy_transform(t, 5, z))) <
          1e-13 * std::abs(cauchy_transform(t, 5, z)));
    CHECK_THROWS_AS(cauchy_transform(t, 5, cplx(2.0, 1e-9)), Error);
    CHECK_NOTHROW(cauchy_transform(t, 5, cplx(-1e-3, 0.0)));
  }

  TEST_CASE("W kernels") {
    const auto& t = laguerre_table(0.7);
    const int n = 4;
    const cplx u(1.0, 0.5), v(3.0, -0.2);
    const auto a = w_kernels(t, n, u, v), b = w_kernels(t, n, v, u);
    CHECK(std::abs(a.w1 - b.w1) < 1e-13 * std::abs(a.w1));
    // degree n-1 in u: the n-th forward difference vanishes
    cplx diff = 0.0;
    double scale = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double c = (k % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
      const cplx w = w_kernels(t, n, u + 0.7 * k, v).w1;
      diff += c * w;
      scale += std::abs(c * w);
    }
    CHECK(std::abs(diff) < 1e-12 * scale);
    REQUIRE(a.w2);
    REQUIRE(a.w3);
    const cplx cn_u = cauchy_transform(t, n, u), cm_u = cauchy_transform(t, n - 1, u);
    const cplx cn_v = cauchy_transform(t, n, v), cm_v = cauchy_transform(t, n - 1, v);
    const cplx pn_v = eval_pn(t, n, v) / static_cast<double>(t.gamma[n]);
    const cplx pm_v = eval_pn(t, n - 1, v) / static_cast<double>(t.gamma[n - 1]);
    const cplx w2 = (cn_u * pm_v - cm_u * pn_v) / (u - v);
    const cplx w3 = (cn_u * cm_v - cm_u * cn_v) / (u - v);
    CHECK(std::abs(*a.w2 - w2) < 1e-12 * std::abs(w2));
    CHECK(std::abs(*a.w3 - w3) < 1e-12 * std::abs(w3));
    const auto real_u = w_kernels(t, n, 2.0, v);
    CHECK(!real_u.w2);
    CHECK_THROWS_AS(w_kernels(t, n, u, u), Error);
    const double s = 0.01;
    const auto sc = scaled_w_kernels(t, n, u, v, s);
    const auto raw = w_kernels(t, n, s * u, s * v);
    const double g = static_cast<double>(t.gamma[n - 1]);
    CHECK(std::abs(sc.w1 - s * g * g * raw.w1) < 1e-13 * std::abs(sc.w1));
  }

  TEST_CASE("orthonormality") {
    const std::vector<std::vector<double>> qs = {{0.0, 1.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0, 1.0}, {0.0, 1.0, 0.0, 1.0}};
    for (double alpha : {-0.4, 0.0, 0.5, 1.5}) {
      for (const auto& q : qs) {
        const auto t = build_table(WeightSpec(alpha, q), 30);
        const double r = orthonormality_residual(t, 30);
        INFO("alpha=" << alpha << " m=" << q.size() - 1);
        CHECK(r <= 1e-20);
      }
    }
  }

  TEST_CASE("precision doubling and serialisation") {
    const WeightSpec spec(0.5, {0.0, 1.0, 0.0, 1.0});
    const auto lo = build_table(spec, 30, 50);
    const auto hi = build_table(spec, 30, 100);
    CHECK(hi.precision_digits == 100);
    for (int n = 0; n <= 30; ++n) {
      CHECK(rel(lo.a[n], hi.a[n]) <= 1e-20);
      CHECK(rel(lo.b[n], hi.b[n]) <= 1e-20);
      CHECK(rel(lo.gamma[n], hi.gamma[n]) <= 1e-20);
    }
    const auto back = table_from_json(table_to_json(lo));
    CHECK(back.spec == lo.spec);
    CHECK(back.n_max == lo.n_max);
    for (int n = 0; n <= 30; ++n) {
      CHECK(back.a[n] == lo.a[n]);
      CHECK(back.b[n] == lo.b[n]);
      CHECK(back.gamma[n] == lo.gamma[n]);
    }
    CHECK(cauchy_transform(back, 3, cplx(1, 1)) == cauchy_transform(lo, 3, cplx(1, 1)));
    CHECK_THROWS_AS(table_from_json(nlohmann::json::parse(R"({"format": 3})")), Error);
    CHECK_THROWS_AS(build_table(spec, 101), Error);
  }
}
