#pragma once

// Trapezoidal rule in t for x = exp((pi/2) sinh t) on (0, inf), carrying the
// weight x^alpha exp(-Q(x)) and the Jacobian in its node weights. Nested:
// halving h reuses every node already computed.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "lagasym/error.hpp"
#include "lagasym/precision.hpp"
#include "lagasym/weight.hpp"

namespace lagasym::detail {

struct RuleGeometry {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double h = 0.0;  // t_hi - t_lo is an integer multiple of h
};

// Log of the rule's integrand for the monomial x^deg, in double.
inline double log_integrand(const WeightSpec& spec, double t, double deg) {
  const double lx = 0.5 * std::numbers::pi * std::sinh(t);
  double q;
  if (lx > 700.0) {
    q = std::numeric_limits<double>::infinity();
  } else {
    q = spec.q()(std::exp(lx));
  }
  return (spec.alpha() + 1.0 + deg) * lx - q + std::log(0.5 * std::numbers::pi * std::cosh(t));
}

// Truncation interval such that integrands up to x^max_degree w(x) lose less
// than 10^-(digits+20) of their peak outside it.
inline RuleGeometry choose_geometry(const WeightSpec& spec, int max_degree, int digits) {
  const double drop = (digits + 20) * std::log(10.0);
  const double step = 1.0 / 64;
  auto scan = [&](double deg, double dir) {
    double tpk = 0.0, gpk = log_integrand(spec, 0.0, deg);
    for (double t = -8.0; t <= 8.0; t += step) {
      const double g = log_integrand(spec, t, deg);
      if (g > gpk) { gpk = g; tpk = t; }
    }
    double t = tpk;
    while (std::abs(t) < 12.0 && log_integrand(spec, t, deg) > gpk - drop) t += dir * step;
    return t;
  };
  RuleGeometry g;
  g.t_hi = scan(static_cast<double>(max_degree), 1.0) + 4 * step;
  // near 0 the polynomials are bounded by a power of the degree; add room
  const double lo_extra = 10 * std::log(10.0);
  {
    double tpk = 0.0, gpk = log_integrand(spec, 0.0, 0.0);
    for (double t = -8.0; t <= 8.0; t += step) {
      const double v = log_integrand(spec, t, 0.0);
      if (v > gpk) { gpk = v; tpk = t; }
    }
    double t = tpk;
    while (t > -12.0 && log_integrand(spec, t, 0.0) > gpk - drop - lo_extra) t -= step;
    g.t_lo = t - 4 * step;
  }
  g.h = 1.0 / 16;
  // align the interval to the initial grid
  const double span = std::ceil((g.t_hi - g.t_lo) / g.h) * g.h;
  g.t_hi = g.t_lo + span;
  return g;
}

template <class R>
struct HalfLineRule {
  RuleGeometry geom;
  std::vector<R> x, w;

  // node t -> (x, weight without the factor h)
  static void node(const WeightSpec& spec, const std::vector<R>& q, double t, R& xo, R& wo) {
    const R pi2 = boost::math::constants::half_pi<R>();
    const R tt(t);
    const R s = pi2 * boost::multiprecision::sinh(tt);
    xo = boost::multiprecision::exp(s);
    R qv = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) qv = qv * xo + *it;
    wo = boost::multiprecision::exp((spec.alpha() + 1) * s - qv) * pi2 *
         boost::multiprecision::cosh(tt);
  }

  static std::vector<R> q_coeffs(const WeightSpec& spec) {
    std::vector<R> q;
    for (double c : spec.q().coeffs()) q.emplace_back(c);
    return q;
  }

  static HalfLineRule build(const WeightSpec& spec, RuleGeometry g) {
    HalfLineRule r;
    r.geom = g;
    const auto q = q_coeffs(spec);
    const long count = std::lround((g.t_hi - g.t_lo) / g.h);
    r.x.resize(count + 1);
    r.w.resize(count + 1);
    for (long j = 0; j <= count; ++j) {
      node(spec, q, g.t_lo + j * g.h, r.x[j], r.w[j]);
      r.w[j] *= R(g.h);
    }
    return r;
  }

  // The rule on the midpoints of the current grid (same h, shifted by h/2).
  HalfLineRule midpoints(const WeightSpec& spec) const {
    HalfLineRule r;
    r.geom = geom;
    const auto q = q_coeffs(spec);
    const long count = std::lround((geom.t_hi - geom.t_lo) / geom.h);
    r.x.resize(count);
    r.w.resize(count);
    for (long j = 0; j < count; ++j) {
      node(spec, q, geom.t_lo + (j + 0.5) * geom.h, r.x[j], r.w[j]);
      r.w[j] *= R(geom.h);
    }
    return r;
  }

  // Halve h in place.
  void refine(const WeightSpec& spec) {
    HalfLineRule mid = midpoints(spec);
    for (auto& v : w) v /= 2;
    for (auto& v : mid.w) v /= 2;
    x.insert(x.end(), mid.x.begin(), mid.x.end());
    w.insert(w.end(), mid.w.begin(), mid.w.end());
    geom.h /= 2;
  }

  std::size_t size() const { return x.size(); }
};

}  // namespace lagasym::detail
