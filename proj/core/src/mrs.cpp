#include "lagasym/mrs.hpp"

#include <cmath>
#include <vector>

#include "lagasym/error.hpp"

namespace lagasym {

namespace {

using RatPoly = std::vector<Rational>;  // lowest degree first, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b.
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at_zero(const RatPoly& p) {
  for (const auto& c : p)
    if (c != 0) return c > 0 ? 1 : -1;  // lowest nonzero coefficient
  return 0;
}

int sign_at_inf(const RatPoly& p) { return p.empty() ? 0 : (p.back() > 0 ? 1 : -1); }

int sign_changes(const std::vector<int>& s) {
  int count = 0, last = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Number of distinct roots of p in (0, inf) by a Sturm sequence in exact
// arithmetic. p(0) != 0 is assumed.
int positive_root_count(RatPoly p) {
  trim(p);
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  std::vector<RatPoly> seq{p, d};
  while (seq.back().size() > 1) {
    RatPoly r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at0, atinf;
  for (const auto& s : seq) {
    at0.push_back(sign_at_zero(s));
    atinf.push_back(sign_at_inf(s));
  }
  return sign_changes(at0) - sign_changes(atinf);
}

}  // namespace

double mrs_lhs(const WeightSpec& spec, double beta) {
  const int m = spec.m();
  double r = 0.0;
  for (int k = m; k >= 1; --k) r = r * beta + 0.5 * k * spec.q_coeff(k) * a_value(k);
  return r * beta;
}

MrsResult mrs_beta(const WeightSpec& spec, long n) {
  if (n < 1) throw Error(Errc::domain, "mrs.mrs_beta", "n must be positive");
  const int m = spec.m();

  RatPoly g(static_cast<std::size_t>(m) + 1);
  g[0] = -n;
  for (int k = 1; k <= m; ++k)
    g[k] = Rational(k, 2) * Rational(spec.q_coeff(k)) * a_constant(k);
  const int roots = positive_root_count(g);
  if (roots != 1)
    throw Error(Errc::mrs_undefined, "mrs.mrs_beta",
                "MRS undefined: " + std::to_string(roots) + " positive roots for n=" +
                    std::to_string(n));

  auto G = [&](double b) { return mrs_lhs(spec, b) - static_cast<double>(n); };
  auto dG = [&](double b) {
    double r = 0.0;
    for (int k = m; k >= 1; --k) r = r * b + 0.5 * k * k * spec.q_coeff(k) * a_value(k);
    return r;
  };

  const auto [beta0, beta1] = mrs_series_coeffs(spec);
  (void)beta1;
  const double x0 = std::pow(static_cast<double>(n), 1.0 / m) * beta0;
  double lo = x0 / 4, hi = 4 * x0;
  for (int i = 0; i < 200 && G(lo) > 0; ++i) lo /= 2;
  for (int i = 0; i < 200 && G(hi) < 0; ++i) hi *= 2;
  if (G(lo) > 0 || G(hi) < 0)
    throw Error(Errc::mrs_undefined, "mrs.mrs_beta", "MRS undefined: root not bracketed");

  MrsResult res;
  double x = x0;
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
  for (int it = 1; it <= 200; ++it) {
    res.iterations = it;
    const double gx = G(x);
    if (gx == 0.0) break;
    if (gx < 0) lo = x; else hi = x;
    const double d = dG(x);
    double next = x - gx / d;
    if (!(d > 0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 4e-16 * x || hi - lo <= 4e-16 * x) break;
    if (it == 200)
      throw Error(Errc::not_converged, "mrs.mrs_beta", "root finder did not converge");
  }
  res.beta_n = x;
  res.residual = G(x);
  return res;
}

MrsSeries mrs_series_coeffs(const WeightSpec& spec) {
  const int m = spec.m();
  const double qm = spec.q_coeff(m);
  const double beta0 = std::pow(0.5 * m * qm * a_value(m), -1.0 / m);
  const double beta1 = -2.0 * (m - 1) * spec.q_coeff(m - 1) / (m * (2.0 * m - 1) * qm);
  return {beta0, beta1};
}

RealPolynomial rescaled_field(const WeightSpec& spec, double beta_n, long n) {
  std::vector<double> v(static_cast<std::size_t>(spec.m()) + 1);
  double pw = 1.0;
  for (int k = 0; k <= spec.m(); ++k) {
    v[k] = spec.q_coeff(k) * pw / static_cast<double>(n);
    pw *= beta_n;
  }
  return RealPolynomial(std::move(v));
}

}  // namespace lagasym
