#include "lagasym/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>

#include "halfline_rule.hpp"
#include "lagasym/error.hpp"
#include "mpcomplex.hpp"

namespace lagasym {

namespace detail {

// Node data shared by Cauchy transforms and residual checks: the rule the
// table converged on, its half-step shift, and p_k at all of their nodes.
struct OracleRuleCache {
  std::once_flag once;
  HalfLineRule<xreal> base, shifted;
  std::vector<std::vector<xreal>> p_base, p_shifted;  // [k][node]
};

}  // namespace detail

namespace {

using C = detail::mpc<xreal>;

template <class R>
struct Recurrence {
  std::vector<R> a, b, gamma, moments;
};

// Runs the Stieltjes procedure on a discrete measure.
template <class R>
Recurrence<R> stieltjes(const std::vector<R>& x, const std::vector<R>& w, int n_max) {
  const std::size_t m = x.size();
  Recurrence<R> out;
  R mu0 = 0;
  for (const auto& v : w) mu0 += v;
  std::vector<R> p(m, 1 / boost::multiprecision::sqrt(mu0)), prev(m, R(0)), r(m);
  out.gamma.push_back(1 / boost::multiprecision::sqrt(mu0));
  R b_prev = 0;
  for (int k = 0; k <= n_max; ++k) {
    R a = 0;
    for (std::size_t i = 0; i < m; ++i) a += w[i] * x[i] * p[i] * p[i];
    R nb2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = (x[i] - a) * p[i] - b_prev * prev[i];
      nb2 += w[i] * r[i] * r[i];
    }
    if (!(nb2 > 0))
      throw Error(Errc::precision_loss, "oracle.build_table",
                  "b_" + std::to_string(k) + "^2 <= 0: insufficient precision");
    const R b = boost::multiprecision::sqrt(nb2);
    out.a.push_back(a);
    out.b.push_back(b);
    if (k < n_max) out.gamma.push_back(out.gamma.back() / b);
    for (std::size_t i = 0; i < m; ++i) {
      prev[i] = p[i];
      p[i] = r[i] / b;
    }
    b_prev = b;
  }
  out.moments.assign(2 * static_cast<std::size_t>(n_max) + 2, R(0));
  for (std::size_t i = 0; i < m; ++i) {
    R xp = w[i];
    for (auto& mu : out.moments) {
      mu += xp;
      xp *= x[i];
    }
  }
  return out;
}

template <class R>
R max_rel_diff(const std::vector<R>& u, const std::vector<R>& v) {
  R worst = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const R d = boost::multiprecision::abs(u[i] - v[i]) / boost::multiprecision::abs(v[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

template <unsigned D>
OracleTable build_table_impl(const WeightSpec& spec, int n_max) {
  using R = mp_real<D>;
  const auto geom = detail::choose_geometry(spec, 2 * n_max + 2, static_cast<int>(D));
  auto rule = detail::HalfLineRule<R>::build(spec, geom);
  const R tol = boost::multiprecision::pow(R(10), -R(static_cast<int>(D) / 2 + 8));

  std::optional<Recurrence<R>> prev;
  for (int level = 0; level < 12; ++level) {
    Recurrence<R> cur = stieltjes(rule.x, rule.w, n_max);
    if (prev) {
      R d = max_rel_diff(cur.a, prev->a);
      d = std::max(d, max_rel_diff(cur.b, prev->b));
      d = std::max(d, max_rel_diff(cur.gamma, prev->gamma));
      if (d <= tol) {
        OracleTable t;
        t.spec = spec;
        t.n_max = n_max;
        t.precision_digits = static_cast<int>(D);
        for (const auto& v : cur.a) t.a.emplace_back(v);
        for (const auto& v : cur.b) t.b.emplace_back(v);
        for (const auto& v : cur.gamma) t.gamma.emplace_back(v);
        for (const auto& v : cur.moments) t.moments.emplace_back(v);
        t.rule_t_lo = rule.geom.t_lo;
        t.rule_t_hi = rule.geom.t_hi;
        t.rule_h = rule.geom.h;
        t.cache = std::make_shared<detail::OracleRuleCache>();
        return t;
      }
    }
    prev = std::move(cur);
    rule.refine(spec);
  }
  throw Error(Errc::not_converged, "oracle.build_table",
              "recurrence coefficients did not settle under step halving");
}

template <unsigned D>
std::vector<xreal> moments_impl(const WeightSpec& spec, int kmax) {
  using R = mp_real<D>;
  const auto geom = detail::choose_geometry(spec, kmax, static_cast<int>(D));
  auto rule = detail::HalfLineRule<R>::build(spec, geom);
  const R tol = boost::multiprecision::pow(R(10), -R(static_cast<int>(D) / 2 + 8));
  auto sums = [&] {
    std::vector<R> mu(static_cast<std::size_t>(kmax) + 1, R(0));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      R xp = rule.w[i];
      for (auto& v : mu) {
        v += xp;
        xp *= rule.x[i];
      }
    }
    return mu;
  };
  std::vector<R> prev = sums();
  for (int level = 0; level < 12; ++level) {
    rule.refine(spec);
    std::vector<R> cur = sums();
    if (max_rel_diff(cur, prev) <= tol) {
      std::vector<xreal> out;
      for (const auto& v : cur) out.emplace_back(v);
      return out;
    }
    prev = std::move(cur);
  }
  throw Error(Errc::not_converged, "oracle.compute_moments", "quadrature did not converge");
}

void check_n(const OracleTable& t, int n, int lo, const char* op) {
  if (n < lo || n > t.n_max)
    throw Error(Errc::out_of_range, op,
                "n=" + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(t.n_max) + "]");
}

// p_0 .. p_n at a complex point.
std::vector<C> p_values(const OracleTable& t, int n, const C& z) {
  std::vector<C> p;
  p.reserve(n + 1);
  p.emplace_back(t.gamma[0]);
  if (n >= 1) p.push_back((z - C(t.a[0])) * p[0] / t.b[0]);
  for (int k = 1; k < n; ++k)
    p.push_back(((z - C(t.a[k])) * p[k] - p[k - 1] * t.b[k - 1]) / t.b[k]);
  return p;
}

std::vector<xreal> p_values_real(const OracleTable& t, int n, const xreal& x) {
  std::vector<xreal> p;
  p.reserve(n + 1);
  p.push_back(t.gamma[0]);
  if (n >= 1) p.push_back((x - t.a[0]) * p[0] / t.b[0]);
  for (int k = 1; k < n; ++k) p.push_back(((x - t.a[k]) * p[k] - t.b[k - 1] * p[k - 1]) / t.b[k]);
  return p;
}

std::vector<std::vector<xreal>> p_at_nodes(const OracleTable& t,
                                           const detail::HalfLineRule<xreal>& r) {
  std::vector<std::vector<xreal>> p(t.n_max + 1, std::vector<xreal>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto v = p_values_real(t, t.n_max, r.x[i]);
    for (int k = 0; k <= t.n_max; ++k) p[k][i] = v[k];
  }
  return p;
}

detail::OracleRuleCache& rule_cache(const OracleTable& t) {
  if (!t.cache) throw Error(Errc::domain, "oracle.rule", "table has no rule cache");
  detail::OracleRuleCache& c = *t.cache;
  std::call_once(c.once, [&] {
    detail::RuleGeometry g{t.rule_t_lo, t.rule_t_hi, t.rule_h};
    c.base = detail::HalfLineRule<xreal>::build(t.spec, g);
    c.shifted = c.base.midpoints(t.spec);
    c.p_base = p_at_nodes(t, c.base);
    c.p_shifted = p_at_nodes(t, c.shifted);
  });
  return c;
}

xreal log_weight_mp(const WeightSpec& spec, const xreal& x) {
  xreal q = 0;
  const auto& cs = spec.q().coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) q = q * x + *it;
  return spec.alpha() * boost::multiprecision::log(x) - q;
}

const xreal& two_pi() {
  static const xreal v = 2 * boost::math::constants::pi<xreal>();
  return v;
}

// int p_n(x) w(x)/(x - z) dx in extended precision.
C cauchy_integral(const OracleTable& t, int n, cplx zd) {
  auto& c = rule_cache(t);
  const C z(zd);
  auto sum_on = [&](const detail::HalfLineRule<xreal>& r, const std::vector<xreal>* p) {
    C s;
    std::vector<xreal> pv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      xreal pn;
      if (p) {
        pn = (*p)[i];
      } else {
        pn = p_values_real(t, n, r.x[i])[n];
      }
      s += C(r.w[i] * pn) / (C(r.x[i]) - z);
    }
    return s;
  };
  C coarse = sum_on(c.base, &c.p_base[n]);
  C mid = sum_on(c.shifted, &c.p_shifted[n]);
  detail::HalfLineRule<xreal> cur = c.base;
  for (int level = 0; level < 8; ++level) {
    const C fine = (coarse + mid) / xreal(2);
    if (abs(coarse - mid) <= xreal("1e-14") * abs(fine)) return fine;
    if (level == 7) break;
    // descend one level: the current grid now includes the midpoints
    if (level == 0) {
      cur.x.insert(cur.x.end(), c.shifted.x.begin(), c.shifted.x.end());
      for (auto& v : cur.w) v /= 2;
      for (const auto& v : c.shifted.w) cur.w.push_back(v / 2);
      cur.geom.h /= 2;
    } else {
      cur.refine(t.spec);
    }
    coarse = fine;
    mid = sum_on(cur.midpoints(t.spec), nullptr);
  }
  throw Error(Errc::not_converged, "oracle.cauchy_transform",
              "quadrature did not converge (point too close to [0,inf)?)");
}

void check_off_axis(cplx z, const char* op) {
  const double dist = z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
  if (!(dist >= 1e-6 * (1.0 + std::abs(z))))
    throw Error(Errc::domain, op, "z too close to [0, inf)");
}

}  // namespace

std::vector<xreal> compute_moments(const WeightSpec& spec, int kmax, int digits) {
  if (kmax < 0) throw Error(Errc::domain, "oracle.compute_moments", "kmax must be >= 0");
  if (digits <= 50) return moments_impl<50>(spec, kmax);
  if (digits <= 100) return moments_impl<100>(spec, kmax);
  if (digits <= 200) return moments_impl<200>(spec, kmax);
  throw Error(Errc::domain, "oracle.compute_moments", "at most 200 digits supported");
}

OracleTable build_table(const WeightSpec& spec, int n_max, int digits) {
  if (n_max < 1 || n_max > 100)
    throw Error(Errc::domain, "oracle.build_table", "n_max must lie in [1, 100]");
  if (digits <= 50) return build_table_impl<50>(spec, n_max);
  if (digits <= 100) return build_table_impl<100>(spec, n_max);
  throw Error(Errc::domain, "oracle.build_table", "at most 100 digits supported");
}

namespace {

nlohmann::json to_strings(const std::vector<xreal>& v) {
  auto j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_decimal(x));
  return j;
}

std::vector<xreal> from_strings(const nlohmann::json& j, std::size_t expect, const char* key) {
  if (!j.is_array() || j.size() != expect)
    throw Error(Errc::invalid_config, "oracle.table_from_json",
                std::string("bad length for '") + key + "'");
  std::vector<xreal> v;
  for (const auto& s : j) {
    if (!s.is_string())
      throw Error(Errc::invalid_config, "oracle.table_from_json", "values must be strings");
    v.push_back(from_decimal(s.get<std::string>()));
  }
  return v;
}

std::string exact_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

nlohmann::json table_to_json(const OracleTable& t) {
  return nlohmann::json{{"format", "lagasym-oracle-table-1"},
                        {"spec", t.spec.to_json()},
                        {"n_max", t.n_max},
                        {"precision_digits", t.precision_digits},
                        {"rule", {{"t_lo", exact_double(t.rule_t_lo)},
                                  {"t_hi", exact_double(t.rule_t_hi)},
                                  {"h", exact_double(t.rule_h)}}},
                        {"a", to_strings(t.a)},
                        {"b", to_strings(t.b)},
                        {"gamma", to_strings(t.gamma)},
                        {"moments", to_strings(t.moments)}};
}

OracleTable table_from_json(const nlohmann::json& j) {
  try {
    OracleTable t;
    t.spec = WeightSpec::from_json(j.at("spec"));
    t.n_max = j.at("n_max").get<int>();
    t.precision_digits = j.at("precision_digits").get<int>();
    if (t.n_max < 1 || t.n_max > 100)
      throw Error(Errc::invalid_config, "oracle.table_from_json", "n_max out of range");
    const auto n = static_cast<std::size_t>(t.n_max) + 1;
    t.a = from_strings(j.at("a"), n, "a");
    t.b = from_strings(j.at("b"), n, "b");
    t.gamma = from_strings(j.at("gamma"), n, "gamma");
    t.moments = from_strings(j.at("moments"), 2 * n, "moments");
    const auto& r = j.at("rule");
    t.rule_t_lo = std::stod(r.at("t_lo").get<std::string>());
    t.rule_t_hi = std::stod(r.at("t_hi").get<std::string>());
    t.rule_h = std::stod(r.at("h").get<std::string>());
    t.cache = std::make_shared<detail::OracleRuleCache>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_config, "oracle.table_from_json", e.what());
  }
}

cplx eval_pn(const OracleTable& t, int n, cplx z) {
  check_n(t, n, 0, "oracle.eval_pn");
  return p_values(t, n, C(z))[n].to_cplx();
}

cplx eval_pn_times_exp(const OracleTable& t, int n, cplx z, cplx log_factor) {
  check_n(t, n, 0, "oracle.eval_pn");
  const C p = p_values(t, n, C(z))[n];
  return (p * detail::exp(C(log_factor))).to_cplx();
}

double cd_sum(const OracleTable& t, int n, double x, double y) {
  check_n(t, n, 1, "oracle.cd_kernel");
  const xreal X(x), Y(y);
  const auto px = p_values_real(t, n, X);
  const auto py = p_values_real(t, n, Y);
  if (std::abs(x - y) < 1e-8 * std::max(1.0, std::abs(x))) {
    xreal s = 0;
    for (int k = 0; k < n; ++k) s += px[k] * py[k];
    return static_cast<double>(s);
  }
  const xreal num = px[n] * py[n - 1] - px[n - 1] * py[n];
  return static_cast<double>(t.b[n - 1] * num / (X - Y));
}

double cd_kernel(const OracleTable& t, int n, double x, double y) {
  check_n(t, n, 1, "oracle.cd_kernel");
  const bool zero_ok = t.spec.alpha() >= 0.0;
  if (x < 0.0 || y < 0.0 || (!zero_ok && (x == 0.0 || y == 0.0)))
    throw Error(Errc::domain, "oracle.cd_kernel", "x and y must lie in the weight's domain");
  const xreal X(x), Y(y);
  const auto px = p_values_real(t, n, X);
  const auto py = p_values_real(t, n, Y);
  xreal core;
  if (std::abs(x - y) < 1e-8 * std::max(1.0, std::abs(x))) {
    core = 0;
    for (int k = 0; k < n; ++k) core += px[k] * py[k];
  } else {
    core = t.b[n - 1] * (px[n] * py[n - 1] - px[n - 1] * py[n]) / (X - Y);
  }
  if (x == 0.0 || y == 0.0) {
    if (t.spec.alpha() > 0.0) return 0.0;
    const double wx = eval_weight(t.spec, x), wy = eval_weight(t.spec, y);
    return static_cast<double>(core) * std::sqrt(wx * wy);
  }
  const xreal lw = (log_weight_mp(t.spec, X) + log_weight_mp(t.spec, Y)) / 2;
  return static_cast<double>(core * boost::multiprecision::exp(lw));
}

cplx cauchy_transform(const OracleTable& t, int n, cplx z) {
  check_n(t, n, 0, "oracle.cauchy_transform");
  check_off_axis(z, "oracle.cauchy_transform");
  const C s = cauchy_integral(t, n, z) / t.gamma[n];
  // divide by 2 pi i
  return (C(s.im, -s.re) / two_pi()).to_cplx();
}

namespace {

struct WParts {
  C w1;
  std::optional<C> w2, w3;
};

// W kernels times `scale`, with pi_k = p_k / gamma_k.
WParts w_parts(const OracleTable& t, int n, cplx ud, cplx vd, const xreal& scale) {
  check_n(t, n, 1, "oracle.w_kernels");
  if (ud == vd) throw Error(Errc::domain, "oracle.w_kernels", "u = v is not supported");
  const C u(ud), v(vd);
  const auto pu = p_values(t, n, u);
  const auto pv = p_values(t, n, v);
  const xreal& gn = t.gamma[n];
  const xreal& gm = t.gamma[n - 1];
  const C du = u - v;
  WParts out;
  out.w1 = (pu[n] * pv[n - 1] - pu[n - 1] * pv[n]) / du * (scale / (gn * gm));
  auto off_axis = [](cplx z) {
    const double dist = z.real() >= 0.0 ? std::abs(z.imag()) : std::abs(z);
    return dist >= 1e-6 * (1.0 + std::abs(z));
  };
  if (off_axis(ud)) {
    const C iu = C(xreal(0), -1 / two_pi());  // 1/(2 pi i)
    const C cn_u = cauchy_integral(t, n, ud) * iu;
    const C cm_u = cauchy_integral(t, n - 1, ud) * iu;
    out.w2 = (cn_u * pv[n - 1] - cm_u * pv[n]) / du * (scale / (gn * gm));
    if (off_axis(vd)) {
      const C cn_v = cauchy_integral(t, n, vd) * iu;
      const C cm_v = cauchy_integral(t, n - 1, vd) * iu;
      out.w3 = (cn_u * cm_v - cm_u * cn_v) / du * (scale / (gn * gm));
    }
  }
  return out;
}

WKernels to_kernels(const WParts& p) {
  WKernels k{p.w1.to_cplx(), std::nullopt, std::nullopt};
  if (p.w2) k.w2 = p.w2->to_cplx();
  if (p.w3) k.w3 = p.w3->to_cplx();
  return k;
}

}  // namespace

WKernels w_kernels(const OracleTable& t, int n, cplx u, cplx v) {
  return to_kernels(w_parts(t, n, u, v, xreal(1)));
}

WKernels scaled_w_kernels(const OracleTable& t, int n, cplx u, cplx v, double s) {
  const xreal S(s);
  const xreal g = t.gamma[n - 1];
  return to_kernels(w_parts(t, n, s * u, s * v, S * g * g));
}

double orthonormality_residual(const OracleTable& t, int jmax) {
  jmax = std::min(jmax, t.n_max);
  auto& c = rule_cache(t);
  xreal worst = 0;
  for (int j = 0; j <= jmax; ++j) {
    for (int k = j; k <= jmax; ++k) {
      xreal s = 0;
      for (std::size_t i = 0; i < c.shifted.size(); ++i)
        s += c.shifted.w[i] * c.p_shifted[j][i] * c.p_shifted[k][i];
      if (j == k) s -= 1;
      worst = std::max(worst, xreal(boost::multiprecision::abs(s)));
    }
  }
  return static_cast<double>(worst);
}

}  // namespace lagasym
