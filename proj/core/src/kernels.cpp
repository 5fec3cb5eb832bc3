#include "lagasym/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lagasym/conformal.hpp"
#include "lagasym/error.hpp"
#include "lagasym/parallel.hpp"
#include "lagasym/specfun.hpp"

namespace lagasym {

namespace {

constexpr double pi = std::numbers::pi;

// Closer than this (relative) the difference quotients are replaced by their
// diagonal value at the midpoint; the error is O(d^2).
constexpr double diag_switch = 1e-5;

bool near_diagonal(double u, double v) {
  return std::abs(u - v) < diag_switch * std::max(1.0, std::max(std::abs(u), std::abs(v)));
}

double airy_diag(double u) {
  const FunPair a = airy(cplx(u));
  const double ai = a.value.real(), aip = a.derivative.real();
  return aip * aip - u * ai * ai;
}

double bessel_diag(double alpha, double x) {
  const FunPair j = bessel_j(alpha, cplx(std::sqrt(x)));
  const double jv = j.value.real(), jd = j.derivative.real();
  return 0.25 * (jd * jd + (1.0 - alpha * alpha / x) * jv * jv);
}

}  // namespace

double sine_kernel(double u, double v) {
  const double d = u - v;
  if (std::abs(d) < 1e-6) return 1.0 - (pi * d) * (pi * d) / 6.0;
  return std::sin(pi * d) / (pi * d);
}

double airy_kernel(double u, double v) {
  if (near_diagonal(u, v)) return airy_diag(0.5 * (u + v));
  const FunPair a = airy(cplx(u)), b = airy(cplx(v));
  return (a.value.real() * b.derivative.real() - b.value.real() * a.derivative.real()) / (u - v);
}

double bessel_kernel_hard(double alpha, double u, double v) {
  if (!(u > 0.0) || !(v > 0.0))
    throw Error(Errc::domain, "kernels.bessel_kernel_hard", "u and v must be positive");
  if (near_diagonal(u, v)) return bessel_diag(alpha, 0.5 * (u + v));
  const double su = std::sqrt(u), sv = std::sqrt(v);
  const FunPair ju = bessel_j(alpha, cplx(su)), jv = bessel_j(alpha, cplx(sv));
  const double num = ju.value.real() * sv * jv.derivative.real() -
                     jv.value.real() * su * ju.derivative.real();
  return num / (2.0 * (u - v));
}

const char* table1_name(Table1Kernel k) {
  switch (k) {
    case Table1Kernel::I: return "I";
    case Table1Kernel::II_plus: return "II+";
    case Table1Kernel::II_minus: return "II-";
    case Table1Kernel::III_plus: return "III+";
    case Table1Kernel::III_minus: return "III-";
    case Table1Kernel::III_mixed: return "III+-";
  }
  return "?";
}

cplx table1_kernel(double alpha, cplx u, cplx v, Table1Kernel which) {
  const char* op = "kernels.table1_kernel";
  if (u == v) throw Error(Errc::domain, op, "u = v is not supported");
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(Errc::domain, op, std::string(table1_name(which)) + ": " + what);
  };
  const cplx su = std::sqrt(u), sv = std::sqrt(v);
  const cplx pu = std::pow(u, alpha / 2), pv = std::pow(v, alpha / 2);
  auto cross = [&](const FunPair& fu, const FunPair& fv) {
    // f(sqrt u) sqrt v g'(sqrt v) - g(sqrt v) sqrt u f'(sqrt u)
    return fu.value * sv * fv.derivative - fv.value * su * fu.derivative;
  };
  switch (which) {
    case Table1Kernel::I: {
      need(u != 0.0 && v != 0.0, "u and v must be nonzero");
      const FunPair ju = bessel_j(alpha, su), jv = bessel_j(alpha, sv);
      return cross(ju, jv) / (2.0 * (u - v) * pu * pv);
    }
    case Table1Kernel::II_plus:
    case Table1Kernel::II_minus: {
      const bool plus = which == Table1Kernel::II_plus;
      need(plus ? u.imag() > 0.0 : u.imag() < 0.0, "u in the wrong half-plane");
      need(v != 0.0, "v must be nonzero");
      const FunPair hu = hankel(alpha, su, plus ? 1 : 2), jv = bessel_j(alpha, sv);
      const cplx r = pu / pv * cross(hu, jv) / (4.0 * (u - v));
      return plus ? r : -r;
    }
    case Table1Kernel::III_plus:
    case Table1Kernel::III_minus: {
      const bool plus = which == Table1Kernel::III_plus;
      need(plus ? (u.imag() > 0.0 && v.imag() > 0.0) : (u.imag() < 0.0 && v.imag() < 0.0),
           "u, v in the wrong half-plane");
      const int kind = plus ? 1 : 2;
      const FunPair hu = hankel(alpha, su, kind), hv = hankel(alpha, sv, kind);
      return pu * pv * cross(hu, hv) / (8.0 * (u - v));
    }
    case Table1Kernel::III_mixed: {
      need(u.imag() > 0.0 && v.imag() < 0.0, "need Im u > 0 and Im v < 0");
      const FunPair hu = hankel(alpha, su, 1), hv = hankel(alpha, sv, 2);
      return -pu * pv * cross(hu, hv) / (8.0 * (u - v));
    }
  }
  return 0.0;
}

double hard_edge_scale(const EquilibriumData& eq) {
  const double n = static_cast<double>(eq.n);
  return eq.beta_n / (4.0 * c_tilde_n(eq) * n * n);
}

const char* regime_name(KernelRegime r) {
  switch (r) {
    case KernelRegime::bulk: return "bulk";
    case KernelRegime::soft: return "soft";
    case KernelRegime::hard: return "hard";
    case KernelRegime::w_I: return "w_I";
    case KernelRegime::w_II: return "w_II";
    case KernelRegime::w_III: return "w_III";
  }
  return "?";
}

KernelRegime parse_regime(const std::string& s) {
  for (auto r : {KernelRegime::bulk, KernelRegime::soft, KernelRegime::hard, KernelRegime::w_I,
                 KernelRegime::w_II, KernelRegime::w_III})
    if (s == regime_name(r)) return r;
  throw Error(Errc::invalid_config, "kernels.parse_regime", "unknown regime '" + s + "'");
}

std::vector<double> default_grid(KernelRegime r) {
  std::vector<double> g;
  auto lin = [&](double a, double b, int k) {
    for (int i = 0; i < k; ++i) g.push_back(a + (b - a) * i / (k - 1));
  };
  switch (r) {
    case KernelRegime::bulk: lin(-2.0, 2.0, 9); break;
    case KernelRegime::soft: lin(-4.0, 2.0, 9); break;
    case KernelRegime::hard: g = {0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0, 18.0, 20.0}; break;
    case KernelRegime::w_I: lin(1.0, 10.0, 10); break;
    default: break;
  }
  return g;
}

std::pair<double, double> fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t k = x.size();
  if (k < 2 || y.size() != k) throw Error(Errc::domain, "kernels.fit_loglog", "need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / k;
  double rss = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = std::log(y[i]) - (icpt + slope * std::log(x[i]));
    rss += r * r;
  }
  return {slope, std::sqrt(rss / k)};
}

namespace {

struct PointPair {
  cplx u, v;
  Table1Kernel which;
};

// Complex pairs for the W_II and W_III checks, two per half-plane choice.
std::vector<PointPair> w_pairs(KernelRegime r) {
  using T = Table1Kernel;
  if (r == KernelRegime::w_II)
    return {{{2.0, 1.0}, {3.0, 0.0}, T::II_plus},
            {{1.0, 2.0}, {4.0, -1.0}, T::II_plus},
            {{2.0, -1.0}, {3.0, 0.0}, T::II_minus},
            {{3.0, -2.0}, {1.0, 1.0}, T::II_minus}};
  return {{{2.0, 1.0}, {3.0, 2.0}, T::III_plus},
          {{2.0, -1.0}, {4.0, -2.0}, T::III_minus},
          {{2.0, 1.0}, {3.0, -0.5}, T::III_mixed},
          {{1.0, 2.0}, {5.0, -1.0}, T::III_mixed}};
}

void check_grid(KernelRegime r, const std::vector<double>& g) {
  const char* op = "kernels.compare_limit";
  for (double x : g) {
    bool ok = std::isfinite(x);
    switch (r) {
      case KernelRegime::bulk: ok = ok && std::abs(x) <= 10.0; break;
      case KernelRegime::soft: ok = ok && x >= -10.0 && x <= 5.0; break;
      case KernelRegime::hard: ok = ok && x > 0.0 && x <= 50.0; break;
      case KernelRegime::w_I: ok = ok && x > 0.0 && x <= 50.0; break;
      default: break;
    }
    if (!ok) throw Error(Errc::domain, op, "grid value outside the validity domain of the limit");
  }
}

}  // namespace

KernelComparison compare_limit(const OracleTable& table, KernelRegime regime,
                               const std::vector<int>& n_list, const CompareOptions& opt) {
  const char* op = "kernels.compare_limit";
  if (n_list.size() < 2) throw Error(Errc::domain, op, "need at least two values of n");
  for (int n : n_list)
    if (n < 2 || n > table.n_max)
      throw Error(Errc::out_of_range, op, "n=" + std::to_string(n) + " outside the oracle range");
  if (regime == KernelRegime::bulk && !(opt.bulk_x > 0.0 && opt.bulk_x < 1.0))
    throw Error(Errc::domain, op, "bulk reference point must lie in (0,1)");
  const std::vector<double> grid = opt.grid.empty() ? default_grid(regime) : opt.grid;
  check_grid(regime, grid);

  const WeightSpec& spec = table.spec;
  const double alpha = spec.alpha();
  const double q0 = spec.q_coeff(0);

  struct Task {
    std::size_t n_index;
    cplx u, v;
    Table1Kernel which;
  };
  std::vector<EquilibriumData> eqs;
  std::vector<Task> tasks;
  const bool w_complex = regime == KernelRegime::w_II || regime == KernelRegime::w_III;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    eqs.push_back(build_equilibrium(spec, n_list[i]));
    if (w_complex) {
      for (const auto& p : w_pairs(regime)) tasks.push_back({i, p.u, p.v, p.which});
    } else {
      for (double u : grid)
        for (double v : grid) {
          if (regime == KernelRegime::w_I && std::abs(u - v) < opt.min_separation) continue;
          tasks.push_back({i, u, v, Table1Kernel::I});
        }
    }
  }

  std::vector<ComparisonSample> samples(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k) {
    const Task& t = tasks[k];
    const EquilibriumData& eq = eqs[t.n_index];
    const int n = n_list[t.n_index];
    const double nn = n, beta = eq.beta_n;
    const double u = t.u.real(), v = t.v.real();
    ComparisonSample s{n, t.u, t.v, 0.0, 0.0, 0.0};
    switch (regime) {
      case KernelRegime::bulk: {
        const double d = density(eq, opt.bulk_x);
        const double sc = nn * d;
        s.finite = beta / sc * cd_kernel(table, n, beta * (opt.bulk_x + u / sc),
                                         beta * (opt.bulk_x + v / sc));
        s.limit = sine_kernel(u, v);
        s.error = std::abs(s.finite - s.limit);
        break;
      }
      case KernelRegime::soft: {
        const double sc = c_n(eq) * std::pow(nn, 2.0 / 3.0);
        s.finite = beta / sc * cd_kernel(table, n, beta * (1.0 + u / sc), beta * (1.0 + v / sc));
        s.limit = airy_kernel(u, v);
        s.error = std::abs(s.finite - s.limit);
        break;
      }
      case KernelRegime::hard: {
        const double sc = hard_edge_scale(eq);
        s.finite = sc * cd_kernel(table, n, sc * u, sc * v);
        s.limit = bessel_kernel_hard(alpha, u, v);
        s.error = std::abs(s.finite - s.limit) / std::pow(u * v, alpha / 2);
        break;
      }
      case KernelRegime::w_I:
      case KernelRegime::w_II:
      case KernelRegime::w_III: {
        const double sc = hard_edge_scale(eq);
        const WKernels w = scaled_w_kernels(table, n, t.u, t.v, sc);
        if (regime == KernelRegime::w_I) {
          s.finite = w.w1 * std::pow(sc, alpha) * std::exp(-q0);
        } else if (regime == KernelRegime::w_II) {
          s.finite = *w.w2;
        } else {
          s.finite = *w.w3 * std::pow(sc, -alpha) * std::exp(q0);
        }
        s.limit = table1_kernel(alpha, t.u, t.v, t.which);
        s.error = std::abs(s.finite - s.limit);
        break;
      }
    }
    samples[k] = s;
  });

  KernelComparison out;
  out.regime = regime;
  out.n_list = n_list;
  out.sup_error.assign(n_list.size(), 0.0);
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    double& e = out.sup_error[tasks[k].n_index];
    if (!std::isfinite(samples[k].error))
      throw Error(Errc::overflow, op, "non-finite comparison error");
    e = std::max(e, samples[k].error);
  }
  std::vector<double> ns(n_list.begin(), n_list.end());
  std::tie(out.fitted_order, out.fit_residual) = fit_loglog(ns, out.sup_error);
  out.samples = std::move(samples);
  return out;
}

}  // namespace lagasym
