#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagasym/precision.hpp"
#include "lagasym/weight.hpp"

namespace lagasym {

using cplx = std::complex<double>;

namespace detail {
struct OracleRuleCache;
}

// Extended-precision ground truth for the orthonormal polynomials of a
// weight: x p_k = b_k p_{k+1} + a_k p_k + b_{k-1} p_{k-1}, p_k = gamma_k x^k + ...
struct OracleTable {
  WeightSpec spec{0.0, {0.0, 1.0}};
  int n_max = 0;
  int precision_digits = 0;  // working precision used to build the table
  std::vector<xreal> a;      // a_0 .. a_{n_max}
  std::vector<xreal> b;      // b_0 .. b_{n_max}
  std::vector<xreal> gamma;  // gamma_0 .. gamma_{n_max}
  std::vector<xreal> moments;  // mu_0 .. mu_{2 n_max + 1}
  // Quadrature geometry the table was converged on (for Cauchy transforms).
  double rule_t_lo = 0.0, rule_t_hi = 0.0, rule_h = 0.0;

  std::shared_ptr<detail::OracleRuleCache> cache;
};

// mu_k = int_0^inf x^{k+alpha} e^{-Q} dx, k = 0..kmax, using at least `digits`
// working digits (supported up to 200). Values are rounded to xreal.
std::vector<xreal> compute_moments(const WeightSpec& spec, int kmax, int digits = 50);

// Discretised Stieltjes procedure on a nested exp-sinh trapezoid rule.
// digits selects the working precision (50 or 100).
OracleTable build_table(const WeightSpec& spec, int n_max, int digits = 50);

nlohmann::json table_to_json(const OracleTable& t);
OracleTable table_from_json(const nlohmann::json& j);

cplx eval_pn(const OracleTable& t, int n, cplx z);
// p_n(z) exp(log_factor), formed in extended precision.
cplx eval_pn_times_exp(const OracleTable& t, int n, cplx z, cplx log_factor);

// Christoffel-Darboux kernel sqrt(w(x) w(y)) sum_{k<n} p_k(x) p_k(y).
double cd_kernel(const OracleTable& t, int n, double x, double y);
// The plain sum without the weight factors.
double cd_sum(const OracleTable& t, int n, double x, double y);

// (1/2 pi i) int_0^inf pi_n(x) w(x) / (x - z) dx with pi_n = p_n / gamma_n.
cplx cauchy_transform(const OracleTable& t, int n, cplx z);

struct WKernels {
  cplx w1;
  std::optional<cplx> w2;  // needs u off [0, inf)
  std::optional<cplx> w3;  // needs u and v off [0, inf)
};

WKernels w_kernels(const OracleTable& t, int n, cplx u, cplx v);
// s gamma_{n-1}^2 W(s u, s v) for each kernel, formed without overflow.
WKernels scaled_w_kernels(const OracleTable& t, int n, cplx u, cplx v, double s);

// max |int p_j p_k w - delta_jk| over j, k <= jmax, using the rule shifted by
// half a step from the one the table was built on.
double orthonormality_residual(const OracleTable& t, int jmax);

}  // namespace lagasym
