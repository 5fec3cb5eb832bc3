#pragma once

#include "lagasym/weight.hpp"

namespace lagasym {

struct MrsResult {
  double beta_n = 0.0;
  double residual = 0.0;  // G(beta_n) - n
  int iterations = 0;
};

// Left side of the MRS condition in closed form: sum_k (k/2) q_k A_k beta^k.
double mrs_lhs(const WeightSpec& spec, double beta);

// Unique positive root of mrs_lhs(beta) = n. Throws mrs_undefined when the
// number of positive roots is not exactly one.
MrsResult mrs_beta(const WeightSpec& spec, long n);

struct MrsSeries {
  double beta0;
  double beta1;
};
// First two terms of beta_n = n^{1/m} (beta0 + beta1 n^{-1/m} + ...).
MrsSeries mrs_series_coeffs(const WeightSpec& spec);

// V_n with coefficients q_k beta_n^k / n.
RealPolynomial rescaled_field(const WeightSpec& spec, double beta_n, long n);

}  // namespace lagasym
