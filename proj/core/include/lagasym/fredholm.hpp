#pragma once

namespace lagasym {

struct DeterminantResult {
  double s = 0.0;
  double det = 1.0;  // det(I - J_{alpha,s}) at quad_order nodes
  int quad_order = 0;
  double est_error = 0.0;  // |det(2 quad_order) - det(quad_order)|
};

inline constexpr int default_quad_order = 40;

// Nystrom discretisation of the hard-edge Bessel operator on L^2(0,s) with
// Gauss-Jacobi nodes for the weight x^alpha, 0 < s <= 50, order in [10, 200].
DeterminantResult fredholm_det_bessel(double alpha, double s, int quad_order);

// Starts at default_quad_order and doubles until est_error <= tol. Throws
// not_converged if the estimate is still above 1e-8 at order 200.
DeterminantResult fredholm_det_bessel_auto(double alpha, double s, double tol = 1e-10);

// The same determinant through the ODE characterisation: F(s) =
// exp(-(1/4) int_0^s log(s/x) q(x)^2 dx), 0 < s <= 20, alpha in (-1, 3].
double painleve_F(double alpha, double s);

// Limiting smallest-eigenvalue distribution 1 - det(I - J_{alpha,s^2}).
double smallest_eig_cdf(double alpha, double s);

}  // namespace lagasym
