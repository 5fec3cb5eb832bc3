#include "lagasym/quadrature.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "lagasym/error.hpp"

namespace lagasym {

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw Error(Errc::domain, "quadrature.gauss_jacobi", "need at least one node");
  if (!(a > -1.0) || !(b > -1.0))
    throw Error(Errc::domain, "quadrature.gauss_jacobi", "exponents must exceed -1");
  const double ab = a + b;
  Eigen::VectorXd diag(n), off(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      diag[k] = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      // the factor (1+a+b) cancels
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[k - 1] = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw Error(Errc::not_converged, "quadrature.gauss_jacobi", "eigen-solver failed");
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace lagasym
