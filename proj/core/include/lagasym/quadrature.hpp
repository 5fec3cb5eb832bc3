#pragma once

#include <vector>

namespace lagasym {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss rule for (1-t)^a (1+t)^b on [-1,1], a, b > -1, from the
// eigen-decomposition of the Jacobi matrix. Nodes ascending.
QuadratureRule gauss_jacobi(int n, double a, double b);
QuadratureRule gauss_legendre(int n);

}  // namespace lagasym
