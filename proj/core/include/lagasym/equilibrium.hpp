#pragma once

#include <optional>

#include "lagasym/branch.hpp"
#include "lagasym/weight.hpp"

namespace lagasym {

struct EquilibriumData {
  long n = 0;
  double alpha = 0.0;
  double beta_n = 0.0;
  RealPolynomial v;  // V_n
  RealPolynomial h;  // density polynomial, degree m-1
  RealPolynomial H;  // phase polynomial, degree m-1
  double ell_n = 0.0;

  double h0() const { return h(0.0); }
  double h1() const { return h(1.0); }
  double dh1() const { return h.derivative()(1.0); }
};

// Throws h_not_positive if h_n fails the positivity check on [0,1].
EquilibriumData build_equilibrium(const WeightSpec& spec, long n);

// Sum_k h_k A_k / (4(k+1)), from (1/2pi) int_0^1 x^{k-1/2} (1-x)^{1/2} dx.
// Equals the total mass, i.e. 1.
double equilibrium_mass(const EquilibriumData& eq);

// (1/2pi) sqrt((1-x)/x) h_n(x) on (0,1].
double density(const EquilibriumData& eq, double x);

// -pi i int_1^z psi_n. Points of (-inf,1) need a side.
cplx xi_n(const EquilibriumData& eq, cplx z, std::optional<Side> side = std::nullopt);

// int_1^z psi_n = (1/2pi) H_n z^{1/2}(1-z)^{1/2} - (2/pi) arccos z^{1/2}
// for the upper side; the lower side is its negative reflection.
cplx int_psi_from_1(const EquilibriumData& eq, cplx z, std::optional<Side> side = std::nullopt);

// The bracket E(z) = (1/2) H z^{1/2} (1-z)^{1/2} - 2 arccos z^{1/2} with
// branches taken from direction `dir` (+1 upper, -1 lower).
cplx phase_bracket(const EquilibriumData& eq, cplx z, int dir);

}  // namespace lagasym
