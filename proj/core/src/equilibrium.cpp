#include "lagasym/equilibrium.hpp"

#include <cmath>
#include <numbers>

#include "lagasym/error.hpp"
#include "lagasym/mrs.hpp"

namespace lagasym {

EquilibriumData build_equilibrium(const WeightSpec& spec, long n) {
  const MrsResult mr = mrs_beta(spec, n);
  EquilibriumData eq;
  eq.n = n;
  eq.alpha = spec.alpha();
  eq.beta_n = mr.beta_n;
  eq.v = rescaled_field(spec, mr.beta_n, n);

  const int m = spec.m();
  std::vector<double> h(m, 0.0), H(m, 0.0);
  for (int k = 0; k < m; ++k) {
    for (int j = k + 1; j <= m; ++j) {
      const double a = a_value(static_cast<unsigned>(j - k - 1));
      h[k] += j * eq.v[j] * a;
      H[k] += eq.v[j] * a;
    }
  }
  eq.h = RealPolynomial(std::move(h));
  eq.H = RealPolynomial(std::move(H));

  double s = 0.0;
  for (int k = 0; k <= m; ++k) s += eq.v[k] * a_value(static_cast<unsigned>(k));
  eq.ell_n = -s - 4.0 * std::numbers::ln2;

  bool positive = eq.h[0] > 0.0;
  for (double c : eq.h.coeffs()) positive = positive && c >= 0.0;
  if (!positive) {
    positive = true;
    for (int i = 0; i <= 1000 && positive; ++i) positive = eq.h(i / 1000.0) > 0.0;
  }
  if (!positive)
    throw Error(Errc::h_not_positive, "equilibrium.build_equilibrium",
                "h not positive on [0,1] for n=" + std::to_string(n));
  return eq;
}

double equilibrium_mass(const EquilibriumData& eq) {
  double s = 0.0;
  for (int k = 0; k <= eq.h.degree(); ++k)
    s += eq.h[k] * a_value(static_cast<unsigned>(k)) / (4.0 * (k + 1));
  return s;
}

double density(const EquilibriumData& eq, double x) {
  if (!(x > 0.0 && x <= 1.0))
    throw Error(Errc::domain, "equilibrium.density", "x must lie in (0,1]");
  return std::sqrt((1.0 - x) / x) * eq.h(x) / (2.0 * std::numbers::pi);
}

cplx phase_bracket(const EquilibriumData& eq, cplx z, int dir) {
  const cplx w = cut_sqrt(z, dir);
  const cplx s1 = cut_sqrt(1.0 - z, -dir);
  return 0.5 * eq.H(z) * w * s1 - 2.0 * cut_arccos(w, dir);
}

namespace {

int phase_dir(cplx z, std::optional<Side> side, const char* op) {
  if (z.imag() == 0.0 && z.real() > 1.0) return 1;  // both sides agree there
  const int dir = side_dir(z, side);
  if (dir == 0 && z.real() != 1.0)
    throw Error(Errc::branch_cut, op, "z on (-inf,1) needs a side");
  return dir == 0 ? 1 : dir;
}

}  // namespace

cplx xi_n(const EquilibriumData& eq, cplx z, std::optional<Side> side) {
  const int dir = phase_dir(z, side, "equilibrium.xi_n");
  if (z == cplx(1.0, 0.0)) return 0.0;
  return cplx(0.0, -static_cast<double>(dir)) * phase_bracket(eq, z, dir);
}

cplx int_psi_from_1(const EquilibriumData& eq, cplx z, std::optional<Side> side) {
  const int dir = phase_dir(z, side, "equilibrium.int_psi_from_1");
  if (z == cplx(1.0, 0.0)) return 0.0;
  return static_cast<double>(dir) * phase_bracket(eq, z, dir) / std::numbers::pi;
}

}  // namespace lagasym
