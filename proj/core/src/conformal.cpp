#include "lagasym/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lagasym/error.hpp"

namespace lagasym {

const char* region_name(Region r) {
  switch (r) {
    case Region::A_outer: return "A";
    case Region::B_bulk: return "B";
    case Region::C_airy: return "C";
    case Region::D_bessel: return "D";
  }
  return "?";
}

Region parse_region(const std::string& s) {
  if (s == "A") return Region::A_outer;
  if (s == "B") return Region::B_bulk;
  if (s == "C") return Region::C_airy;
  if (s == "D") return Region::D_bessel;
  throw Error(Errc::invalid_config, "conformal.parse_region", "unknown region '" + s + "'");
}

namespace {

int cut01_dir(cplx z, std::optional<Side> side, const char* op) {
  if (z.imag() != 0.0 || z.real() < 0.0 || z.real() > 1.0) return z.imag() < 0.0 ? -1 : 1;
  const int dir = side_dir(z, side);
  if (dir == 0) throw Error(Errc::branch_cut, op, "z on [0,1] needs a side");
  return dir;
}

}  // namespace

cplx phi_map(cplx z, std::optional<Side> side) {
  const int dir = cut01_dir(z, side, "conformal.phi_map");
  return 2.0 * (z - 0.5) + 2.0 * cut_sqrt(z, dir) * cut_sqrt(z - 1.0, dir);
}

cplx szego_D(double alpha, cplx z, std::optional<Side> side) {
  const int dir = cut01_dir(z, side, "conformal.szego_D");
  if (alpha == 0.0) return 1.0;
  const cplx phi = phi_map(z, dir > 0 ? Side::upper : Side::lower);
  return cut_pow(z, alpha / 2, dir) / cut_pow(phi, alpha / 2, dir);
}

double c_n(const EquilibriumData& eq) { return std::pow(0.5 * eq.h1(), 2.0 / 3.0); }

double c_tilde_n(const EquilibriumData& eq) {
  const double t = 0.5 * eq.h0();
  return t * t;
}

cplx f_hat_n(const EquilibriumData& eq, cplx z) {
  const cplx t = z - 1.0;
  const double r = std::abs(t);
  if (!(r < edge_disk_radius))
    throw Error(Errc::domain, "conformal.f_n", "z outside the disk around 1");
  if (r == 0.0) return 1.0;
  // h(s) s^{-1/2} = sum_k g_k (s-1)^k
  const RealPolynomial hs = eq.h.shifted(1.0);
  const int terms = std::clamp(static_cast<int>(std::ceil(std::log(1e-18) / std::log(r))), 1, 400);
  std::vector<double> binom(terms + 1);
  binom[0] = 1.0;
  for (int i = 1; i <= terms; ++i) binom[i] = binom[i - 1] * (-0.5 - (i - 1)) / i;
  cplx sum = 0.0, tk = 1.0;
  for (int k = 1; k <= terms; ++k) {
    tk *= t;
    double g = 0.0;
    for (int j = 0; j <= std::min(k, hs.degree()); ++j) g += hs[j] * binom[k - j];
    sum += g * tk / (k + 1.5);
  }
  const cplx phihat = 1.0 + 1.5 / eq.h1() * sum;
  return std::pow(phihat, 2.0 / 3.0);
}

cplx f_n(const EquilibriumData& eq, long n, cplx z) {
  return c_n(eq) * std::pow(static_cast<double>(n), 2.0 / 3.0) * (z - 1.0) * f_hat_n(eq, z);
}

namespace {

// arcsin(w)/w, even in w, hence a function of w^2 = z.
cplx asinc_sqrt(cplx z) {
  if (std::abs(z) < 1e-8) return 1.0 + z / 6.0 + 0.075 * z * z;
  const cplx w = std::sqrt(z);
  return std::asin(w) / w;
}

}  // namespace

cplx f_tilde_hat_n(const EquilibriumData& eq, cplx z) {
  if (!(std::abs(z) < edge_disk_radius))
    throw Error(Errc::domain, "conformal.f_tilde_n", "z outside the disk around 0");
  const cplx phihat = (0.5 * eq.H(z) * std::sqrt(1.0 - z) + 2.0 * asinc_sqrt(z)) / eq.h0();
  return phihat * phihat;
}

cplx f_tilde_n(const EquilibriumData& eq, long n, cplx z) {
  const double nn = static_cast<double>(n);
  return -c_tilde_n(eq) * nn * nn * z * f_tilde_hat_n(eq, z);
}

RegionTag classify_region(cplx z, double delta) {
  if (!(delta > 0.0 && delta < edge_disk_radius))
    throw Error(Errc::domain, "conformal.classify_region", "delta must lie in (0, 0.5)");
  const cplx u(z.real(), std::abs(z.imag()));
  if (std::abs(u - 1.0) <= delta) return {Region::C_airy, delta};
  if (std::abs(u) <= delta) return {Region::D_bessel, delta};
  if (u.real() > delta && u.real() < 1.0 - delta && u.imag() <= delta)
    return {Region::B_bulk, delta};
  return {Region::A_outer, delta};
}

bool in_region(cplx z, RegionTag tag) {
  const double d = tag.delta;
  const double tol = 1e-12;
  const cplx u(z.real(), std::abs(z.imag()));
  switch (tag.region) {
    case Region::C_airy: return std::abs(u - 1.0) <= d + tol;
    case Region::D_bessel: return std::abs(u) <= d + tol;
    case Region::B_bulk:
      return u.real() >= d - tol && u.real() <= 1.0 - d + tol && u.imag() <= d + tol;
    case Region::A_outer: {
      const bool inside_c = std::abs(u - 1.0) < d - tol;
      const bool inside_d = std::abs(u) < d - tol;
      const bool inside_b = u.real() > d + tol && u.real() < 1.0 - d - tol && u.imag() < d - tol;
      return !(inside_b || inside_c || inside_d);
    }
  }
  return false;
}

}  // namespace lagasym
