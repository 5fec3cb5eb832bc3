#include "lagasym/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lagasym/error.hpp"
#include "lagasym/specfun.hpp"

namespace lagasym {

namespace {

constexpr double pi = std::numbers::pi;

AsymptoticValue plain(double v, double scale) {
  AsymptoticValue r;
  r.value = v;
  r.reduced = v;
  r.neglected_scale = scale;
  r.reduced_scale = scale;
  r.reduced_envelope = std::abs(v);
  return r;
}

void check_n(const EquilibriumData& eq, long n, const char* op) {
  if (n != eq.n)
    throw Error(Errc::domain, op, "n does not match the equilibrium data");
}

void finish(AsymptoticValue& r) {
  const cplx e = std::exp(r.log_prefactor);
  const double mag = std::exp(r.log_prefactor.real());
  r.value = e * r.reduced;
  r.neglected_scale = mag * r.reduced_scale;
  r.representable = std::isfinite(r.value.real()) && std::isfinite(r.value.imag()) &&
                     std::isfinite(r.neglected_scale) &&
                     (r.reduced == cplx(0.0) || mag > std::numeric_limits<double>::min());
}

// sin((alpha+1) arcsin u) / u, even in u.
cplx sin_ratio(double alpha, cplx u) {
  const double a1 = alpha + 1.0;
  if (std::abs(u) < 1e-4) return a1 * (1.0 + u * u * (1.0 - a1 * a1) / 6.0);
  return std::sin(a1 * std::asin(u)) / u;
}

// Amplitude of the oscillation-free part of the formulas near the edges:
// how close the local variables are to their turning points.
double edge_terms(const EquilibriumData& eq, long n, cplx z) {
  const double nn = static_cast<double>(n);
  const cplx xi = xi_n(eq, z, Side::upper);
  double s = 1.0 / nn;
  if (std::abs(xi) > 0.0) s += 1.0 / (nn * std::abs(xi));
  const cplx xi0 = xi - cplx(0.0, pi);
  if (std::abs(xi0) > 0.0) s += 1.0 / (nn * std::abs(xi0));
  return s;
}

}  // namespace

RecurrenceAsym recurrence_asym(const EquilibriumData& eq, long n) {
  check_n(eq, n, "asymptotics.recurrence_asym");
  const double nn = static_cast<double>(n);
  const double b = eq.beta_n, h1 = eq.h1(), a = eq.alpha;
  const double scale = b / (nn * nn);
  return {plain(b * (0.5 + (a + 1.0) / (h1 * nn)), scale),
          plain(b * (0.25 + a / (2.0 * h1 * nn)), scale)};
}

double gamma_correction(double alpha, const EquilibriumData& eq) {
  const double h0 = eq.h0(), h1 = eq.h1(), dh1 = eq.dh1();
  return (4 * alpha * alpha - 1) / (8 * h0) + (12 * alpha * alpha + 24 * alpha + 11) / (24 * h1) -
         dh1 / (8 * h1 * h1);
}

AsymptoticValue gamma_asym(const WeightSpec& spec, const EquilibriumData& eq, long n) {
  check_n(eq, n, "asymptotics.gamma_asym");
  const double nn = static_cast<double>(n);
  const double alpha = spec.alpha();
  const double bracket = 1.0 - gamma_correction(alpha, eq) / nn;
  if (!(bracket > 0.0))
    throw Error(Errc::domain, "asymptotics.gamma_asym", "correction factor not positive at this n");
  AsymptoticValue r;
  r.log_prefactor = -(nn + alpha / 2 + 0.5) * std::log(eq.beta_n) - 0.5 * nn * eq.ell_n +
                    0.5 * std::log(2.0 / pi) + alpha * std::numbers::ln2 + std::log(bracket);
  r.reduced = 1.0;
  r.reduced_envelope = 1.0;
  r.reduced_scale = 1.0 / (nn * nn);
  finish(r);
  return r;
}

AsymptoticValue pn_asym(const WeightSpec& spec, const EquilibriumData& eq, long n, cplx z,
                        RegionTag region) {
  check_n(eq, n, "asymptotics.pn_asym");
  if (z.imag() < 0.0) {
    AsymptoticValue r = pn_asym(spec, eq, n, std::conj(z), region);
    r.value = std::conj(r.value);
    r.log_prefactor = std::conj(r.log_prefactor);
    r.reduced = std::conj(r.reduced);
    return r;
  }
  if (!in_region(z, region))
    throw Error(Errc::region_mismatch, "asymptotics.pn_asym",
                std::string("point not in region ") + region_name(region.region));

  const double alpha = spec.alpha();
  const double beta = eq.beta_n;
  const double nn = static_cast<double>(n);
  const cplx I(0.0, 1.0);

  AsymptoticValue r;
  if (z == cplx(0.0))
    throw Error(Errc::domain, "asymptotics.pn_asym", "z = 0 is excluded");
  r.log_prefactor = -(alpha / 2) * (std::log(beta) + cut_log(z, 1)) + 0.5 * spec.q()(beta * z);

  switch (region.region) {
    case Region::A_outer: {
      const cplx phi = phi_map(z, Side::upper);
      const cplx xi = xi_n(eq, z, Side::upper);
      r.reduced = std::sqrt(2.0 / (pi * beta)) * cut_pow(phi, 0.5 * (alpha + 1), 1) /
                  (2.0 * cut_pow(z, 0.25, 1) * cut_pow(z - 1.0, 0.25, 1)) * std::exp(nn * xi);
      r.reduced_envelope = std::abs(r.reduced);
      r.reduced_scale = r.reduced_envelope * edge_terms(eq, n, z);
      break;
    }
    case Region::B_bulk: {
      const cplx theta = 0.5 * (alpha + 1) * cut_arccos(2.0 * z - 1.0, 1) -
                         pi * nn * int_psi_from_1(eq, z, Side::upper) - pi / 4;
      const cplx amp =
          std::sqrt(2.0 / (pi * beta)) / (cut_pow(z, 0.25, 1) * cut_pow(1.0 - z, 0.25, -1));
      r.reduced = amp * std::cos(theta);
      r.reduced_envelope = std::abs(amp) * std::cosh(theta.imag());
      r.reduced_scale = r.reduced_envelope * edge_terms(eq, n, z);
      break;
    }
    case Region::C_airy: {
      const cplx f = f_n(eq, n, z);
      // f / (z-1), kept separate so z = 1 needs no limit
      const cplx rr = c_n(eq) * std::pow(nn, 2.0 / 3.0) * f_hat_n(eq, z);
      const cplx u = cut_sqrt(1.0 - z, -1);
      const cplx c = std::cos((alpha + 1) * std::asin(u));
      const cplx s = sin_ratio(alpha, u);
      const FunPair ai = airy(f);
      const cplx amp = std::sqrt(2.0 / beta) / std::pow(z, 0.25);
      const cplx t1 = c * std::pow(rr, 0.25) * ai.value;
      const cplx t2 = s * std::pow(rr, -0.25) * ai.derivative;
      r.reduced = amp * (t1 - t2);
      r.reduced_envelope = std::abs(amp) * (std::abs(t1) + std::abs(t2));
      r.reduced_scale = r.reduced_envelope / nn;
      break;
    }
    case Region::D_bessel: {
      const cplx fh = f_tilde_hat_n(eq, z);
      const cplx ph = std::sqrt(fh);  // phi~hat, close to 1
      const double ct = c_tilde_n(eq);
      const cplx w = eq.h0() * nn * cut_sqrt(z, 1) * ph;
      const cplx zeta1 = 0.5 * (alpha + 1) * cut_arccos(2.0 * z - 1.0, 1) - pi * alpha / 2;
      const FunPair j = bessel_j(alpha, w);
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const cplx amp = sign * std::sqrt(2.0 / beta) * std::pow(ct * nn * nn, 0.25) *
                       std::sqrt(ph) / cut_pow(1.0 - z, 0.25, -1);
      const cplx sz = std::sin(zeta1), cz = std::cos(zeta1);
      r.reduced = amp * (sz * j.value + cz * j.derivative);
      const FunPair h1 = hankel(alpha, w, 1), h2 = hankel(alpha, w, 2);
      const double mod = std::max(std::abs(h1.value), std::abs(h2.value));
      const double dmod = std::max(std::abs(h1.derivative), std::abs(h2.derivative));
      r.reduced_envelope = std::abs(amp) * (std::abs(sz) * mod + std::abs(cz) * dmod);
      r.reduced_scale = r.reduced_envelope / nn;
      break;
    }
  }
  finish(r);
  return r;
}

}  // namespace lagasym
