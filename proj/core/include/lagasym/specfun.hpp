#pragma once

#include <complex>

namespace lagasym {

using cplx = std::complex<double>;

struct FunPair {
  cplx value;
  cplx derivative;
};

// Below these moduli the ascending series is summed in extended precision;
// above them the large-argument expansions are used in double precision.
inline constexpr double airy_switch_radius = 10.0;
inline constexpr double bessel_switch_radius = 25.0;

FunPair airy(cplx z);
// Second Airy function, series only (|z| <= airy_switch_radius). Kept for
// Wronskian checks.
FunPair airy_bi(cplx z);

// J_alpha and its derivative, principal branch, alpha > -1.
FunPair bessel_j(double alpha, cplx z);
// Y_alpha and its derivative, z != 0.
FunPair bessel_y(double alpha, cplx z);
// H^(1) (kind 1) or H^(2) (kind 2) and derivative, z != 0.
FunPair hankel(double alpha, cplx z, int kind);

double gamma_fn(double x);

}  // namespace lagasym
