#include "lagasym/specfun.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "lagasym/error.hpp"
#include "mpcomplex.hpp"

namespace lagasym {

namespace {

using R = xreal;
using C = detail::mpc<R>;
using boost::multiprecision::cos;
using boost::multiprecision::sin;

const R& mp_pi() {
  static const R v = boost::math::constants::pi<R>();
  return v;
}

// -0.0 imaginary parts would select the lower branch in atan2.
cplx canon(cplx z) { return {z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}; }

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct MpPair {
  C value, derivative;
};

FunPair to_pair(const MpPair& p) { return {p.value.to_cplx(), p.derivative.to_cplx()}; }

// Stop once terms fall this far below the largest term seen.
const R& series_eps() {
  static const R v("1e-46");
  return v;
}

// ---------------------------------------------------------------- Airy

struct AiryParts {
  C f, g, df, dg;
};

AiryParts airy_parts(cplx zd) {
  const C z(zd);
  const C z3 = z * z * z;
  const C z2 = z * z;
  AiryParts p;
  C t(R(1)), u(R(1)), r(R(1) / 6);
  p.f = t;
  p.g = u;
  p.df = C(R(0));
  p.dg = u;
  R biggest = 1;
  const double zabs = std::abs(zd);
  const int kmin = static_cast<int>(std::pow(zabs, 1.5) / 3.0) + 2;
  for (int k = 1; k < 2000; ++k) {
    if (k > 1) r = r * z3 / R((3 * k - 1) * (3 * k));
    t = t * z3 / R((3 * k - 1) * (3 * k));
    u = u * z3 / R((3 * k) * (3 * k + 1));
    p.f += t;
    p.g += u;
    p.df += r * R(3 * k);
    p.dg += u * R(3 * k + 1);
    const R mag = abs(t) + abs(u);
    if (mag > biggest) biggest = mag;
    if (k > kmin && mag < series_eps() * biggest) break;
  }
  p.g = p.g * z;
  p.df = p.df * z2;
  return p;
}

const R& airy_c1() {
  static const R v = 1 / (boost::multiprecision::pow(R(3), R(2) / 3) *
                          boost::multiprecision::tgamma(R(2) / 3));
  return v;
}
const R& airy_c2() {
  static const R v = 1 / (boost::multiprecision::pow(R(3), R(1) / 3) *
                          boost::multiprecision::tgamma(R(1) / 3));
  return v;
}

FunPair airy_series(cplx z) {
  const AiryParts p = airy_parts(z);
  return to_pair({p.f * airy_c1() - p.g * airy_c2(), p.df * airy_c1() - p.dg * airy_c2()});
}

// Large-|z| expansion, |arg z| <= 2pi/3.
FunPair airy_asymptotic(cplx z) {
  const cplx sz = std::sqrt(z);
  const cplx zeta = (2.0 / 3.0) * z * sz;
  const cplx z14 = std::sqrt(sz);
  cplx su = 1.0, sv = 1.0;
  double u = 1.0;
  cplx pw = 1.0;
  double last = 1e300;
  for (int k = 1; k < 200; ++k) {
    u *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
    const double v = -(6.0 * k + 1) / (6.0 * k - 1) * u;
    pw *= -1.0 / zeta;
    const cplx tu = u * pw;
    const double mag = std::abs(tu);
    if (mag > last) break;  // asymptotic series started to diverge
    su += tu;
    sv += v * pw;
    last = mag;
    if (mag < 1e-18 * std::abs(su)) break;
  }
  const cplx e = std::exp(-zeta);
  const double spi = 2.0 * std::sqrt(std::numbers::pi);
  return {e / (spi * z14) * su, -z14 * e / spi * sv};
}

FunPair airy_large(cplx z) {
  if (std::abs(std::arg(z)) <= 2.0 * std::numbers::pi / 3.0) return airy_asymptotic(z);
  // Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z), w = exp(2 pi i / 3)
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const cplx w2 = w * w;
  const FunPair a = airy_asymptotic(w * z);
  const FunPair b = airy_asymptotic(w2 * z);
  return {-w * a.value - w2 * b.value, -w2 * a.derivative - w2 * w2 * b.derivative};
}

// --------------------------------------------------------------- Bessel

// J_nu and J_nu' for nu not a negative integer; z != 0 unless nu >= 0.
MpPair j_series(const R& nu, cplx zd) {
  const C z(canon(zd));
  const C w = -(z * z) / R(4);
  C c(R(1) / boost::multiprecision::tgamma(nu + 1));
  C s = c, ds = c * nu;
  R biggest = abs(c);
  const int kmin = static_cast<int>(std::abs(zd)) + 2;
  for (int k = 1; k < 4000; ++k) {
    c = c * w / (R(k) * (nu + k));
    s += c;
    ds += c * (2 * k + nu);
    const R mag = abs(c);
    if (mag > biggest) biggest = mag;
    if (k > kmin && mag < series_eps() * biggest) break;
  }
  const C half = z / R(2);
  const C p = detail::pow(half, nu);
  return {p * s, p / half * ds / R(2)};
}

// Y_n for integer n >= 0, value only.
C y_int_series(int n, cplx zd) {
  const C z(canon(zd));
  const C half = z / R(2);
  const C q = half * half;  // z^2/4
  const R& pi = mp_pi();
  const R euler = boost::math::constants::euler<R>();

  C finite_part(R(0));
  if (n > 0) {
    C qk(R(1));
    R fact_k = 1;  // k!
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        qk = qk * q;
        fact_k *= k;
      }
      finite_part += qk * (boost::multiprecision::tgamma(R(n - k)) / fact_k);
    }
    finite_part = finite_part / detail::pow(half, R(n));
  }

  const MpPair jn = j_series(R(n), zd);
  const C logpart = detail::log(half) * jn.value * (R(2) / pi);

  // sum_k (psi(k+1) + psi(n+k+1)) (-z^2/4)^k / (k! (n+k)!)
  R hk = 0, hnk = 0;
  for (int j = 1; j <= n; ++j) hnk += R(1) / j;
  C term(R(1) / boost::multiprecision::tgamma(R(n + 1)));
  C sum = term * (-2 * euler + hk + hnk);
  R biggest = abs(term);
  const C mq = -q;
  const int kmin = static_cast<int>(std::abs(zd)) + 2;
  for (int k = 1; k < 4000; ++k) {
    term = term * mq / (R(k) * (n + k));
    hk += R(1) / k;
    hnk += R(1) / (n + k);
    const C t = term * (-2 * euler + hk + hnk);
    sum += t;
    const R mag = abs(t);
    if (mag > biggest) biggest = mag;
    if (k > kmin && mag < series_eps() * biggest) break;
  }
  const C pn = detail::pow(half, R(n));
  return logpart - finite_part / pi - pn * sum / pi;
}

bool is_integer(double nu) { return nu == std::round(nu); }

MpPair y_series(double nu, cplx z) {
  if (is_integer(nu)) {
    const int n = static_cast<int>(std::abs(nu));
    const C zz(canon(z));
    C y = y_int_series(n, z), dy;
    if (n == 0) {
      dy = -y_int_series(1, z);
    } else {
      dy = y_int_series(n - 1, z) - y * R(n) / zz;
    }
    if (nu < 0 && n % 2 == 1) {  // Y_{-n} = (-1)^n Y_n
      y = -y;
      dy = -dy;
    }
    return {y, dy};
  }
  const R mnu(nu);
  const MpPair jp = j_series(mnu, z);
  const MpPair jm = j_series(-mnu, z);
  const R c = cos(mnu * mp_pi()), s = sin(mnu * mp_pi());
  return {(jp.value * c - jm.value) / s, (jp.derivative * c - jm.derivative) / s};
}

struct HankelPair {
  FunPair h1, h2;
};

// Large-|z| expansion, Re z >= 0.
HankelPair hankel_asymptotic(double nu, cplx z) {
  const double mu = 4.0 * nu * nu;
  const cplx iz = 1.0 / z;
  const cplx I(0.0, 1.0);
  cplx s1 = 1.0, s2 = 1.0, t1 = 1.0, t2 = 1.0;
  double a_prev = 1.0;
  cplx p1 = 1.0, p2 = 1.0;
  double last = 1e300;
  for (int k = 1; k < 200; ++k) {
    const double a = a_prev * (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
    const double b = a + (k - 0.5) * a_prev;
    p1 *= I * iz;
    p2 *= -I * iz;
    const double mag = std::max(std::abs(a), std::abs(b)) * std::pow(std::abs(iz), k);
    if (mag > last && k > 2) break;
    s1 += a * p1;
    s2 += a * p2;
    t1 += b * p1;
    t2 += b * p2;
    a_prev = a;
    last = mag;
    if (mag < 1e-18) break;
    if (a == 0.0 && b == 0.0) break;  // half-integer order terminates
  }
  const double pi = std::numbers::pi;
  const cplx omega = z - nu * pi / 2.0 - pi / 4.0;
  const cplx pref = std::sqrt(2.0 / (pi * z));
  const cplx e1 = std::exp(I * omega), e2 = std::exp(-I * omega);
  return {{pref * e1 * s1, I * pref * e1 * t1}, {pref * e2 * s2, -I * pref * e2 * t2}};
}

struct JY {
  FunPair j, y;
};

// Large |z|, any half-plane.
JY jy_large(double nu, cplx z) {
  const cplx I(0.0, 1.0);
  if (z.real() >= 0.0) {
    const HankelPair h = hankel_asymptotic(nu, z);
    return {{0.5 * (h.h1.value + h.h2.value), 0.5 * (h.h1.derivative + h.h2.derivative)},
            {(h.h1.value - h.h2.value) / (2.0 * I), (h.h1.derivative - h.h2.derivative) / (2.0 * I)}};
  }
  // z = exp(i m pi) z' with Re z' > 0
  const int m = z.imag() >= 0.0 ? 1 : -1;
  const JY r = jy_large(nu, -z);
  const double pi = std::numbers::pi;
  const cplx ep = std::polar(1.0, m * nu * pi), em = std::polar(1.0, -m * nu * pi);
  const cplx c = 2.0 * I * static_cast<double>(m) * std::cos(nu * pi);
  return {{ep * r.j.value, -ep * r.j.derivative},
          {em * r.y.value + c * r.j.value, -(em * r.y.derivative + c * r.j.derivative)}};
}

}  // namespace

FunPair airy(cplx z) {
  if (!finite(z) || std::abs(z) > 1e4)
    throw Error(Errc::domain, "specfun.airy", "|z| must not exceed 1e4");
  FunPair r = std::abs(z) <= airy_switch_radius ? airy_series(z) : airy_large(z);
  if (z.imag() == 0.0) r = {r.value.real(), r.derivative.real()};
  if (!finite(r.value) || !finite(r.derivative))
    throw Error(Errc::overflow, "specfun.airy", "Airy function overflows double range");
  return r;
}

FunPair airy_bi(cplx z) {
  if (std::abs(z) > airy_switch_radius)
    throw Error(Errc::domain, "specfun.airy_bi", "series range only");
  const AiryParts p = airy_parts(z);
  const R s3 = boost::multiprecision::sqrt(R(3));
  return to_pair({(p.f * airy_c1() + p.g * airy_c2()) * s3,
                  (p.df * airy_c1() + p.dg * airy_c2()) * s3});
}

FunPair bessel_j(double alpha, cplx z) {
  if (!(alpha > -1.0))
    throw Error(Errc::domain, "specfun.bessel_j", "order must exceed -1");
  if (!finite(z) || std::abs(z) > 1e4)
    throw Error(Errc::domain, "specfun.bessel_j", "|z| must not exceed 1e4");
  if (z == cplx(0.0)) {
    if (alpha < 0.0) throw Error(Errc::domain, "specfun.bessel_j", "J_alpha(0) infinite for alpha < 0");
    const double v = alpha == 0.0 ? 1.0 : 0.0;
    if (alpha > 0.0 && alpha < 1.0)
      throw Error(Errc::domain, "specfun.bessel_j", "J'_alpha(0) infinite for 0 < alpha < 1");
    const double d = alpha == 1.0 ? 0.5 : 0.0;
    return {v, d};
  }
  FunPair r = std::abs(z) <= bessel_switch_radius ? to_pair(j_series(R(alpha), z))
                                                  : jy_large(alpha, z).j;
  if (z.imag() == 0.0 && z.real() > 0.0) r = {r.value.real(), r.derivative.real()};
  if (!finite(r.value) || !finite(r.derivative))
    throw Error(Errc::overflow, "specfun.bessel_j", "Bessel function overflows double range");
  return r;
}

FunPair bessel_y(double alpha, cplx z) {
  if (z == cplx(0.0)) throw Error(Errc::domain, "specfun.bessel_y", "z = 0 is singular");
  if (!finite(z) || std::abs(z) > 1e4)
    throw Error(Errc::domain, "specfun.bessel_y", "|z| must not exceed 1e4");
  if (std::abs(z) <= bessel_switch_radius) return to_pair(y_series(alpha, z));
  return jy_large(alpha, z).y;
}

FunPair hankel(double alpha, cplx z, int kind) {
  if (kind != 1 && kind != 2) throw Error(Errc::domain, "specfun.hankel", "kind must be 1 or 2");
  if (z == cplx(0.0)) throw Error(Errc::domain, "specfun.hankel", "z = 0 is singular");
  if (!finite(z) || std::abs(z) > 1e4)
    throw Error(Errc::domain, "specfun.hankel", "|z| must not exceed 1e4");
  const R sg = kind == 1 ? R(1) : R(-1);
  FunPair r;
  if (std::abs(z) <= bessel_switch_radius) {
    const MpPair j = j_series(R(alpha), z);
    const MpPair y = y_series(alpha, z);
    const C iy{-y.value.im * sg, y.value.re * sg}, idy{-y.derivative.im * sg, y.derivative.re * sg};
    r = to_pair({j.value + iy, j.derivative + idy});
  } else if (z.real() >= 0.0) {
    const HankelPair h = hankel_asymptotic(alpha, z);
    r = kind == 1 ? h.h1 : h.h2;
  } else {
    // continuation from z' = -z, Re z' > 0, without forming J and Y
    const HankelPair h = hankel_asymptotic(alpha, -z);
    const double pi = std::numbers::pi;
    const cplx ep = std::polar(1.0, alpha * pi), em = std::polar(1.0, -alpha * pi);
    const double c2 = 2.0 * std::cos(alpha * pi);
    cplx a1, a2;  // result = a1 H1(z') + a2 H2(z')
    if (z.imag() >= 0.0) {
      if (kind == 1) { a1 = 0.0; a2 = -em; } else { a1 = ep; a2 = c2; }
    } else {
      if (kind == 1) { a1 = c2; a2 = em; } else { a1 = -ep; a2 = 0.0; }
    }
    r = {a1 * h.h1.value + a2 * h.h2.value, -(a1 * h.h1.derivative + a2 * h.h2.derivative)};
  }
  if (!finite(r.value) || !finite(r.derivative))
    throw Error(Errc::overflow, "specfun.hankel", "Hankel function overflows double range");
  return r;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw Error(Errc::domain, "specfun.gamma_fn", "x must be positive");
  return std::tgamma(x);
}

}  // namespace lagasym
