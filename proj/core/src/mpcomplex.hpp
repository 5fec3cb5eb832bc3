#pragma once

// Minimal complex arithmetic over MPFR reals (std::complex is not specified
// for non-builtin types).

#include <complex>

#include "lagasym/precision.hpp"

namespace lagasym::detail {

template <class R>
struct mpc {
  R re{0}, im{0};

  mpc() = default;
  mpc(const R& r) : re(r), im(0) {}
  mpc(const R& r, const R& i) : re(r), im(i) {}
  explicit mpc(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_cplx() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  mpc& operator+=(const mpc& o) { re += o.re; im += o.im; return *this; }
  mpc& operator-=(const mpc& o) { re -= o.re; im -= o.im; return *this; }
  mpc& operator*=(const mpc& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  mpc& operator*=(const R& s) { re *= s; im *= s; return *this; }
  mpc& operator/=(const R& s) { re /= s; im /= s; return *this; }
  mpc& operator/=(const mpc& o) {
    const R d = o.re * o.re + o.im * o.im;
    R r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend mpc operator+(mpc a, const mpc& b) { return a += b; }
  friend mpc operator-(mpc a, const mpc& b) { return a -= b; }
  friend mpc operator*(mpc a, const mpc& b) { return a *= b; }
  friend mpc operator*(mpc a, const R& s) { return a *= s; }
  friend mpc operator*(const R& s, mpc a) { return a *= s; }
  friend mpc operator/(mpc a, const mpc& b) { return a /= b; }
  friend mpc operator/(mpc a, const R& s) { return a /= s; }
  friend mpc operator-(const mpc& a) { return {-a.re, -a.im}; }
};

template <class R>
R abs(const mpc<R>& z) {
  using boost::multiprecision::hypot;
  return hypot(z.re, z.im);
}

template <class R>
mpc<R> exp(const mpc<R>& z) {
  const R e = boost::multiprecision::exp(z.re);
  return {e * boost::multiprecision::cos(z.im), e * boost::multiprecision::sin(z.im)};
}

// Principal branch.
template <class R>
mpc<R> log(const mpc<R>& z) {
  return {boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re)};
}

template <class R>
mpc<R> pow(const mpc<R>& z, const R& p) {
  if (z.re == 0 && z.im == 0) return mpc<R>(R(0));
  return exp(log(z) * p);
}

}  // namespace lagasym::detail
