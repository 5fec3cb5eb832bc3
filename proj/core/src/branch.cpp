#include "lagasym/branch.hpp"

#include <cmath>
#include <numbers>

#include "lagasym/error.hpp"

namespace lagasym {

namespace {

void need_dir(int dir, const char* op) {
  if (dir == 0) throw Error(Errc::branch_cut, op, "argument on branch cut and no side given");
}

}  // namespace

cplx cut_sqrt(cplx w, int dir) {
  if (w.imag() != 0.0) return std::sqrt(w);
  if (w.real() >= 0.0) return {std::sqrt(w.real()), 0.0};
  need_dir(dir, "branch.sqrt");
  const double r = std::sqrt(-w.real());
  return {0.0, dir > 0 ? r : -r};
}

cplx cut_pow(cplx w, double p, int dir) {
  if (w.imag() != 0.0) return std::pow(w, p);
  const double x = w.real();
  if (x > 0.0) return {std::pow(x, p), 0.0};
  if (x == 0.0) {
    if (p > 0.0) return 0.0;
    if (p == 0.0) return 1.0;
    throw Error(Errc::domain, "branch.pow", "negative power of zero");
  }
  need_dir(dir, "branch.pow");
  const double mag = std::pow(-x, p);
  const double ang = (dir > 0 ? 1.0 : -1.0) * std::numbers::pi * p;
  return std::polar(mag, ang);
}

cplx cut_log(cplx w, int dir) {
  if (w.imag() != 0.0) return std::log(w);
  const double x = w.real();
  if (x > 0.0) return {std::log(x), 0.0};
  if (x == 0.0) throw Error(Errc::domain, "branch.log", "log of zero");
  need_dir(dir, "branch.log");
  return {std::log(-x), dir > 0 ? std::numbers::pi : -std::numbers::pi};
}

cplx cut_arccos(cplx w, int dir) {
  if (w.imag() != 0.0) return std::acos(w);
  const double x = w.real();
  if (std::abs(x) <= 1.0) return {std::acos(x), 0.0};
  need_dir(dir, "branch.arccos");
  const double s = dir > 0 ? 1.0 : -1.0;
  if (x > 1.0) return {0.0, -s * std::acosh(x)};
  return {std::numbers::pi, s * std::acosh(-x)};
}

cplx cut_arcsin(cplx w, int dir) {
  if (w.imag() != 0.0) return std::asin(w);
  const double x = w.real();
  if (std::abs(x) <= 1.0) return {std::asin(x), 0.0};
  need_dir(dir, "branch.arcsin");
  const double s = dir > 0 ? 1.0 : -1.0;
  if (x > 1.0) return {std::numbers::pi / 2, s * std::acosh(x)};
  return {-std::numbers::pi / 2, s * std::acosh(-x)};
}

int side_dir(cplx z, std::optional<Side> side) {
  if (z.imag() > 0.0) return 1;
  if (z.imag() < 0.0) return -1;
  if (!side) return 0;
  return *side == Side::upper ? 1 : -1;
}

}  // namespace lagasym
