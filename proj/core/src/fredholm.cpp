#include "lagasym/fredholm.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "lagasym/error.hpp"
#include "lagasym/quadrature.hpp"
#include "lagasym/specfun.hpp"

namespace lagasym {

namespace {

// log det(I - M) for the symmetrised Nystrom matrix at `order` nodes.
double det_at(double alpha, double s, int order) {
  const QuadratureRule r = gauss_jacobi(order, 0.0, alpha);
  const double jac = std::pow(0.5 * s, alpha + 1.0);
  std::vector<double> x(order), sw(order), jv(order), jd(order), sq(order);
  for (int i = 0; i < order; ++i) {
    x[i] = 0.5 * s * (1.0 + r.nodes[i]);
    sw[i] = std::sqrt(r.weights[i] * jac);
    sq[i] = std::sqrt(x[i]);
    const FunPair j = bessel_j(alpha, cplx(sq[i]));
    // J(sqrt x) x^{-alpha/2} and sqrt x J'(sqrt x) x^{-alpha/2} are smooth at 0
    const double scale = std::pow(x[i], -alpha / 2);
    jv[i] = j.value.real() * scale;
    jd[i] = j.derivative.real() * scale;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(order, order);
  for (int i = 0; i < order; ++i) {
    for (int k = 0; k <= i; ++k) {
      double kern;
      if (i == k) {
        kern = 0.25 * (jd[i] * jd[i] + (1.0 - alpha * alpha / x[i]) * jv[i] * jv[i]);
      } else {
        kern = (jv[i] * sq[k] * jd[k] - jv[k] * sq[i] * jd[i]) / (2.0 * (x[i] - x[k]));
      }
      const double m = sw[i] * kern * sw[k];
      a(i, k) -= m;
      if (i != k) a(k, i) -= m;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() == Eigen::Success) {
    double ld = 0.0;
    for (int i = 0; i < order; ++i) ld += std::log(llt.matrixL()(i, i));
    return std::exp(2.0 * ld);
  }
  return Eigen::PartialPivLU<Eigen::MatrixXd>(a).determinant();
}

void check_args(double alpha, double s, const char* op) {
  if (!(alpha > -1.0)) throw Error(Errc::alpha_out_of_range, op, "alpha must exceed -1");
  if (!(s > 0.0) || s > 50.0) throw Error(Errc::domain, op, "s must lie in (0, 50]");
}

}  // namespace

DeterminantResult fredholm_det_bessel(double alpha, double s, int quad_order) {
  const char* op = "fredholm.fredholm_det_bessel";
  check_args(alpha, s, op);
  if (quad_order < 10 || quad_order > 200)
    throw Error(Errc::domain, op, "quad_order must lie in [10, 200]");
  DeterminantResult r;
  r.s = s;
  r.quad_order = quad_order;
  r.det = det_at(alpha, s, quad_order);
  r.est_error = std::abs(det_at(alpha, s, 2 * quad_order) - r.det);
  return r;
}

DeterminantResult fredholm_det_bessel_auto(double alpha, double s, double tol) {
  const char* op = "fredholm.fredholm_det_bessel";
  check_args(alpha, s, op);
  DeterminantResult r;
  r.s = s;
  int q = default_quad_order;
  double cur = det_at(alpha, s, q);
  for (;;) {
    const double fine = det_at(alpha, s, 2 * q);
    r.det = cur;
    r.quad_order = q;
    r.est_error = std::abs(fine - cur);
    if (r.est_error <= tol) return r;
    if (2 * q > 200) break;
    q *= 2;
    cur = fine;
  }
  if (r.est_error > 1e-8)
    throw Error(Errc::not_converged, op,
                "order-doubling estimate " + std::to_string(r.est_error) + " at order 200");
  return r;
}

double painleve_F(double alpha, double s) {
  const char* op = "fredholm.painleve_F";
  if (!(alpha > -1.0) || alpha > 3.0)
    throw Error(Errc::alpha_out_of_range, op, "alpha must lie in (-1, 3]");
  if (!(s > 0.0) || s > 20.0) throw Error(Errc::domain, op, "s must lie in (0, 20]");
  // alpha = 0 is solved by q = 1 exactly; the equation is singular there.
  if (alpha == 0.0) return std::exp(-s / 4);

  const double s0 = 1e-6;
  if (s <= s0) return 1.0;
  // q ~ c s^{alpha/2} (1 + d s) near 0
  const double c = 1.0 / (std::pow(2.0, alpha) * std::tgamma(1.0 + alpha));
  const double d = -1.0 / (4.0 * (alpha + 1.0));
  const double a1 = alpha + 1.0;
  const double sp = std::pow(s0, alpha / 2), sa1 = std::pow(s0, a1), t0 = std::log(s0);

  // state in t = log s: q, p = s q', A = int q^2 dx, B = int q^2 log x dx
  using State = std::array<double, 4>;
  State y{c * sp * (1.0 + d * s0), c * sp * (alpha / 2 + (alpha / 2 + 1.0) * d * s0),
          c * c * sa1 / a1, c * c * (sa1 * t0 / a1 - sa1 / (a1 * a1))};
  double blow_at = 0.0;
  auto rhs = [&](const State& st, State& dy, double t) {
    const double x = std::exp(t);
    const double q = st[0], p = st[1];
    const double den = q * q - 1.0;
    if (std::abs(den) < 1e-12 && blow_at == 0.0) blow_at = x;
    dy[0] = p;
    dy[1] = (q * p * p + 0.25 * x * q * den * den - 0.25 * alpha * alpha * q) / den;
    dy[2] = x * q * q;
    dy[3] = x * q * q * t;
  };
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(1e-14, 1e-13, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, rhs, y, t0, std::log(s), 1e-3);
  } catch (const std::exception& e) {
    throw Error(Errc::not_converged, op, std::string("step-size control failed: ") + e.what());
  }
  if (blow_at != 0.0 || !std::isfinite(y[0]) || !std::isfinite(y[2]) || !std::isfinite(y[3]))
    throw Error(Errc::not_converged, op,
                "ODE blow-up (q^2 reached 1) near s=" + std::to_string(blow_at));
  return std::exp(-0.25 * (std::log(s) * y[2] - y[3]));
}

double smallest_eig_cdf(double alpha, double s) {
  if (!(s > 0.0)) throw Error(Errc::domain, "fredholm.smallest_eig_cdf", "s must be positive");
  return 1.0 - fredholm_det_bessel_auto(alpha, s * s).det;
}

}  // namespace lagasym
