#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace lagasym {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial with real coefficients, lowest degree first.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<double>& coeffs() const { return c_; }
  // -1 for the empty polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  RealPolynomial derivative() const;
  // Coefficients of p(x0 + t) in powers of t.
  RealPolynomial shifted(double x0) const;

 private:
  std::vector<double> c_;
};

// A_k = prod_{j=1}^k (2j-1)/(2j), exactly.
Rational a_constant(unsigned k);
double a_value(unsigned k);

// Weight x^alpha exp(-Q(x)) on (0, inf). Validated on construction.
class WeightSpec {
 public:
  WeightSpec(double alpha, std::vector<double> q);

  double alpha() const { return alpha_; }
  const RealPolynomial& q() const { return q_; }
  int m() const { return q_.degree(); }
  double q_coeff(int k) const { return q_[static_cast<std::size_t>(k)]; }

  static WeightSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  friend bool operator==(const WeightSpec& a, const WeightSpec& b) {
    return a.alpha_ == b.alpha_ && a.q_.coeffs() == b.q_.coeffs();
  }

 private:
  double alpha_;
  RealPolynomial q_;
};

double log_weight(const WeightSpec& spec, double x);
double eval_weight(const WeightSpec& spec, double x);

}  // namespace lagasym
