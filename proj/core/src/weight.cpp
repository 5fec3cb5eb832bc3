#include "lagasym/weight.hpp"

#include <cmath>
#include <limits>
#include <mutex>

#include "lagasym/error.hpp"

namespace lagasym {

double RealPolynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> RealPolynomial::operator()(std::complex<double> z) const {
  std::complex<double> r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * z + *it;
  return r;
}

RealPolynomial RealPolynomial::derivative() const {
  if (c_.size() <= 1) return RealPolynomial({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::shifted(double x0) const {
  // repeated synthetic division
  std::vector<double> a = c_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) a[k - 1] += x0 * a[k];
  return RealPolynomial(std::move(a));
}

Rational a_constant(unsigned k) {
  Rational r = 1;
  for (unsigned j = 1; j <= k; ++j) r *= Rational(2 * j - 1, 2 * j);
  return r;
}

double a_value(unsigned k) {
  static std::mutex mu;
  static std::vector<double> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (k >= cache.size()) {
    const auto old = static_cast<unsigned>(cache.size());
    cache.resize(k + 1);
    for (unsigned j = old; j <= k; ++j) cache[j] = a_constant(j).convert_to<double>();
  }
  return cache[k];
}

WeightSpec::WeightSpec(double alpha, std::vector<double> q) : alpha_(alpha) {
  if (!std::isfinite(alpha) || !(alpha > -1.0))
    throw Error(Errc::alpha_out_of_range, "weight_core.validate", "alpha must exceed -1");
  for (double c : q)
    if (!std::isfinite(c))
      throw Error(Errc::invalid_config, "weight_core.validate", "q coefficients must be finite");
  if (q.size() < 2 || !(q.back() > 0.0))
    throw Error(Errc::leading_coeff, "weight_core.validate",
                "q_m must be positive (need degree m >= 1)");
  q_ = RealPolynomial(std::move(q));
}

WeightSpec WeightSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("q"))
    throw Error(Errc::invalid_config, "weight_core.from_json",
                "config needs keys \"alpha\" and \"q\"");
  if (!j["alpha"].is_number() || !j["q"].is_array())
    throw Error(Errc::invalid_config, "weight_core.from_json",
                "\"alpha\" must be a number and \"q\" an array of numbers");
  std::vector<double> q;
  for (const auto& c : j["q"]) {
    if (!c.is_number())
      throw Error(Errc::invalid_config, "weight_core.from_json", "\"q\" entries must be numbers");
    q.push_back(c.get<double>());
  }
  return WeightSpec(j["alpha"].get<double>(), std::move(q));
}

nlohmann::json WeightSpec::to_json() const {
  return nlohmann::json{{"alpha", alpha_}, {"q", q_.coeffs()}};
}

double log_weight(const WeightSpec& spec, double x) {
  if (std::isnan(x) || x < 0.0)
    throw Error(Errc::domain, "weight_core.eval_weight", "x must be nonnegative");
  if (x == 0.0) {
    if (spec.alpha() < 0.0)
      throw Error(Errc::domain, "weight_core.eval_weight", "x = 0 needs alpha >= 0");
    if (spec.alpha() > 0.0) return -std::numeric_limits<double>::infinity();
    return -spec.q_coeff(0);
  }
  return spec.alpha() * std::log(x) - spec.q()(x);
}

double eval_weight(const WeightSpec& spec, double x) {
  const double lw = log_weight(spec, x);
  if (std::isnan(lw) || lw > std::log(std::numeric_limits<double>::max()))
    throw Error(Errc::overflow, "weight_core.eval_weight", "weight overflows double range");
  return std::exp(lw);
}

}  // namespace lagasym
