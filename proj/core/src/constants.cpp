#include "antlab/constants.hpp"

#include <cmath>
#include <numbers>

#include "antlab/primes.hpp"
#include "antlab/quadrature.hpp"

namespace antlab {

ConstantValue quartic_area(double tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("quartic_area: tolerance must be > 0");
  auto q = integrate([](double t) { return std::sqrt(std::max(0.0, 1.0 - t * t * t * t)); },
                     0.0, 1.0, tolerance);
  ConstantValue out;
  out.value = q.value;
  out.error_bound = std::max(q.error, 1e-15);
  out.parameters["tolerance"] = tolerance;
  return out;
}

ConstantValue singular_series(u64 prime_limit) {
  if (prime_limit < 1000)
    throw std::invalid_argument("singular_series: prime_limit must be >= 1e3");
  PrimeTable table = primes_up_to(prime_limit);
  long double prod = 1.0L;
  for (u64 p : table.primes) {
    if (p == 2) continue;
    long double pd = static_cast<long double>(p);
    if (p % 4 == 1)
      prod *= pd * (pd - 2) / ((pd - 1) * (pd - 1));
    else
      prod *= pd * pd / (pd * pd - 1);
  }
  ConstantValue out;
  out.value = static_cast<double>(4.0L / std::numbers::pi_v<long double> * prod);
  // |log factor| <= 2/p^2 for p >= 3, so the tail is at most 2/(P-1).
  out.error_bound = out.value * 2.0 / static_cast<double>(prime_limit - 1);
  out.parameters["prime_limit"] = static_cast<double>(prime_limit);
  return out;
}

double circle_strip_area(double x, double X, double eta) {
  if (!(X > 0) || eta < 0) throw std::domain_error("circle_strip_area: need X > 0, eta >= 0");
  double hi = X * (1.0 + eta);
  double root = std::sqrt(x);
  if (hi > root * (1.0 + 1e-14)) throw std::domain_error("circle_strip_area: interval exceeds sqrt(x)");
  hi = std::min(hi, root);
  auto antiderivative = [&](double t) {
    double s = std::sqrt(std::max(0.0, x - t * t));
    return 0.5 * (t * s + x * std::asin(std::min(1.0, t / root)));
  };
  return antiderivative(hi) - antiderivative(X);
}

double predicted_prime_count(double x, double nu, double area) {
  if (x < 100) throw std::invalid_argument("predicted_prime_count: requires x >= 100");
  double lg = std::log(x);
  return nu * 4.0 * area * std::pow(x, 0.75) / (lg * lg);
}

}  // namespace antlab
