#pragma once

#include <map>
#include <string>

#include "antlab/common.hpp"

namespace antlab {

// A numerically computed constant together with a rigorous truncation /
// quadrature bound and the parameters that produced it.
struct ConstantValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::map<std::string, double> parameters;
};

// Archimedean area factor of the main term: int_0^1 sqrt(1 - t^4) dt.
ConstantValue quartic_area(double tolerance);

// Singular series nu = prod_p (1 - chi4(p)/(p-1)).  The raw product is only
// conditionally convergent; this evaluates the absolutely convergent
// rearrangement (4/pi) prod_p (1 - chi4(p)/(p-1)) (1 - chi4(p)/p)^{-1}
// truncated at prime_limit, with a p^{-2} tail bound.
ConstantValue singular_series(u64 prime_limit);

// mu(I) = int_I sqrt(x - t^2) dt for I = (X, X(1+eta)], by the exact
// antiderivative t*sqrt(x-t^2)/2 + (x/2) asin(t/sqrt(x)).
double circle_strip_area(double x, double X, double eta);

// nu * 4 * area * x^{3/4} / (log x)^2.
double predicted_prime_count(double x, double nu, double area);

}  // namespace antlab
