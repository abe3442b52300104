#pragma once

#include <cmath>
#include <functional>

namespace antlab {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate
};

// Adaptive Gauss-Legendre integration of f over [a, b].  Each panel is
// bisected until the 15-point estimate agrees with the sum over the two
// halves, which handles the square-root endpoint behaviour that degrades
// fixed-order rules.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol);

}  // namespace antlab
