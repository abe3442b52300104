#include "antlab/quadrature.hpp"

#include <array>
#include <cstddef>

namespace antlab {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr std::array<double, 8> kNodes = {
    0.0,
    0.2011940939974345223006283033945962078128,
    0.3941513470775633698972073709810454683627,
    0.5709721726085388475372267372539106412383,
    0.7244177313601700474161860546139380096308,
    0.8482065834104272162006483207742168513662,
    0.9372733924007059043077589477102094712439,
    0.9879925180204854284895657185866125811469,
};
constexpr std::array<double, 8> kWeights = {
    0.2025782419255612728806201999675193148386,
    0.1984314853271115764561183264438393248186,
    0.1861610000155622110268005618664228245062,
    0.1662692058169939335532008604812088111309,
    0.1395706779261543144478047945110283225208,
    0.1071592204671719350118695466858693034155,
    0.0703660474881081247092674164506673384667,
    0.0307532419961172683546283935772044177217,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double acc = kWeights[0] * f(c);
  for (std::size_t i = 1; i < kNodes.size(); ++i) {
    double d = h * kNodes[i];
    acc += kWeights[i] * (f(c - d) + f(c + d));
  }
  return acc * h;
}

void adapt(const std::function<double(double)>& f, double a, double b, double whole,
           double tol, int depth, QuadratureResult& out) {
  double m = 0.5 * (a + b);
  double left = gl15(f, a, m);
  double right = gl15(f, m, b);
  double diff = std::fabs(left + right - whole);
  if (depth <= 0 || diff <= tol) {
    out.value += left + right;
    out.error += diff;
    return;
  }
  adapt(f, a, m, left, 0.5 * tol, depth - 1, out);
  adapt(f, m, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol) {
  QuadratureResult out;
  if (a == b) return out;
  adapt(f, a, b, gl15(f, a, b), tol, 48, out);
  return out;
}

}  // namespace antlab
