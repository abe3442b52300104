#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "antlab/common.hpp"

namespace antlab {

struct GaussInt {
  i64 re = 0;
  i64 im = 0;

  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  GaussInt conj() const { return {re, -im}; }
  u64 norm() const {
    return static_cast<u64>(i128(re) * re + i128(im) * im);
  }
  bool is_zero() const { return re == 0 && im == 0; }
  // Argument in [0, 2pi).
  double arg() const;
};

// Not divisible by any rational prime, i.e. gcd(re, im) = 1.
bool is_primitive(GaussInt z);

// Euclidean gcd, normalised only up to units.
GaussInt gaussian_gcd(GaussInt a, GaussInt b);

// Exact quotient if den | num, else nullopt.
std::optional<GaussInt> try_divide(GaussInt num, GaussInt den);

// For primitive gamma with odd norm and m | N(gamma): the unique divisor
// lambda | gamma with N(lambda) = m, Re(lambda) positive and odd.
GaussInt canonical_norm_divisor(GaussInt gamma, u64 m);

// Im(conj(z1) z2), the lattice determinant; exact in 128-bit intermediates.
i64 lattice_det(GaussInt z1, GaussInt z2);

// True iff norm_lo <= N(z) < 2 norm_lo and arg(z) lies within `threshold` of
// a multiple of pi/2 (closed comparison).
bool in_exclusion_region(GaussInt z, double norm_lo, double threshold);

// Weight attached to the projection q = Re(conj(w) z): for kind prime_square,
// 2p log p when q = p^2 in I; for kind prime, log p when q = p in I.
enum class ProjKind { prime_square, prime };
double projection_prime_weight(GaussInt z, GaussInt w, Interval I, ProjKind kind);

// Solves q_i = Re(conj(w) z_i) for w given both projections; returns nullopt
// unless q1 z2 = q2 z1 (mod det), in which case w = -i (q1 z2 - q2 z1) / det.
std::optional<GaussInt> recover_lattice_point(i64 q1, i64 q2, GaussInt z1, GaussInt z2);

// Number of w with N(w) <= M and Re(conj(w) z) = q, for primitive z.
u64 count_projection_solutions(GaussInt z, i64 q, double M);

// Annulus sector c sqrt(N) < |z| <= c (1+omega1) sqrt(N),
// theta0 < arg z < theta0 + omega2 (angles taken mod 2pi).
struct AngularRegion {
  double c = 1.0;
  double theta0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double N = 1.0;

  bool contains(GaussInt z) const;
  double radius_hi() const { return c * (1.0 + omega1) * std::sqrt(N); }
  std::vector<GaussInt> lattice_points() const;
};

// Z(a, D) over pairs (z1, z2) in U1 x U2 with lattice_det = D and
// a z2 = z1 (mod D), restricted to primitive z with Re z > 0, z = 1 (mod 2),
// and (when exclusion_threshold > 0) arg(z) farther than the threshold from
// every multiple of pi/2.  The tilde variant replaces the weights by 1.
double pair_congruence_sum(i64 a, i64 D, const AngularRegion& U1, const AngularRegion& U2,
                           const std::function<double(GaussInt)>& beta, bool tilde,
                           double exclusion_threshold = 0.0);

// Y(a, D; h1, h2): double sum of h1(q1) h2(q2) over q1 = a q2 (mod D),
// (q1 q2, D) = 1, with q_i drawn from J_i; and the phi(D)-split main term
// Y(J1, h1; D) Y(J2, h2; D) / phi(D).
double prime_congruence_sum(i64 a, u64 D, Interval J1, Interval J2, ProjKind h1, ProjKind h2);
double prime_congruence_main(u64 D, Interval J1, Interval J2, ProjKind h1, ProjKind h2);

// Both sides of the Jacobi-symbol factorisation for the pair (z1, z2) with
// lattice_det = d1 * e * t (d1 odd squarefree, e odd, t a power of two):
//   lhs         = (k / d1) for the unique k with k z2 = z1 (mod det)
//   rhs_product = (y1/x1)(y2/x2) <d1 e, x1 x2> <x1, x2>
// The ratio lhs/rhs is constant on each class (e, t, z mod 8et).
struct ReciprocityFactors {
  int lhs = 0;
  int rhs_product = 0;
};
ReciprocityFactors reciprocity_chain(GaussInt z1, GaussInt z2, i64 e, i64 t);

// [z] = i^((x-1)/2) (y/x) for z = x + iy, x odd positive, gcd(x, y) = 1.
std::complex<double> spinor(GaussInt z);

// sum over primitive z with N(z) = n, Re z odd and positive, of
// (z/|z|)^k [z].
std::complex<double> spinor_norm_sum(u64 n, int k);

// #(Z[i] / q)^x, multiplicative over the rational factorisation of q.
u64 gaussian_euler_phi(u64 q);

inline constexpr u64 kDefaultSectorBudget = 100'000'000;

// Number of Gaussian primes mu = alpha (mod q) with N(mu) <= x and
// 0 <= arg mu <= theta (both ends closed), and the density prediction
// 4 / phi_Zi(q) * theta/(2 pi) * li(x).
u64 sector_prime_count(double x, u64 q, GaussInt alpha, double theta,
                       u64 budget = kDefaultSectorBudget);
double sector_prime_main(double x, u64 q, double theta);

}  // namespace antlab
