#pragma once

#include <vector>

#include "antlab/common.hpp"
#include "antlab/sequences.hpp"

namespace antlab {

// S(C, z): sum of c(n) over n with no prime factor below z (n = 1 counts).
double sift(const WeightedSequence& c, double z);

// The three-stage decomposition of pi(C) plus everything needed to verify it
// exactly:
//   s1   = S(C, x^delta)
//   s2   = sum over primes p in [x^delta, Y)           of S(C_p, p)
//   s3   = sum over primes p in [Y, x^(1/2-delta))     of S(C_p, p)
//   tail = sum over primes p in [x^(1/2-delta), sqrt x) of S(C_p, p)
// together with the recursion terms
//   t[n] = sum over p_n < ... < p_1 in [x^delta, Y), p_1...p_n < Y,
//          of S(C_{p_1...p_n}, x^delta)
//   u[n] = same tuples extended by p_{n+1} with p_1...p_n < Y <= p_1...p_{n+1},
//          of S(C_{p_1...p_{n+1}}, p_{n+1})
//   v[n] = tuples as in t[n], of S(C_{p_1...p_n}, p_n)
// Lists are indexed 1..n0 (v additionally holds v[n0+1], identically zero).
struct BuchstabReport {
  double s1 = 0, s2 = 0, s3 = 0, tail = 0;
  double sifted_at_sqrt = 0;  // S(C, sqrt x)
  std::vector<double> t, u, v;
  // residual[0]: S(C, sqrt x) - (s1 - s2 - s3 - tail)
  // residual[1]: s2 - v[1]
  // residual[1+n] (n=1..n0): v[n] - (t[n] - u[n] - v[n+1])
  // residual.back(): s2 - telescoped sum of (-1)^(n-1)(t[n]-u[n]) - (-1)^n0 v[n0+1]
  std::vector<double> residuals;
};

BuchstabReport buchstab_terms(const WeightedSequence& c, const SieveParams& params);

// One level of the recursion v[n] = t[n] - u[n] - v[n+1].
struct RecursionStep {
  double t = 0, u = 0, v = 0, v_next = 0;
};
RecursionStep recursion_step(const WeightedSequence& c, const SieveParams& params, int n);

// Exact three-way partition of u[n] (n = 1 or 2) by the size of the full
// prime product q = p_1...p_{n+1}:
//   low:    Y <= q < x^(1/2-delta)
//   middle: x^(1/2-delta) <= q < x^(1/2+delta)
//   high:   q >= x^(1/2+delta)
struct BoundarySplit {
  double low = 0, high = 0, middle = 0;
  double total() const { return low + high + middle; }
};
BoundarySplit u_split(const WeightedSequence& c, const SieveParams& params, int n);

// Support descriptions for the bilinear-form coefficients: either integers
// n = p_1...p_{j+1} with a prescribed smallest prime (prime_chain), or
// integers with no prime factor below a cut (rough).
struct CoefficientSupport {
  enum class Kind { prime_chain, rough };
  Kind kind = Kind::rough;
  int j = 0;                // prime_chain: number of large primes
  double tail_lo = 0.0;     // J = [tail_lo, tail_hi); rough uses tail_lo as V
  double tail_hi = 0.0;
  double chain_limit = 0.0;  // Y
  Interval window;           // (N', N'(1+omega)]
};

bool coefficient_indicator(const CoefficientSupport& spec, u64 n);

}  // namespace antlab
