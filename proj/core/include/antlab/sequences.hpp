#pragma once

#include <vector>

#include "antlab/common.hpp"

namespace antlab {

enum class SeqKind { A, B, custom };

// Parameter bundle shared by the sequence builders and the sieve
// decomposition: x, the window I = (X, X(1+eta)], eta = 1/log x,
// delta = (log x)^(varpi - 1), Y = x^(1/3 + 1/48), and the recursion depth
// n0 = floor(log Y / (delta log x)).
struct SieveParams {
  u64 x = 0;
  double X = 0.0;
  double eta = 0.0;
  double varpi = 0.0;
  double delta = 0.0;
  double Y = 0.0;
  int n0 = 0;

  static SieveParams standard(u64 x, double X, double varpi = 0.1);

  Interval interval() const { return {X, X * (1.0 + eta)}; }
  double z_small() const;  // x^delta
  double z_mid() const;    // x^(1/2 - delta)
  double z_sqrt() const;   // x^(1/2)
  double z_high() const;   // x^(1/2 + delta)

  // I nonempty, X within [sqrt(x)/log^4 x, sqrt(x)], x^delta < Y < x^(1/2-delta).
  void validate() const;
};

// Sparse map n -> weight, sorted by n.  For kinds A and B the support lies in
// (sqrt(x), x] and weights are nonnegative.
struct WeightedSequence {
  std::vector<std::pair<u64, double>> support;
  SieveParams params;
  SeqKind kind = SeqKind::custom;

  double mass() const;
  double weight_at(u64 n) const;
  u64 max_index() const { return support.empty() ? 0 : support.back().first; }

  // Sorts and merges duplicate indices additively.
  static WeightedSequence custom(std::vector<std::pair<u64, double>> entries,
                                 SieveParams params);
};

inline constexpr u64 kDefaultSequenceBudget = u64{1} << 26;  // support entries

// Weight at n = a^2 + p^4 (kind A, weight 2p log p per representation with
// p^2 in I, a > 0, (a,p) = 1) or n = a^2 + p^2 (kind B, weight log p, p in I).
WeightedSequence build_sequence(SeqKind kind, const SieveParams& params,
                                u64 budget = kDefaultSequenceBudget);

// Lambda(n) weights on n <= x, and log p weights at primes p <= x.
WeightedSequence lambda_weights(u64 x);
WeightedSequence theta_weights(u64 x);

// #C_d = sum_{d | n} c(n).
double subsequence_count(const WeightedSequence& c, u64 d);

// |#C_d - g(d) mu(I)| with mu(I) taken from c.params.
double remainder(const WeightedSequence& c, u64 d);

// sum_{d <= D} tau(d)^k |#C_d - g(d) mu(I)|, all d included (also those
// dividing nothing), via one divisor-accumulation pass over the support.
double remainder_sum(const WeightedSequence& c, double D, unsigned k);

// pi(C) = sum over prime n of c(n).
double prime_mass(const WeightedSequence& c);

inline constexpr u64 kDefaultCountBudget = u64{4} << 30;  // candidate pairs

// Exact number of pairs (a, p), a > 0, p prime, with a^2 + p^4 <= x prime.
u64 brute_force_prime_count(u64 x, u64 budget = kDefaultCountBudget);

}  // namespace antlab
