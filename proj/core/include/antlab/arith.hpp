#pragma once

#include <utility>
#include <vector>

#include "antlab/common.hpp"

namespace antlab {

struct WeightedSequence;  // sequences.hpp

// tau / phi / mu / chi4 of one integer, computed from its factorization.
struct MultBasics {
  u64 tau = 1;
  u64 phi = 1;
  int mu = 1;    // 0 iff not squarefree
  int chi4 = 1;  // non-principal character mod 4; 0 iff n even
};

struct Rational {
  i64 num = 0;
  i64 den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

using Factorization = std::vector<std::pair<u64, unsigned>>;  // (prime, exponent), ascending

// Trial division against a cached prime table up to 1e6, deterministic
// primality for the cofactor.  Supports n with second-largest prime factor
// <= 1e6 (all desk-scale inputs); throws capacity_error otherwise.
Factorization factorize(u64 n);

std::vector<u64> divisors(const Factorization& f);
std::vector<u64> divisors_up_to(const Factorization& f, u64 bound);

MultBasics mult_basics(u64 n);

// Number of residues a mod d with a^2 + 1 = 0 (mod d).
u64 rho(u64 d);

// Exact local density rho(d)/d.
Rational g_density(u64 d);

// Jacobi symbol (a/n) for odd positive n.
int jacobi(i64 a, i64 n);

// (-1)^((a-1)(b-1)/4) for odd a, b (any sign).
int bracket(i64 a, i64 b);

// A divisor d | n with d <= n^(1/2^k) and tau(n) <= 2^(2^k - 1) tau(d)^(2^k),
// constructed by k rounds of picking the maximal-tau divisor below sqrt.
u64 dominating_divisor(u64 n, unsigned k);

// sum |c(n)|^2 tau(n)^2 over the support.
double tau_weighted_norm(const WeightedSequence& c);

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<uint32_t> smallest_factor_sieve(u64 limit);

// tau(d) and rho(d) for all d in 0..limit.
std::vector<uint32_t> tau_sieve(u64 limit);
std::vector<uint32_t> rho_sieve(u64 limit);

}  // namespace antlab
