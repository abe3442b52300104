#pragma once

#include <vector>

#include "antlab/common.hpp"

namespace antlab {

// Ascending list of every prime <= limit.  Immutable once built; safe to
// share across workers.
struct PrimeTable {
  u64 limit = 0;
  std::vector<u64> primes;

  bool contains(u64 n) const;
};

inline constexpr u64 kDefaultPrimeBudget = 1'000'000'000;  // max sievable limit
inline constexpr std::size_t kDefaultSegment = std::size_t{1} << 20;

// Segmented sieve of Eratosthenes.
PrimeTable primes_up_to(u64 limit, std::size_t segment_size = kDefaultSegment,
                        u64 budget = kDefaultPrimeBudget);

// Deterministic Miller-Rabin over the full 64-bit range (fixed base set
// {2,3,...,37}, exact for n < 3.3e24).
bool is_prime(u64 n);

// log p if n = p^k, else 0.
double von_mangoldt(u64 n);

// Logarithmic integral int_2^x dt/log t, relative error <= 1e-9.
double li(double x);

}  // namespace antlab
