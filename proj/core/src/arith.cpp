#include "antlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "antlab/primes.hpp"
#include "antlab/sequences.hpp"

namespace antlab {

namespace {

const PrimeTable& factor_base() {
  static const PrimeTable table = primes_up_to(1'000'000);
  return table;
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  if (n == 1) return out;
  for (u64 p : factor_base().primes) {
    if (p * p > n) break;
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (!is_prime(n))
      throw capacity_error("factorize: cofactor " + std::to_string(n) +
                           " has no prime factor below 1e6");
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors_up_to(const Factorization& f, u64 bound) {
  std::vector<u64> out;
  for (u64 d : divisors(f))
    if (d <= bound) out.push_back(d);
  return out;
}

MultBasics mult_basics(u64 n) {
  if (n == 0) throw std::invalid_argument("mult_basics: n must be >= 1");
  MultBasics b;
  for (const auto& [p, e] : factorize(n)) {
    b.tau *= e + 1;
    u64 pe1 = 1;
    for (unsigned i = 1; i < e; ++i) pe1 *= p;
    b.phi *= pe1 * (p - 1);
    b.mu = (e > 1) ? 0 : -b.mu;
  }
  b.chi4 = (n % 2 == 0) ? 0 : (n % 4 == 1 ? 1 : -1);
  return b;
}

u64 rho(u64 d) {
  if (d == 0) throw std::invalid_argument("rho: d must be >= 1");
  u64 count = 1;
  for (const auto& [p, e] : factorize(d)) {
    if (p == 2) {
      if (e >= 2) return 0;  // a^2 = -1 (mod 4) is insoluble
      // e == 1: the single root a = 1
    } else if (p % 4 == 1) {
      count *= 2;  // two roots mod p, each lifting uniquely to p^e
    } else {
      return 0;  // -1 is a non-residue mod p = 3 (mod 4)
    }
  }
  return count;
}

Rational g_density(u64 d) {
  u64 r = rho(d);
  if (r == 0) return {0, 1};
  u64 g = std::gcd(r, d);
  return {static_cast<i64>(r / g), static_cast<i64>(d / g)};
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd positive");
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int bracket(i64 a, i64 b) {
  if (a % 2 == 0 || b % 2 == 0) throw std::invalid_argument("bracket: arguments must be odd");
  // (a-1)(b-1)/4 mod 2 depends only on a, b mod 4
  i64 ha = ((a - 1) / 2) & 1;
  i64 hb = ((b - 1) / 2) & 1;
  return (ha & hb) ? -1 : 1;
}

namespace {

u64 tau_of(u64 n) {
  u64 t = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    t *= e + 1;
  }
  return t;
}

// One round: the divisor d | n with d <= sqrt(n) of maximal tau (smallest on
// ties), the construction behind the dominating-divisor bound.
u64 max_tau_divisor_below_sqrt(u64 n) {
  u64 root = isqrt(n);
  u64 best = 1, best_tau = 1;
  for (u64 d : divisors_up_to(factorize(n), root)) {
    u64 t = tau_of(d);
    if (t > best_tau) {
      best = d;
      best_tau = t;
    }
  }
  return best;
}

}  // namespace

u64 dominating_divisor(u64 n, unsigned k) {
  if (n == 0 || k == 0) throw std::invalid_argument("dominating_divisor: need n, k >= 1");
  u64 d = n;
  for (unsigned i = 0; i < k; ++i) d = max_tau_divisor_below_sqrt(d);
  return d;
}

double tau_weighted_norm(const WeightedSequence& c) {
  double acc = 0.0;
  for (const auto& [n, w] : c.support) {
    double t = static_cast<double>(tau_of(n));
    acc += w * w * t * t;
  }
  return acc;
}

std::vector<uint32_t> smallest_factor_sieve(u64 limit) {
  if (limit >= (u64{1} << 32))
    throw capacity_error("smallest_factor_sieve: limit exceeds 32-bit table");
  std::vector<uint32_t> spf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (u64 j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
    }
  }
  return spf;
}

std::vector<uint32_t> tau_sieve(u64 limit) {
  std::vector<uint32_t> tau(limit + 1, 0);
  for (u64 d = 1; d <= limit; ++d)
    for (u64 m = d; m <= limit; m += d) ++tau[m];
  return tau;
}

std::vector<uint32_t> rho_sieve(u64 limit) {
  auto spf = smallest_factor_sieve(limit);
  std::vector<uint32_t> r(limit + 1, 0);
  if (limit >= 1) r[1] = 1;
  for (u64 n = 2; n <= limit; ++n) {
    u64 p = spf[n];
    u64 m = n;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    uint32_t local;
    if (p == 2)
      local = (e == 1) ? 1 : 0;
    else if (p % 4 == 1)
      local = 2;
    else
      local = 0;
    r[n] = local * r[m];
  }
  return r;
}

}  // namespace antlab
