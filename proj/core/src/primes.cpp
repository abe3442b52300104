#include "antlab/primes.hpp"

#include <algorithm>
#include <cmath>

#include "antlab/quadrature.hpp"

namespace antlab {

bool PrimeTable::contains(u64 n) const {
  return std::binary_search(primes.begin(), primes.end(), n);
}

PrimeTable primes_up_to(u64 limit, std::size_t segment_size, u64 budget) {
  if (limit < 1) throw std::invalid_argument("primes_up_to: limit must be >= 1");
  if (limit > budget)
    throw capacity_error("primes_up_to: limit " + std::to_string(limit) +
                         " exceeds budget " + std::to_string(budget));
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  u64 root = isqrt(limit);
  std::vector<char> small(root + 1, 1);
  for (u64 i = 2; i * i <= root; ++i)
    if (small[i])
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;

  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  table.primes.reserve(limit > 10 ? static_cast<std::size_t>(
                                        1.2 * limit / std::log(static_cast<double>(limit)))
                                  : 8);
  std::vector<char> seg(segment_size);
  for (u64 low = 2; low <= limit; low += segment_size) {
    u64 high = std::min(limit, low + segment_size - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, ((low + p - 1) / p) * p);
      for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (u64 n = low; n <= high; ++n)
      if (seg[n - low]) table.primes.push_back(n);
  }
  return table;
}

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

double von_mangoldt(u64 n) {
  if (n < 2) return 0.0;
  for (unsigned k = 1; k < 64; ++k) {
    u64 r = iroot(n, k);
    if (r < 2) break;
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= r;
    if (acc == n && is_prime(r)) return std::log(static_cast<double>(r));
  }
  return 0.0;
}

double li(double x) {
  if (x < 2.0) throw std::domain_error("li: requires x >= 2");
  if (x == 2.0) return 0.0;
  double scale = std::max(1.0, x / std::log(x));
  auto q = integrate([](double t) { return 1.0 / std::log(t); }, 2.0, x, 1e-10 * scale);
  return q.value;
}

}  // namespace antlab
