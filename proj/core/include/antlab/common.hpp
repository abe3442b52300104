#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace antlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Thrown when a request would exceed the configured memory/work budget.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Half-open real interval (lo, hi], the convention used for all prime and
// prime-square windows.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double v) const { return lo < v && v <= hi; }
  double length() const { return hi - lo; }
  bool empty() const { return hi <= lo; }
};

inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Floor of n^(1/k).
inline u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw std::invalid_argument("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  u64 r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
  auto pow_ok = [&](u64 b) {  // b^k <= n without overflow
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= b;
      if (acc > n) return false;
    }
    return true;
  };
  while (r > 0 && !pow_ok(r)) --r;
  while (pow_ok(r + 1)) ++r;
  return r;
}

}  // namespace antlab
