#pragma once

#include <cstdint>
#include <random>

#include "antlab/common.hpp"

namespace antlab {

// Seeded RNG with hand-rolled draw helpers.  std:: distributions are not
// specified bit-for-bit across standard libraries; these are, which keeps
// experiment output reproducible everywhere.
class Rng {
 public:
  explicit Rng(u64 seed) : eng_(seed) {}

  u64 next() { return eng_(); }

  // Uniform integer in [lo, hi] via rejection sampling.
  i64 uniform(i64 lo, i64 hi) {
    u64 span = static_cast<u64>(hi - lo) + 1;
    if (span == 0) return static_cast<i64>(next());  // full 64-bit range
    u64 limit = ~u64{0} - (~u64{0} % span);
    u64 v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<i64>(v % span);
  }

  double uniform_real() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace antlab
