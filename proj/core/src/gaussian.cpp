#include "antlab/gaussian.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "antlab/arith.hpp"
#include "antlab/parallel.hpp"
#include "antlab/primes.hpp"

namespace antlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

i64 imod(i64 v, i64 m) {
  i64 r = v % m;
  return r < 0 ? r + m : r;
}

i128 imod128(i128 v, i128 m) {
  i128 r = v % m;
  return r < 0 ? r + m : r;
}

// ax + by = gcd(a, b)
struct Bezout {
  i64 g, x, y;
};

Bezout ext_gcd(i64 a, i64 b) {
  if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
  Bezout s = ext_gcd(b, a % b);
  return {s.g, s.y, s.x - (a / b) * s.y};
}

}  // namespace

double GaussInt::arg() const {
  double a = std::atan2(static_cast<double>(im), static_cast<double>(re));
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

bool is_primitive(GaussInt z) {
  if (z.is_zero()) throw std::invalid_argument("is_primitive: z must be nonzero");
  return std::gcd(z.re < 0 ? -z.re : z.re, z.im < 0 ? -z.im : z.im) == 1;
}

GaussInt gaussian_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    // Nearest-integer quotient of a / b keeps the remainder norm below N(b).
    i128 nb = i128(b.re) * b.re + i128(b.im) * b.im;
    i128 pr = i128(a.re) * b.re + i128(a.im) * b.im;
    i128 pi = i128(a.im) * b.re - i128(a.re) * b.im;
    auto round_div = [](i128 num, i128 den) {
      i128 q = num / den;
      i128 r = num - q * den;
      if (2 * (r < 0 ? -r : r) > den) q += (num < 0) == (den < 0) ? 1 : -1;
      return q;
    };
    GaussInt q{static_cast<i64>(round_div(pr, nb)), static_cast<i64>(round_div(pi, nb))};
    a = a - q * b;
    std::swap(a, b);
  }
  return a;
}

std::optional<GaussInt> try_divide(GaussInt num, GaussInt den) {
  if (den.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
  i128 nd = i128(den.re) * den.re + i128(den.im) * den.im;
  i128 pr = i128(num.re) * den.re + i128(num.im) * den.im;
  i128 pi = i128(num.im) * den.re - i128(num.re) * den.im;
  if (pr % nd != 0 || pi % nd != 0) return std::nullopt;
  return GaussInt{static_cast<i64>(pr / nd), static_cast<i64>(pi / nd)};
}

namespace {

// One Gaussian prime above the split rational prime p = 1 (mod 4).
GaussInt split_prime_divisor(u64 p) {
  // sqrt(-1) mod p from a quadratic non-residue, then gcd(p, r + i).
  u64 r = 0;
  for (u64 n = 2;; ++n) {
    // Euler criterion; deterministic scan for the first non-residue.
    u64 e = (p - 1) / 2;
    u64 acc = 1, base = n % p;
    u64 ee = e;
    while (ee) {
      if (ee & 1) acc = static_cast<u64>(u128(acc) * base % p);
      base = static_cast<u64>(u128(base) * base % p);
      ee >>= 1;
    }
    if (acc == p - 1) {
      u64 val = 1, b2 = n % p, e4 = (p - 1) / 4;
      while (e4) {
        if (e4 & 1) val = static_cast<u64>(u128(val) * b2 % p);
        b2 = static_cast<u64>(u128(b2) * b2 % p);
        e4 >>= 1;
      }
      r = val;
      break;
    }
  }
  GaussInt g = gaussian_gcd(GaussInt{static_cast<i64>(p), 0}, GaussInt{static_cast<i64>(r), 1});
  return g;
}

GaussInt canonical_associate(GaussInt z) {
  for (int i = 0; i < 4; ++i) {
    if (z.re > 0 && (z.re & 1)) return z;
    z = z * GaussInt{0, 1};
  }
  throw std::logic_error("canonical_associate: no odd-positive associate");
}

}  // namespace

GaussInt canonical_norm_divisor(GaussInt gamma, u64 m) {
  if (gamma.is_zero() || !is_primitive(gamma))
    throw std::invalid_argument("canonical_norm_divisor: gamma must be primitive");
  u64 norm = gamma.norm();
  if (norm % 2 == 0)
    throw std::invalid_argument("canonical_norm_divisor: norm of gamma must be odd");
  if (m == 0 || norm % m != 0)
    throw std::invalid_argument("canonical_norm_divisor: m must divide N(gamma)");
  GaussInt lambda{1, 0};
  for (const auto& [p, e] : factorize(m)) {
    if (p % 4 != 1)
      throw std::invalid_argument("canonical_norm_divisor: impossible prime in m");
    GaussInt pi = split_prime_divisor(p);
    if (!try_divide(gamma, pi)) pi = pi.conj();
    for (unsigned i = 0; i < e; ++i) lambda = lambda * pi;
  }
  if (!try_divide(gamma, lambda))
    throw std::logic_error("canonical_norm_divisor: constructed divisor fails");
  return canonical_associate(lambda);
}

i64 lattice_det(GaussInt z1, GaussInt z2) {
  i128 d = i128(z1.re) * z2.im - i128(z1.im) * z2.re;
  if (d > std::numeric_limits<i64>::max() || d < std::numeric_limits<i64>::min())
    throw capacity_error("lattice_det: overflow");
  return static_cast<i64>(d);
}

bool in_exclusion_region(GaussInt z, double norm_lo, double threshold) {
  double n = static_cast<double>(z.norm());
  if (!(n >= norm_lo && n < 2.0 * norm_lo)) return false;
  double quarter = std::numbers::pi / 2.0;
  double m = std::fmod(z.arg(), quarter);
  double dist = std::min(m, quarter - m);
  return dist <= threshold;
}

double projection_prime_weight(GaussInt z, GaussInt w, Interval I, ProjKind kind) {
  i128 q = i128(w.re) * z.re + i128(w.im) * z.im;  // Re(conj(w) z)
  if (q <= 0) return 0.0;
  if (q > std::numeric_limits<i64>::max()) return 0.0;
  u64 qv = static_cast<u64>(q);
  if (!I.contains(static_cast<double>(qv))) return 0.0;
  if (kind == ProjKind::prime_square) {
    u64 p = isqrt(qv);
    if (p * p != qv || !is_prime(p)) return 0.0;
    return 2.0 * static_cast<double>(p) * std::log(static_cast<double>(p));
  }
  if (!is_prime(qv)) return 0.0;
  return std::log(static_cast<double>(qv));
}

std::optional<GaussInt> recover_lattice_point(i64 q1, i64 q2, GaussInt z1, GaussInt z2) {
  i64 det = lattice_det(z1, z2);
  if (det == 0) throw std::invalid_argument("recover_lattice_point: determinant is zero");
  i128 vr = i128(q1) * z2.re - i128(q2) * z1.re;
  i128 vi = i128(q1) * z2.im - i128(q2) * z1.im;
  if (vr % det != 0 || vi % det != 0) return std::nullopt;
  i128 cr = vr / det, ci = vi / det;
  // w = -i (v / det)
  return GaussInt{static_cast<i64>(ci), static_cast<i64>(-cr)};
}

u64 count_projection_solutions(GaussInt z, i64 q, double M) {
  if (!is_primitive(z)) throw std::invalid_argument("count_projection_solutions: z not primitive");
  if (M < 0) return 0;
  i128 cap = static_cast<i128>(std::floor(M));
  i64 s = z.re, t = z.im;
  Bezout bz = ext_gcd(s, t);  // g = 1 by primitivity
  i128 u0 = i128(bz.x) * q;
  i128 v0 = i128(bz.y) * q;
  i128 A = i128(z.norm());
  // Shift along the solution line (u, v) -> (u + t, v - s) towards the
  // norm minimum to keep the quadratic's coefficients small.
  i128 kstar_num = i128(s) * v0 - i128(t) * u0;
  i128 kshift = kstar_num / A;
  u0 += kshift * t;
  v0 -= kshift * s;
  i128 B = 2 * (u0 * t - v0 * s);
  i128 C = u0 * u0 + v0 * v0 - cap;
  auto f = [&](i128 k) { return A * k * k + B * k + C; };
  if (f(0) > 0 && f(1) > 0 && f(-1) > 0) {
    // After centering, the parabola minimum is within one step of k = 0.
    return 0;
  }
  long double disc = static_cast<long double>(B) * static_cast<long double>(B) -
                     4.0L * static_cast<long double>(A) * static_cast<long double>(C);
  if (disc < 0) return 0;
  long double root = sqrtl(disc);
  i128 lo = static_cast<i128>(std::floor((-static_cast<long double>(B) - root) /
                                         (2.0L * static_cast<long double>(A)))) - 2;
  i128 hi = static_cast<i128>(std::ceil((-static_cast<long double>(B) + root) /
                                        (2.0L * static_cast<long double>(A)))) + 2;
  while (lo <= hi && f(lo) > 0) ++lo;
  while (hi >= lo && f(hi) > 0) --hi;
  if (lo > hi) return 0;
  return static_cast<u64>(hi - lo + 1);
}

bool AngularRegion::contains(GaussInt z) const {
  double nz = static_cast<double>(z.norm());
  double lo2 = c * c * N;
  double hi2 = c * c * (1.0 + omega1) * (1.0 + omega1) * N;
  if (!(nz > lo2 && nz <= hi2)) return false;
  if (omega2 >= kTwoPi) return true;
  double t0 = std::fmod(theta0, kTwoPi);
  if (t0 < 0) t0 += kTwoPi;
  double a = z.arg();
  double hi = t0 + omega2;
  if (hi <= kTwoPi) return a > t0 && a < hi;
  return a > t0 || a < hi - kTwoPi;
}

std::vector<GaussInt> AngularRegion::lattice_points() const {
  std::vector<GaussInt> out;
  i64 R = static_cast<i64>(std::floor(radius_hi())) + 1;
  for (i64 x = -R; x <= R; ++x)
    for (i64 y = -R; y <= R; ++y) {
      GaussInt z{x, y};
      if (!z.is_zero() && contains(z)) out.push_back(z);
    }
  return out;
}

namespace {

bool flat_conditions(GaussInt z, double exclusion_threshold) {
  if (z.is_zero()) return false;
  if (z.re <= 0) return false;
  if ((z.re & 1) == 0 || (z.im & 1) != 0) return false;  // z = 1 (mod 2)
  if (!is_primitive(z)) return false;
  if (exclusion_threshold > 0) {
    double quarter = std::numbers::pi / 2.0;
    double m = std::fmod(z.arg(), quarter);
    if (std::min(m, quarter - m) <= exclusion_threshold) return false;
  }
  return true;
}

}  // namespace

double pair_congruence_sum(i64 a, i64 D, const AngularRegion& U1, const AngularRegion& U2,
                           const std::function<double(GaussInt)>& beta, bool tilde,
                           double exclusion_threshold) {
  if (D <= 0) throw std::invalid_argument("pair_congruence_sum: D must be positive");
  if (std::gcd(imod(a, D), D) != 1)
    throw std::invalid_argument("pair_congruence_sum: (a, D) must be 1");
  auto pts1 = U1.lattice_points();
  auto pts2 = U2.lattice_points();
  double acc = 0.0;
  for (GaussInt z1 : pts1) {
    if (!flat_conditions(z1, exclusion_threshold)) continue;
    for (GaussInt z2 : pts2) {
      if (!flat_conditions(z2, exclusion_threshold)) continue;
      if (lattice_det(z1, z2) != D) continue;  // also enforces det > 0
      if (imod(a * z2.re - z1.re, D) != 0) continue;
      if (imod(a * z2.im - z1.im, D) != 0) continue;
      acc += tilde ? 1.0 : beta(z1) * beta(z2);
    }
  }
  return acc;
}

namespace {

// (q, weight) pairs of the projection weight kind inside J.
std::vector<std::pair<u64, double>> weight_support(Interval J, ProjKind kind) {
  std::vector<std::pair<u64, double>> out;
  if (J.empty()) return out;
  if (kind == ProjKind::prime) {
    u64 hi = static_cast<u64>(std::floor(J.hi));
    for (u64 p = 2; p <= hi; ++p)
      if (J.contains(static_cast<double>(p)) && is_prime(p))
        out.emplace_back(p, std::log(static_cast<double>(p)));
  } else {
    u64 hi = isqrt(static_cast<u64>(std::floor(J.hi)));
    for (u64 p = 2; p <= hi + 1; ++p) {
      if (!is_prime(p)) continue;
      u64 q = p * p;
      if (J.contains(static_cast<double>(q)))
        out.emplace_back(q, 2.0 * static_cast<double>(p) * std::log(static_cast<double>(p)));
    }
  }
  return out;
}

}  // namespace

double prime_congruence_sum(i64 a, u64 D, Interval J1, Interval J2, ProjKind h1, ProjKind h2) {
  if (D == 0) throw std::invalid_argument("prime_congruence_sum: D must be >= 1");
  if (std::gcd(imod(a, static_cast<i64>(D)), static_cast<i64>(D)) != 1)
    throw std::invalid_argument("prime_congruence_sum: (a, D) must be 1");
  auto s1 = weight_support(J1, h1);
  auto s2 = weight_support(J2, h2);
  double acc = 0.0;
  for (const auto& [q1, w1] : s1) {
    if (std::gcd(q1, D) != 1) continue;
    for (const auto& [q2, w2] : s2) {
      if (std::gcd(q2, D) != 1) continue;
      if (imod(static_cast<i64>(q1) - a * static_cast<i64>(imod(q2, D)), static_cast<i64>(D)) != 0)
        continue;
      acc += w1 * w2;
    }
  }
  return acc;
}

double prime_congruence_main(u64 D, Interval J1, Interval J2, ProjKind h1, ProjKind h2) {
  if (D == 0) throw std::invalid_argument("prime_congruence_main: D must be >= 1");
  auto restricted = [&](Interval J, ProjKind h) {
    double acc = 0.0;
    for (const auto& [q, w] : weight_support(J, h))
      if (std::gcd(q, D) == 1) acc += w;
    return acc;
  };
  double phi = static_cast<double>(mult_basics(D).phi);
  return restricted(J1, h1) * restricted(J2, h2) / phi;
}

ReciprocityFactors reciprocity_chain(GaussInt z1, GaussInt z2, i64 e, i64 t) {
  auto admissible = [](GaussInt z) {
    return !z.is_zero() && z.re > 0 && (z.re & 1) == 1 && (z.im & 1) == 0 && is_primitive(z);
  };
  if (!admissible(z1) || !admissible(z2))
    throw std::invalid_argument("reciprocity_chain: z must be primitive, Re > 0, = 1 (mod 2)");
  if (e < 1 || e % 2 == 0) throw std::invalid_argument("reciprocity_chain: e must be odd positive");
  if (t < 1 || (t & (t - 1)) != 0)
    throw std::invalid_argument("reciprocity_chain: t must be a power of two");
  i64 det = lattice_det(z1, z2);
  if (det <= 0) throw std::invalid_argument("reciprocity_chain: requires lattice_det > 0");
  if (det % (e * t) != 0) throw std::invalid_argument("reciprocity_chain: e*t must divide det");
  i64 d1 = det / (e * t);
  if (d1 % 2 == 0) throw std::invalid_argument("reciprocity_chain: d1 must be odd (t wrong)");
  if (mult_basics(static_cast<u64>(d1)).mu == 0)
    throw std::invalid_argument("reciprocity_chain: d1 must be squarefree");

  // k mod det with k z2 = z1: from a Bezout pair for (x2, y2).
  Bezout bz = ext_gcd(z2.re, z2.im);
  i128 k128 = imod128(i128(bz.x) * z1.re + i128(bz.y) * z1.im, det);
  i64 k = static_cast<i64>(k128);
  if (imod128(i128(k) * z2.re - z1.re, det) != 0 || imod128(i128(k) * z2.im - z1.im, det) != 0)
    throw std::invalid_argument("reciprocity_chain: no solution k");
  if (std::gcd(k, det) != 1) throw std::invalid_argument("reciprocity_chain: (k, det) > 1");

  ReciprocityFactors out;
  out.lhs = jacobi(k, d1);
  out.rhs_product = jacobi(z1.im, z1.re) * jacobi(z2.im, z2.re) *
                    bracket(d1 * e, z1.re * z2.re) * bracket(z1.re, z2.re);
  return out;
}

std::complex<double> spinor(GaussInt z) {
  i64 x = z.re, y = z.im;
  if (x <= 0 || x % 2 == 0)
    throw std::invalid_argument("spinor: requires Re(z) odd and positive");
  if (std::gcd(x, y < 0 ? -y : y) != 1) throw std::invalid_argument("spinor: requires gcd(x, y) = 1");
  static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> unit = powers[((x - 1) / 2) % 4];
  return unit * static_cast<double>(jacobi(y, x));
}

std::complex<double> spinor_norm_sum(u64 n, int k) {
  if (n == 0) throw std::invalid_argument("spinor_norm_sum: n must be >= 1");
  std::complex<double> acc{0.0, 0.0};
  u64 r = isqrt(n);
  for (u64 a = 1; a <= r; a += 2) {  // only Re(z) odd positive contributes
    u64 rem = n - a * a;
    u64 b = isqrt(rem);
    if (b * b != rem) continue;
    i64 ai = static_cast<i64>(a);
    for (i64 bi : (b == 0) ? std::vector<i64>{0}
                           : std::vector<i64>{static_cast<i64>(b), -static_cast<i64>(b)}) {
      GaussInt z{ai, bi};
      if (!is_primitive(z)) continue;
      double theta = z.arg();
      std::complex<double> rot = std::polar(1.0, k * theta);
      acc += rot * spinor(z);
    }
  }
  return acc;
}

u64 gaussian_euler_phi(u64 q) {
  if (q == 0) throw std::invalid_argument("gaussian_euler_phi: q must be >= 1");
  u64 out = 1;
  for (const auto& [p, e] : factorize(q)) {
    u64 pe1 = 1;
    for (unsigned i = 1; i < e; ++i) pe1 *= p;
    if (p == 2) {
      // ramified: 2^(2e - 1)
      u64 v = 1;
      for (unsigned i = 0; i < 2 * e - 1; ++i) v *= 2;
      out *= v;
    } else if (p % 4 == 1) {
      out *= (p - 1) * (p - 1) * pe1 * pe1;
    } else {
      out *= (p * p - 1) * pe1 * pe1;
    }
  }
  return out;
}

u64 sector_prime_count(double x, u64 q, GaussInt alpha, double theta, u64 budget) {
  if (x < 2) throw std::invalid_argument("sector_prime_count: x too small");
  if (theta < 0 || theta > kTwoPi + 1e-12)
    throw std::invalid_argument("sector_prime_count: theta must be in [0, 2pi]");
  if (q == 0) throw std::invalid_argument("sector_prime_count: q must be >= 1");
  GaussInt g = gaussian_gcd(alpha, GaussInt{static_cast<i64>(q), 0});
  if (g.norm() != 1)
    throw std::invalid_argument("sector_prime_count: alpha must be coprime to q");
  u64 xf = static_cast<u64>(std::floor(x));
  if (xf > budget) throw capacity_error("sector_prime_count: x exceeds budget");

  // Norm primality table.
  std::vector<bool> composite(xf + 1, false);
  for (u64 i = 2; i * i <= xf; ++i)
    if (!composite[i])
      for (u64 j = i * i; j <= xf; j += i) composite[j] = true;
  auto prime = [&](u64 n) { return n >= 2 && !composite[n]; };

  i64 R = static_cast<i64>(isqrt(xf));
  i64 qi = static_cast<i64>(q);
  u64 total = parallel_reduce<u64>(
      static_cast<std::size_t>(2 * R + 1), 64, u64{0},
      [&](std::size_t idx, u64 acc) {
        i64 a = static_cast<i64>(idx) - R;
        u64 aa = static_cast<u64>(a * a);
        if (aa > xf) return acc;
        i64 bmax = static_cast<i64>(isqrt(xf - aa));
        for (i64 b = -bmax; b <= bmax; ++b) {
          u64 norm = aa + static_cast<u64>(b * b);
          if (norm < 2) continue;
          bool gaussian_prime;
          if (prime(norm))
            gaussian_prime = true;  // split or ramified
          else if (b == 0 && prime(static_cast<u64>(a < 0 ? -a : a)) &&
                   static_cast<u64>(a < 0 ? -a : a) % 4 == 3)
            gaussian_prime = true;  // inert on the real axis
          else if (a == 0 && prime(static_cast<u64>(b < 0 ? -b : b)) &&
                   static_cast<u64>(b < 0 ? -b : b) % 4 == 3)
            gaussian_prime = true;  // inert on the imaginary axis
          else
            gaussian_prime = false;
          if (!gaussian_prime) continue;
          if (imod(a - alpha.re, qi) != 0 || imod(b - alpha.im, qi) != 0) continue;
          double ang = GaussInt{a, b}.arg();
          if (ang <= theta) ++acc;
        }
        return acc;
      },
      [](u64 u, u64 v) { return u + v; });
  return total;
}

double sector_prime_main(double x, u64 q, double theta) {
  return 4.0 / static_cast<double>(gaussian_euler_phi(q)) * (theta / kTwoPi) * li(x);
}

}  // namespace antlab
