#include "antlab/sequences.hpp"

#include <algorithm>
#include <cmath>

#include "antlab/arith.hpp"
#include "antlab/constants.hpp"
#include "antlab/parallel.hpp"
#include "antlab/primes.hpp"

namespace antlab {

SieveParams SieveParams::standard(u64 x, double X, double varpi) {
  SieveParams p;
  p.x = x;
  p.X = X;
  double lg = std::log(static_cast<double>(x));
  p.eta = 1.0 / lg;
  p.varpi = varpi;
  p.delta = std::pow(lg, varpi - 1.0);
  p.Y = std::pow(static_cast<double>(x), 1.0 / 3.0 + 1.0 / 48.0);
  p.n0 = static_cast<int>(std::log(p.Y) / (p.delta * lg));
  return p;
}

double SieveParams::z_small() const { return std::pow(static_cast<double>(x), delta); }
double SieveParams::z_mid() const { return std::pow(static_cast<double>(x), 0.5 - delta); }
double SieveParams::z_sqrt() const { return std::sqrt(static_cast<double>(x)); }
double SieveParams::z_high() const { return std::pow(static_cast<double>(x), 0.5 + delta); }

void SieveParams::validate() const {
  if (x < 100) throw std::invalid_argument("SieveParams: x too small");
  double root = z_sqrt();
  double lg = std::log(static_cast<double>(x));
  if (!(X > 0) || X * (1.0 + eta) <= X)
    throw std::invalid_argument("SieveParams: window I is empty");
  if (X < root / std::pow(lg, 4.0) * (1.0 - 1e-12) || X > root)
    throw std::invalid_argument("SieveParams: X outside [sqrt(x)/log^4 x, sqrt(x)]");
  if (X * (1.0 + eta) > root * (1.0 + 1e-12))
    throw std::invalid_argument("SieveParams: window I exceeds sqrt(x)");
  if (!(z_small() < Y && Y < z_mid()))
    throw std::invalid_argument("SieveParams: need x^delta < Y < x^(1/2-delta)");
}

double WeightedSequence::mass() const {
  double acc = 0.0;
  for (const auto& [n, w] : support) {
    (void)n;
    acc += w;
  }
  return acc;
}

double WeightedSequence::weight_at(u64 n) const {
  auto it = std::lower_bound(support.begin(), support.end(), n,
                             [](const auto& e, u64 v) { return e.first < v; });
  return (it != support.end() && it->first == n) ? it->second : 0.0;
}

WeightedSequence WeightedSequence::custom(std::vector<std::pair<u64, double>> entries,
                                          SieveParams params) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  WeightedSequence seq;
  seq.params = params;
  seq.kind = SeqKind::custom;
  for (const auto& [n, w] : entries) {
    if (!seq.support.empty() && seq.support.back().first == n)
      seq.support.back().second += w;
    else
      seq.support.emplace_back(n, w);
  }
  return seq;
}

WeightedSequence build_sequence(SeqKind kind, const SieveParams& params, u64 budget) {
  if (kind == SeqKind::custom)
    throw std::invalid_argument("build_sequence: kind must be A or B");
  params.validate();
  const u64 x = params.x;
  const Interval window = params.interval();
  const double sqrt_x = params.z_sqrt();

  // Primes p with p^2 in I (kind A) or p in I (kind B); p^2 is exact in a
  // double for all desk-scale x, so the window test is done on the square.
  u64 p_hi = (kind == SeqKind::A)
                 ? isqrt(static_cast<u64>(std::floor(window.hi))) + 1
                 : static_cast<u64>(std::floor(window.hi)) + 1;
  PrimeTable table = primes_up_to(std::max<u64>(p_hi, 3));
  std::vector<u64> ps;
  for (u64 p : table.primes) {
    double key = (kind == SeqKind::A) ? static_cast<double>(p * p) : static_cast<double>(p);
    if (window.contains(key)) ps.push_back(p);
  }

  u64 work = 0;
  for (u64 p : ps) {
    u128 pk = (kind == SeqKind::A) ? u128(p) * p * p * p : u128(p) * p;
    if (pk >= x) continue;
    work += isqrt(x - static_cast<u64>(pk));
  }
  if (work > budget)
    throw capacity_error("build_sequence: estimated support " + std::to_string(work) +
                         " exceeds budget " + std::to_string(budget));

  // Per-p runs are ascending in n; merge additively in fixed p order.
  std::vector<std::vector<std::pair<u64, double>>> parts(ps.size());
  parallel_for(ps.size(), 1, [&](std::size_t i) {
    u64 p = ps[i];
    u128 pk = (kind == SeqKind::A) ? u128(p) * p * p * p : u128(p) * p;
    if (pk >= x) return;
    u64 pk64 = static_cast<u64>(pk);
    double w = (kind == SeqKind::A) ? 2.0 * static_cast<double>(p) * std::log(static_cast<double>(p))
                                    : std::log(static_cast<double>(p));
    u64 a_max = isqrt(x - pk64);
    auto& out = parts[i];
    out.reserve(a_max);
    for (u64 a = 1; a <= a_max; ++a) {
      if (a % p == 0) continue;  // (a, p) = 1
      u64 n = a * a + pk64;
      if (static_cast<double>(n) <= sqrt_x) continue;  // support lives in (sqrt x, x]
      out.emplace_back(n, w);
    }
  });

  std::vector<std::pair<u64, double>> merged;
  for (const auto& part : parts)
    merged.insert(merged.end(), part.begin(), part.end());
  WeightedSequence seq = WeightedSequence::custom(std::move(merged), params);
  seq.kind = kind;
  return seq;
}

WeightedSequence lambda_weights(u64 x) {
  std::vector<std::pair<u64, double>> entries;
  PrimeTable table = primes_up_to(std::max<u64>(x, 2));
  for (u64 p : table.primes) {
    if (p > x) break;
    double w = std::log(static_cast<double>(p));
    u128 pk = p;
    while (pk <= x) {
      entries.emplace_back(static_cast<u64>(pk), w);
      pk *= p;
    }
  }
  SieveParams params;
  params.x = x;
  return WeightedSequence::custom(std::move(entries), params);
}

WeightedSequence theta_weights(u64 x) {
  std::vector<std::pair<u64, double>> entries;
  PrimeTable table = primes_up_to(std::max<u64>(x, 2));
  for (u64 p : table.primes) {
    if (p > x) break;
    entries.emplace_back(p, std::log(static_cast<double>(p)));
  }
  SieveParams params;
  params.x = x;
  return WeightedSequence::custom(std::move(entries), params);
}

double subsequence_count(const WeightedSequence& c, u64 d) {
  if (d == 0) throw std::invalid_argument("subsequence_count: d must be >= 1");
  double acc = 0.0;
  for (const auto& [n, w] : c.support)
    if (n % d == 0) acc += w;
  return acc;
}

double remainder(const WeightedSequence& c, u64 d) {
  double model = g_density(d).value() *
                 circle_strip_area(static_cast<double>(c.params.x), c.params.X, c.params.eta);
  return std::fabs(subsequence_count(c, d) - model);
}

double remainder_sum(const WeightedSequence& c, double D, unsigned k) {
  if (D < 1) throw std::invalid_argument("remainder_sum: D must be >= 1");
  u64 Du = static_cast<u64>(std::floor(D));
  std::vector<double> counts(Du + 1, 0.0);
  for (const auto& [n, w] : c.support)
    for (u64 d : divisors_up_to(factorize(n), Du)) counts[d] += w;

  auto tau = tau_sieve(Du);
  auto rho = rho_sieve(Du);
  double mu = circle_strip_area(static_cast<double>(c.params.x), c.params.X, c.params.eta);
  double acc = 0.0;
  for (u64 d = 1; d <= Du; ++d) {
    double model = mu * static_cast<double>(rho[d]) / static_cast<double>(d);
    double weight = 1.0;
    for (unsigned i = 0; i < k; ++i) weight *= static_cast<double>(tau[d]);
    acc += weight * std::fabs(counts[d] - model);
  }
  return acc;
}

double prime_mass(const WeightedSequence& c) {
  return parallel_reduce<double>(
      c.support.size(), 1024, 0.0,
      [&](std::size_t i, double acc) {
        const auto& [n, w] = c.support[i];
        return is_prime(n) ? acc + w : acc;
      },
      [](double a, double b) { return a + b; });
}

u64 brute_force_prime_count(u64 x, u64 budget) {
  if (x < 100) throw std::invalid_argument("brute_force_prime_count: requires x >= 100");
  PrimeTable table = primes_up_to(isqrt(isqrt(x)) + 1);
  std::vector<u64> ps;
  u64 work = 0;
  for (u64 p : table.primes) {
    u128 p4 = u128(p) * p * p * p;
    if (p4 >= x) break;
    ps.push_back(p);
    work += isqrt(x - static_cast<u64>(p4));
  }
  if (work > budget)
    throw capacity_error("brute_force_prime_count: " + std::to_string(work) +
                         " candidates exceed budget");
  return parallel_reduce<u64>(
      ps.size(), 1, u64{0},
      [&](std::size_t i, u64 acc) {
        u64 p = ps[i];
        u64 p4 = static_cast<u64>(u128(p) * p * p * p);
        u64 a_max = isqrt(x - p4);
        for (u64 a = 1; a <= a_max; ++a)
          if (is_prime(a * a + p4)) ++acc;
        return acc;
      },
      [](u64 a, u64 b) { return a + b; });
}

}  // namespace antlab
