#include "antlab/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "antlab/arith.hpp"
#include "antlab/primes.hpp"

namespace antlab {

namespace {

struct ElementFactors {
  u64 spf = 0;                  // 0 for n = 1
  std::vector<u64> distinct;    // ascending distinct primes
};

ElementFactors element_factors(u64 n) {
  ElementFactors out;
  if (n == 1) return out;
  Factorization f = factorize(n);
  out.spf = f.front().first;
  out.distinct.reserve(f.size());
  for (const auto& [p, e] : f) {
    (void)e;
    out.distinct.push_back(p);
  }
  return out;
}

// Number of m-subsets of `primes` (ascending, already restricted to
// [lo, hi)) whose product lies in [prod_lo, prod_hi).  Products are exact in
// unsigned 128-bit.  prod_hi <= 0 means unbounded above.
void count_subsets(const std::vector<u64>& primes, std::size_t start, int m, u128 acc,
                   double prod_lo, double prod_hi, u64& out) {
  if (m == 0) {
    double v = static_cast<double>(acc);
    if (v >= prod_lo && (prod_hi <= 0 || v < prod_hi)) ++out;
    return;
  }
  for (std::size_t i = start; i + m <= primes.size(); ++i) {
    u128 next = acc * primes[i];
    // Primes are ascending, so once a partial product reaches the upper
    // bound no continuation (and no later i) can fall back under it.
    if (prod_hi > 0 && static_cast<double>(next) >= prod_hi) break;
    count_subsets(primes, i + 1, m - 1, next, prod_lo, prod_hi, out);
  }
}

u64 subsets_in_band(const std::vector<u64>& primes, int m, double lo, double hi) {
  u64 out = 0;
  count_subsets(primes, 0, m, 1, lo, hi, out);
  return out;
}

std::vector<u64> primes_in(const std::vector<u64>& distinct, double lo, double hi) {
  std::vector<u64> out;
  for (u64 p : distinct) {
    double v = static_cast<double>(p);
    if (v >= lo && v < hi) out.push_back(p);
  }
  return out;
}

}  // namespace

double sift(const WeightedSequence& c, double z) {
  if (z < 2) throw std::invalid_argument("sift: z must be >= 2");
  double acc = 0.0;
  for (const auto& [n, w] : c.support) {
    if (n == 1) {
      acc += w;
      continue;
    }
    u64 spf = element_factors(n).spf;
    if (static_cast<double>(spf) >= z) acc += w;
  }
  return acc;
}

BuchstabReport buchstab_terms(const WeightedSequence& c, const SieveParams& params) {
  const double z_small = params.z_small();
  const double z_mid = params.z_mid();
  const double z_sqrt = params.z_sqrt();
  const double Y = params.Y;
  const int n0 = params.n0;

  BuchstabReport rep;
  rep.t.assign(n0 + 1, 0.0);
  rep.u.assign(n0 + 1, 0.0);
  rep.v.assign(n0 + 2, 0.0);

  for (const auto& [n, w] : c.support) {
    if (n == 1) {
      rep.s1 += w;
      rep.sifted_at_sqrt += w;
      continue;
    }
    ElementFactors f = element_factors(n);
    double spf = static_cast<double>(f.spf);
    if (spf < z_small) continue;
    rep.s1 += w;
    if (spf >= z_sqrt) rep.sifted_at_sqrt += w;
    if (spf < Y)
      rep.s2 += w;
    else if (spf < z_mid)
      rep.s3 += w;
    else if (spf < z_sqrt)
      rep.tail += w;

    // Recursion terms.  A tuple's sifting condition forces its smallest
    // prime to be the smallest prime of n (for u and v), or just
    // spf(n) >= x^delta (for t); see the per-term comments in the header.
    std::vector<u64> in_range = primes_in(f.distinct, z_small, Y);
    bool spf_in_range = spf >= z_small && spf < Y;
    std::vector<u64> above_spf;
    if (spf_in_range)
      above_spf = primes_in(f.distinct, spf + 0.5, Y);

    for (int m = 1; m <= n0; ++m) {
      u64 tm = subsets_in_band(in_range, m, 0.0, Y);
      if (tm) rep.t[m] += w * static_cast<double>(tm);
      if (spf_in_range) {
        // u[m]: m primes above spf with prod < Y <= prod * spf
        u64 um = subsets_in_band(above_spf, m, Y / spf, Y);
        if (um) rep.u[m] += w * static_cast<double>(um);
        // v[m]: (m-1) primes above spf with prod * spf < Y
        u64 vm = subsets_in_band(above_spf, m - 1, 0.0, Y / spf);
        if (vm) rep.v[m] += w * static_cast<double>(vm);
      }
    }
    if (spf_in_range) {
      u64 vlast = subsets_in_band(above_spf, n0, 0.0, Y / spf);
      if (vlast) rep.v[n0 + 1] += w * static_cast<double>(vlast);
    }
  }

  rep.residuals.push_back(rep.sifted_at_sqrt - (rep.s1 - rep.s2 - rep.s3 - rep.tail));
  rep.residuals.push_back(rep.s2 - rep.v[1]);
  for (int m = 1; m <= n0; ++m)
    rep.residuals.push_back(rep.v[m] - (rep.t[m] - rep.u[m] - rep.v[m + 1]));
  double telescoped = 0.0;
  for (int m = 1; m <= n0; ++m) {
    double sign = (m % 2 == 1) ? 1.0 : -1.0;
    telescoped += sign * (rep.t[m] - rep.u[m]);
  }
  telescoped += ((n0 % 2 == 0) ? 1.0 : -1.0) * rep.v[n0 + 1];
  rep.residuals.push_back(rep.s2 - telescoped);
  return rep;
}

RecursionStep recursion_step(const WeightedSequence& c, const SieveParams& params, int n) {
  if (n < 1 || n > params.n0)
    throw std::invalid_argument("recursion_step: need 1 <= n <= n0");
  const double z_small = params.z_small();
  const double Y = params.Y;
  RecursionStep step;
  for (const auto& [nn, w] : c.support) {
    if (nn == 1) continue;
    ElementFactors f = element_factors(nn);
    double spf = static_cast<double>(f.spf);
    if (spf < z_small) continue;
    std::vector<u64> in_range = primes_in(f.distinct, z_small, Y);
    step.t += w * static_cast<double>(subsets_in_band(in_range, n, 0.0, Y));
    if (spf < Y) {
      std::vector<u64> above = primes_in(f.distinct, spf + 0.5, Y);
      step.u += w * static_cast<double>(subsets_in_band(above, n, Y / spf, Y));
      step.v += w * static_cast<double>(subsets_in_band(above, n - 1, 0.0, Y / spf));
      step.v_next += w * static_cast<double>(subsets_in_band(above, n, 0.0, Y / spf));
    }
  }
  return step;
}

BoundarySplit u_split(const WeightedSequence& c, const SieveParams& params, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("u_split: n must be 1 or 2");
  const double z_small = params.z_small();
  const double z_mid = params.z_mid();
  const double z_high = params.z_high();
  const double Y = params.Y;
  BoundarySplit split;
  for (const auto& [nn, w] : c.support) {
    if (nn == 1) continue;
    ElementFactors f = element_factors(nn);
    double spf = static_cast<double>(f.spf);
    if (spf < z_small || spf >= Y) continue;
    std::vector<u64> above = primes_in(f.distinct, spf + 0.5, Y);
    // Band the full product q = s * spf where s is the subset product; the
    // membership constraint s < Y caps every band.
    auto band = [&](double q_lo, double q_hi) {
      double lo = q_lo / spf;
      double hi = (q_hi <= 0) ? Y : std::min(q_hi / spf, Y);
      return w * static_cast<double>(subsets_in_band(above, n, lo, hi));
    };
    split.low += band(Y, z_mid);
    split.middle += band(z_mid, z_high);
    split.high += band(z_high, 0.0);
  }
  return split;
}

bool coefficient_indicator(const CoefficientSupport& spec, u64 n) {
  if (n == 0) throw std::invalid_argument("coefficient_indicator: n must be >= 1");
  double nd = static_cast<double>(n);
  if (!spec.window.contains(nd)) return false;
  if (spec.kind == CoefficientSupport::Kind::rough) {
    if (n == 1) return true;
    return static_cast<double>(element_factors(n).spf) >= spec.tail_lo;
  }
  // prime_chain: n = p_1 ... p_{j+1}, squarefree, with
  //   p_{j+1} in [tail_lo, tail_hi), p_{j+1} < ... < p_1 < chain_limit,
  //   p_1...p_j < chain_limit <= n  (j >= 1; j = 0 means a single prime in J).
  Factorization f = factorize(n);
  int parts = spec.j + 1;
  if (static_cast<int>(f.size()) != parts) return false;
  for (const auto& [p, e] : f) {
    (void)p;
    if (e != 1) return false;
  }
  double smallest = static_cast<double>(f.front().first);
  if (!(smallest >= spec.tail_lo && smallest < spec.tail_hi)) return false;
  double largest = static_cast<double>(f.back().first);
  if (largest >= spec.chain_limit) return false;
  if (spec.j == 0) return true;
  double lead = nd / smallest;  // p_1...p_j, exact for desk-scale n
  return lead < spec.chain_limit && nd >= spec.chain_limit;
}

}  // namespace antlab
