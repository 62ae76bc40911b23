#pragma once

// Exact counting: binomials, the Zeckendorf summand density, stars and bars,
// the weighted count E(n), closed-form moments, the weighted geometric sum
// S(m, x) and the far-difference joint count.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/error.hpp"
#include "zeck/quadrat.hpp"
#include "zeck/sequences.hpp"

namespace zeck {

/// C(m, j) for 0 <= j <= m, and 0 otherwise: a negative lower index gives 0,
/// and so does a negative upper index (no generalised binomials).
inline BigInt binom(long long m, long long j) {
  if (j < 0 || m < 0 || j > m) return 0;
  j = std::min(j, m - j);
  BigInt out = 1;
  for (long long i = 1; i <= j; ++i) {
    out *= (m - j + i);
    out /= i;
  }
  return out;
}

/// Number of ways to write `total` as an ordered sum of `parts` positive
/// integers: C(total - 1, parts - 1), with exactly one way to split 0 into 0
/// parts.
inline BigInt compositions(long long total, long long parts) {
  if (total == 0 && parts == 0) return 1;
  if (total <= 0 || parts <= 0) return 0;
  return binom(total - 1, parts - 1);
}

/// Number of N in [F_n, F_{n+1}) with exactly k + 1 Zeckendorf summands.
inline BigInt zeck_count(long n, long k) {
  if (n < 1) throw error(errc::out_of_domain, "zeck_count needs n >= 1");
  return binom(n - 1 - k, k);
}

/// Exact distribution of the non-forced summand count on [F_n, F_{n+1}).
struct DensityTable {
  long n = 0;
  std::vector<BigInt> counts;  // counts[k] = C(n-1-k, k), k = 0..floor((n-1)/2)
  BigInt normalizer;           // F_{n-1}

  Rational probability(std::size_t k) const {
    if (k >= counts.size()) return 0;
    return Rational(counts[k], normalizer);
  }
  double probability_float(std::size_t k) const { return to_double(probability(k)); }
};

/// Counts are produced by the ratio
///   C(m-k-1, k+1) / C(m-k, k) = (m-2k)(m-2k-1) / ((k+1)(m-k)),  m = n - 1,
/// which keeps n in the thousands cheap.
inline DensityTable zeck_density(long n) {
  if (n < 1) throw error(errc::out_of_domain, "zeck_density needs n >= 1");
  DensityTable table{n, {}, fib(n - 1)};
  const long m = n - 1;
  BigInt current = 1;
  for (long k = 0; 2 * k <= m; ++k) {
    table.counts.push_back(current);
    if (2 * (k + 1) > m) break;
    current *= BigInt(m - 2 * k) * (m - 2 * k - 1);
    current /= BigInt(k + 1) * (m - k);
  }
  return table;
}

/// Solutions of y_1 + ... + y_p = n with y_i >= mins[i] (p = mins.size()).
inline BigInt stars_and_bars(long long n, std::span<const long long> mins) {
  if (mins.empty()) throw error(errc::invalid_argument, "stars_and_bars needs at least one part");
  const long long floor_sum = std::accumulate(mins.begin(), mins.end(), 0LL);
  const long long free = n - floor_sum;
  if (free < 0) return 0;
  const auto p = static_cast<long long>(mins.size());
  return binom(free + p - 1, p - 1);
}

inline BigInt stars_and_bars(long long n, long long p) {
  if (p < 1) throw error(errc::invalid_argument, "stars_and_bars needs at least one part");
  return n < 0 ? BigInt(0) : binom(n + p - 1, p - 1);
}

/// E(n) = sum_k k C(n-1-k, k).
inline BigInt script_E(long n) {
  const DensityTable table = zeck_density(n);
  BigInt total = 0;
  for (std::size_t k = 1; k < table.counts.size(); ++k) total += BigInt(k) * table.counts[k];
  return total;
}

/// ((5 - sqrt 5) / 10) n - 2/5. Matches the exact mean of the non-forced
/// summand count up to exponentially small terms.
inline QuadRat mean_closed(long n) {
  return constants::mean_slope() * QuadRat(n) - QuadRat(Rational(2, 5));
}

/// n / (5 sqrt 5) - 2/25.
inline QuadRat variance_closed(long n) {
  return constants::variance_slope() * QuadRat(n) - QuadRat(Rational(2, 25));
}

namespace detail {

template <class Field>
Field power(Field base, std::uint64_t e) {
  Field out(1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace detail

/// S(m, x) = sum_{j=0}^{m} j x^j via (m x^{m+2} - (m+1) x^{m+1} + x) / (x - 1)^2.
/// At x = 1 the closed form is singular and m(m+1)/2 is returned instead.
template <class Field>
Field weighted_geom(std::uint64_t m, const Field& x) {
  const Field one(1);
  if (x == one) return Field(Rational(BigInt(m) * (m + 1), 2));
  const Field xm1 = detail::power(x, m + 1);
  const Field numerator = Field(Rational(BigInt(m))) * xm1 * x - Field(Rational(BigInt(m + 1))) * xm1 + x;
  const Field d = x - one;
  return numerator / (d * d);
}

/// Number of N in (S_{n-1}, S_n] whose far-difference representation has
/// `positives` positive and `negatives` negative terms.
///
/// With k = positives - 1 (positive terms besides the leading +F_n),
/// t = k + negatives and a_r = n - 3t + 2r:
///
///   sum_{r=0}^{k} comp(k, r) [ comp(l, r-1) C(a_r - 3, t)
///                            + comp(l, r) (C(a_r - 2, t) + C(a_r - 1, t))
///                            + comp(l, r+1) C(a_r, t) ]
///
/// where comp(x, y) = C(x-1, y-1) counts compositions of x into y positive
/// parts (comp(0, 0) = 1) and C is binom() above. Read this way the sum is
/// exact for every cell except the lone representation +F_n (one positive,
/// no negatives), which it counts twice; that cell is 1.
inline BigInt joint_count(long n, long positives, long negatives) {
  if (n < 1) throw error(errc::out_of_domain, "joint_count needs n >= 1");
  if (positives < 0 || negatives < 0) return 0;
  if (positives == 0) return 0;
  if (positives == 1 && negatives == 0) return 1;
  const long k = positives - 1;
  const long l = negatives;
  const long t = k + l;
  BigInt total = 0;
  for (long r = 0; r <= k; ++r) {
    const long a = n - 3 * t + 2 * r;
    BigInt bracket = compositions(l, r - 1) * binom(a - 3, t) +
                     compositions(l, r) * (binom(a - 2, t) + binom(a - 1, t)) +
                     compositions(l, r + 1) * binom(a, t);
    if (bracket != 0) total += compositions(k, r) * bracket;
  }
  return total;
}

struct JointTable {
  long n = 0;
  std::map<std::pair<long, long>, BigInt> counts;  // (positives, negatives) -> count, nonzero only
  BigInt normalizer;                               // S_n - S_{n-1}

  BigInt count(long positives, long negatives) const {
    auto it = counts.find({positives, negatives});
    return it == counts.end() ? BigInt(0) : it->second;
  }
};

inline JointTable joint_table(long n) {
  if (n < 1) throw error(errc::out_of_domain, "joint_table needs n >= 1");
  JointTable table{n, {}, fardiff_S(n) - fardiff_S(n - 1)};
  // Consecutive indices differ by at least 3, so at most (n-1)/3 + 1 terms.
  const long max_terms = (n - 1) / 3 + 1;
  for (long pos = 1; pos <= max_terms; ++pos) {
    for (long neg = 0; pos + neg <= max_terms; ++neg) {
      BigInt c = joint_count(n, pos, neg);
      if (c != 0) table.counts.emplace(std::make_pair(pos, neg), std::move(c));
    }
  }
  return table;
}

}  // namespace zeck
