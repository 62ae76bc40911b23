#pragma once

// Test-side reference implementations. None of these call into the library
// routine they are used to check.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"

namespace testing_support {

using zeck::BigInt;
using zeck::Rational;

inline constexpr std::uint64_t seed = 20111900;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed);
  return engine;
}

/// Pascal's triangle rows 0..max.
inline std::vector<std::vector<BigInt>> pascal(int max) {
  std::vector<std::vector<BigInt>> rows(max + 1);
  for (int m = 0; m <= max; ++m) {
    rows[m].assign(m + 1, BigInt(1));
    for (int j = 1; j < m; ++j) rows[m][j] = rows[m - 1][j - 1] + rows[m - 1][j];
  }
  return rows;
}

/// F_1 = 1, F_2 = 2, ... by plain addition; index 0 holds 1.
inline std::vector<BigInt> fibs(int max) {
  std::vector<BigInt> f(max + 1);
  f[0] = 1;
  if (max >= 1) f[1] = 1;
  if (max >= 2) f[2] = 2;
  for (int i = 3; i <= max; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

inline std::vector<std::uint64_t> fibs64(int max) {
  std::vector<std::uint64_t> f(max + 1);
  f[0] = 1;
  if (max >= 1) f[1] = 1;
  if (max >= 2) f[2] = 2;
  for (int i = 3; i <= max; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

/// Base-B digits, most significant first.
inline std::vector<std::uint32_t> digits(BigInt n, std::uint32_t base) {
  std::vector<std::uint32_t> out;
  while (n > 0) {
    out.insert(out.begin(), static_cast<std::uint32_t>(n % base));
    n /= base;
  }
  return out;
}

/// Every Zeckendorf index set (non-adjacent subsets of 1..max) by value,
/// found by scanning bitmasks.
inline std::map<std::uint64_t, std::vector<int>> zeckendorf_by_subsets(int max) {
  const auto f = fibs64(max);
  std::map<std::uint64_t, std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::uint64_t v = 0;
    std::vector<int> idx;
    for (int i = max; i >= 1; --i) {
      if (mask >> (i - 1) & 1) {
        v += f[i];
        idx.push_back(i);
      }
    }
    out[v] = idx;
  }
  return out;
}

struct Signed {
  int index;
  int sign;
};

/// All sign assignments in {-1, 0, +1}^max over indices 1..max that satisfy
/// the far-difference gap rules with a positive leading term. Returns value
/// -> list of representations (so duplicates are visible).
inline std::map<std::int64_t, std::vector<std::vector<Signed>>> signed_by_ternary(int max) {
  const auto f = fibs64(max);
  std::map<std::int64_t, std::vector<std::vector<Signed>>> out;
  std::vector<int> s(max + 1, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < max; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 1; i <= max; ++i) {
      s[i] = static_cast<int>(c % 3) - 1;
      c /= 3;
    }
    std::vector<Signed> terms;
    for (int i = max; i >= 1; --i) {
      if (s[i] != 0) terms.push_back({i, s[i]});
    }
    if (!terms.empty() && terms.front().sign != 1) continue;
    bool ok = true;
    for (std::size_t j = 1; j < terms.size() && ok; ++j) {
      const int gap = terms[j - 1].index - terms[j].index;
      ok = gap >= (terms[j - 1].sign == terms[j].sign ? 4 : 3);
    }
    if (!ok) continue;
    std::int64_t v = 0;
    for (const auto& t : terms) v += t.sign * static_cast<std::int64_t>(f[t.index]);
    out[v].push_back(terms);
  }
  return out;
}

/// S_n by its defining sum over the plain Fibonacci list.
inline std::int64_t threshold(int n) {
  if (n <= 0) return 0;
  const auto f = fibs64(n);
  std::int64_t s = 0;
  for (int i = n; i > 0; i -= 4) s += static_cast<std::int64_t>(f[i]);
  return s;
}

}  // namespace testing_support
