#pragma once

// Legal PLRS decompositions, Zeckendorf decompositions and far-difference
// (signed Fibonacci) representations.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/error.hpp"
#include "zeck/sequences.hpp"

namespace zeck {

/// N = sum_{i=1}^{m} a_i H_{m+1-i}. coeffs[0] is a_1, the coefficient of
/// H_m; storage is most-significant first.
struct Decomposition {
  PlrsSpec spec;
  std::size_t top_index = 0;
  std::vector<std::uint32_t> coeffs;

  /// Indices n with a nonzero coefficient of H_n, descending.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) out.push_back(top_index - i);
    }
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks legality of a_1..a_m by parsing it into blocks
///   c_1, ..., c_{s-1}, a_s   with a_s < c_s,
/// optionally ending in a partial prefix c_1..c_r (r < L). The parse is
/// forced: a block ends at the first position where the digit drops below
/// the pattern. Runs of zeros are blocks with s = 1 since c_1 >= 1.
///
/// `top_level` additionally demands a_1 > 0. The empty sequence is legal.
inline bool is_legal(const PlrsSpec& spec, std::span<const std::uint32_t> coeffs,
                     bool top_level = true) {
  if (coeffs.empty()) return true;
  if (top_level && coeffs.front() == 0) return false;
  const std::size_t depth = spec.depth();
  std::size_t s = 1;  // position inside the current block
  for (auto a : coeffs) {
    const auto c = spec.c(s);
    if (a > c) return false;
    if (a < c) {
      s = 1;
      continue;
    }
    // a == c_s: the block continues, unless that completes all of c_1..c_L.
    if (s == depth) return false;
    ++s;
  }
  return true;
}

inline bool is_legal(const Decomposition& dec) {
  return dec.coeffs.size() == dec.top_index && is_legal(dec.spec, dec.coeffs);
}

inline BigInt reconstruct(const SequenceCache& cache, const Decomposition& dec) {
  BigInt total = 0;
  for (std::size_t i = 0; i < dec.coeffs.size(); ++i) {
    if (dec.coeffs[i] != 0) total += BigInt(dec.coeffs[i]) * cache.term(dec.top_index - i);
  }
  return total;
}

inline BigInt reconstruct(const PlrsSpec& spec, const Decomposition& dec) {
  return reconstruct(SequenceCache(spec), dec);
}

inline std::uint64_t summand_count(const Decomposition& dec) {
  std::uint64_t total = 0;
  for (auto a : dec.coeffs) total += a;
  return total;
}

/// Greedy legal decomposition. Scans indices from the top down, tracking the
/// position s inside the current block; at each index takes the largest
/// digit that keeps the block below the pattern (at most c_s, and at most
/// c_L - 1 when s = L) and keeps the partial sum <= N.
inline Decomposition decompose(const SequenceCache& cache, const BigInt& value) {
  if (value < 1) throw error(errc::non_positive_input, "decompose needs N >= 1");
  const PlrsSpec& spec = cache.spec();
  const std::size_t depth = spec.depth();
  const std::size_t top = cache.top_index(value);

  Decomposition dec{spec, top, {}};
  dec.coeffs.reserve(top);
  BigInt rest = value;
  std::size_t s = 1;
  for (std::size_t j = top; j >= 1; --j) {
    const std::uint32_t c = spec.c(s);
    const std::uint32_t cap = (s == depth) ? c - 1 : c;
    std::uint32_t digit = 0;
    if (cap > 0) {
      const BigInt& h = cache.term(j);
      if (rest >= h) {
        if (cap <= 4) {
          while (digit < cap && rest >= h) {
            rest -= h;
            ++digit;
          }
        } else {
          BigInt q = rest / h;
          digit = q >= cap ? cap : q.convert_to<std::uint32_t>();
          rest -= BigInt(digit) * h;
        }
      }
    }
    dec.coeffs.push_back(digit);
    s = (digit == c) ? s + 1 : 1;
  }
  if (rest != 0) {
    // Unreachable for a valid PLRS; reaching it means the greedy rule is wrong.
    throw error(errc::out_of_domain, "greedy decomposition left a remainder of " + rest.str());
  }
  return dec;
}

inline Decomposition decompose(const PlrsSpec& spec, const BigInt& value) {
  return decompose(SequenceCache(spec), value);
}

/// Zeckendorf decomposition of N >= 1: strictly decreasing Fibonacci indices,
/// no two adjacent.
inline std::vector<std::size_t> zeckendorf(const BigInt& value) {
  if (value < 1) throw error(errc::non_positive_input, "zeckendorf needs N >= 1");
  const SequenceCache& fibs = fibonacci_cache();
  std::vector<std::size_t> out;
  BigInt rest = value;
  std::size_t n = fibs.top_index(rest);
  while (rest > 0) {
    while (fibs.term(n) > rest) --n;
    out.push_back(n);
    rest -= fibs.term(n);
    n = n >= 2 ? n - 2 : 0;
    if (n == 0) break;
  }
  return out;
}

struct SignedTerm {
  std::uint32_t index = 0;
  int sign = 1;

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Far-difference representation: terms in strictly decreasing index order.
/// Empty means 0.
struct SignedDecomposition {
  std::vector<SignedTerm> terms;

  std::size_t positive_count() const {
    std::size_t k = 0;
    for (const auto& t : terms) k += t.sign > 0;
    return k;
  }
  std::size_t negative_count() const { return terms.size() - positive_count(); }

  /// "+F17 -F14 +F8 +F3"
  std::string to_string() const {
    std::string out;
    for (const auto& t : terms) {
      if (!out.empty()) out += ' ';
      out += (t.sign > 0 ? "+F" : "-F") + std::to_string(t.index);
    }
    return out;
  }

  friend bool operator==(const SignedDecomposition&, const SignedDecomposition&) = default;
};

inline BigInt value_of(const SignedDecomposition& sd) {
  BigInt total = 0;
  for (const auto& t : sd.terms) {
    if (t.sign > 0) {
      total += fib(t.index);
    } else {
      total -= fib(t.index);
    }
  }
  return total;
}

inline bool fardiff_valid(const SignedDecomposition& sd) {
  const auto& t = sd.terms;
  if (t.empty()) return true;
  if (t.front().sign != 1) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].index < 1 || (t[i].sign != 1 && t[i].sign != -1)) return false;
    if (i == 0) continue;
    if (t[i].index >= t[i - 1].index) return false;
    const std::uint32_t gap = t[i - 1].index - t[i].index;
    if (gap < (t[i].sign == t[i - 1].sign ? 4u : 3u)) return false;
  }
  return true;
}

/// Far-difference representation of N >= 0. For N in (S_{n-1}, S_n] the
/// leading term is +F_n; the remainder N - F_n is handled recursively, with
/// signs flipped whenever it is negative.
inline SignedDecomposition fardiff(const BigInt& value) {
  if (value < 0) throw error(errc::negative_input, "fardiff needs N >= 0");
  SignedDecomposition out;
  FardiffThresholds thresholds = fardiff_thresholds(8);
  BigInt rest = value;
  int orientation = 1;
  while (rest != 0) {
    while (thresholds.values.back() < rest) thresholds = fardiff_thresholds(thresholds.size() * 2);
    // Smallest n with S_n >= rest.
    std::size_t n = 1;
    while (thresholds.values[n - 1] < rest) ++n;
    out.terms.push_back({static_cast<std::uint32_t>(n), orientation});
    rest -= fib(static_cast<long>(n));
    if (rest < 0) {
      rest = -rest;
      orientation = -orientation;
    }
  }
  return out;
}

}  // namespace zeck
