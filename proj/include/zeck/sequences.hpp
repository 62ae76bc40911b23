#pragma once

// Positive linear recurrence sequences (PLRS), the Fibonacci special case,
// far-difference thresholds and Binet's approximation.
//
// Indexing follows the numeration-system convention: H_1 = 1 and, for
// Fibonacci, F_1 = 1, F_2 = 2, F_3 = 3, F_4 = 5, ...

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/error.hpp"

namespace zeck {

/// Recurrence H_{n+1} = c_1 H_n + ... + c_L H_{n+1-L} with c_1, c_L >= 1.
/// Instances are only produced by make_plrs, so every PlrsSpec is valid.
class PlrsSpec {
 public:
  using coeff_type = std::uint32_t;

  std::size_t depth() const noexcept { return coeffs_.size(); }
  /// c_i, 1-based.
  coeff_type c(std::size_t i) const { return coeffs_.at(i - 1); }
  std::span<const coeff_type> coeffs() const noexcept { return coeffs_; }
  coeff_type max_coeff() const noexcept {
    return *std::max_element(coeffs_.begin(), coeffs_.end());
  }
  std::uint64_t coeff_sum() const noexcept {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), std::uint64_t{0});
  }
  bool is_fibonacci() const noexcept {
    return coeffs_.size() == 2 && coeffs_[0] == 1 && coeffs_[1] == 1;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(coeffs_[i]);
    }
    return out;
  }

  friend bool operator==(const PlrsSpec&, const PlrsSpec&) = default;

 private:
  explicit PlrsSpec(std::vector<coeff_type> coeffs) : coeffs_(std::move(coeffs)) {}
  friend PlrsSpec make_plrs(std::span<const std::int64_t> coeffs);

  std::vector<coeff_type> coeffs_;
};

inline PlrsSpec make_plrs(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) throw error(errc::empty_coeffs, "a PLRS needs at least one coefficient");
  for (auto c : coeffs) {
    if (c < 0) throw error(errc::negative_coeff, "coefficient " + std::to_string(c) + " is negative");
    if (c > std::numeric_limits<PlrsSpec::coeff_type>::max()) {
      throw error(errc::too_large, "coefficient " + std::to_string(c) + " does not fit in 32 bits");
    }
  }
  if (coeffs.front() == 0) throw error(errc::leading_coeff_zero, "c_1 must be positive");
  if (coeffs.back() == 0) throw error(errc::trailing_coeff_zero, "c_L must be positive");
  return PlrsSpec(std::vector<PlrsSpec::coeff_type>(coeffs.begin(), coeffs.end()));
}

inline PlrsSpec make_plrs(std::initializer_list<std::int64_t> coeffs) {
  return make_plrs(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

inline PlrsSpec make_plrs(const std::vector<std::int64_t>& coeffs) {
  return make_plrs(std::span<const std::int64_t>(coeffs));
}

inline PlrsSpec fibonacci_spec() { return make_plrs({1, 1}); }

/// Lazily extended prefix H_1..H_m of a PLRS.
///
/// Concurrent readers are safe: terms live in a deque (references survive
/// push_back) and the length is published under a shared mutex, so no reader
/// ever sees a partially written term.
class SequenceCache {
 public:
  explicit SequenceCache(PlrsSpec spec) : spec_(std::move(spec)) { terms_.emplace_back(1); }

  SequenceCache(const SequenceCache& other) : spec_(other.spec_) {
    std::shared_lock lock(other.mutex_);
    terms_ = other.terms_;
  }
  SequenceCache& operator=(const SequenceCache&) = delete;

  const PlrsSpec& spec() const noexcept { return spec_; }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return terms_.size();
  }

  /// H_n, 1-based.
  const BigInt& term(std::size_t n) const {
    if (n == 0) throw error(errc::out_of_domain, "sequence index starts at 1");
    {
      std::shared_lock lock(mutex_);
      if (n <= terms_.size()) return terms_[n - 1];
    }
    extend_to(n);
    std::shared_lock lock(mutex_);
    return terms_[n - 1];
  }

  void extend_to(std::size_t m) const {
    std::unique_lock lock(mutex_);
    while (terms_.size() < m) push_next();
  }

  std::vector<BigInt> prefix(std::size_t m) const {
    extend_to(m);
    std::shared_lock lock(mutex_);
    return std::vector<BigInt>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(m));
  }

  /// The index m with H_m <= value < H_{m+1}; value must be >= 1.
  std::size_t top_index(const BigInt& value) const {
    if (value < 1) throw error(errc::non_positive_input, "value must be positive");
    {
      std::unique_lock lock(mutex_);
      while (terms_.back() <= value) push_next();
    }
    std::shared_lock lock(mutex_);
    auto it = std::upper_bound(terms_.begin(), terms_.end(), value);
    return static_cast<std::size_t>(it - terms_.begin());
  }

 private:
  // Caller holds the unique lock.
  void push_next() const {
    const std::size_t n = terms_.size();  // H_1..H_n known
    const std::size_t depth = spec_.depth();
    BigInt next = 0;
    for (std::size_t i = 1; i <= std::min(n, depth); ++i) {
      next += BigInt(spec_.c(i)) * terms_[n - i];
    }
    if (n < depth) next += 1;
    terms_.push_back(std::move(next));
  }

  PlrsSpec spec_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<BigInt> terms_;
};

inline SequenceCache terms(const PlrsSpec& spec, std::size_t m) {
  if (m == 0) throw error(errc::out_of_domain, "terms() needs m >= 1");
  SequenceCache cache(spec);
  cache.extend_to(m);
  return cache;
}

/// Process-wide Fibonacci cache shared by fib() and friends.
inline const SequenceCache& fibonacci_cache() {
  static const SequenceCache cache(fibonacci_spec());
  return cache;
}

/// F_n with F_1 = 1, F_2 = 2. F_0 is defined as 1 so that F_2 - F_1 = F_0
/// and the n = 1 interval [F_1, F_2) has F_0 elements.
inline BigInt fib(long n) {
  if (n < 0) throw error(errc::out_of_domain, "fib index must be non-negative");
  if (n == 0) return 1;
  return fibonacci_cache().term(static_cast<std::size_t>(n));
}

/// Binet's formula in extended precision. Beyond the range of double the
/// result is +infinity.
inline double binet_estimate(long n) {
  if (n < 1) throw error(errc::out_of_domain, "binet_estimate needs n >= 1");
  const long double sqrt5 = std::sqrt(5.0L);
  const long double phi = (1.0L + sqrt5) / 2.0L;
  const long double psi = 1.0L - phi;
  const long double nd = static_cast<long double>(n);
  long double value = phi / sqrt5 * std::pow(phi, nd) - psi / sqrt5 * std::pow(psi, nd);
  return static_cast<double>(value);
}

/// S_1..S_m with S_n = F_n + F_{n-4} + ... ; S_n = 0 for n <= 0.
struct FardiffThresholds {
  std::vector<BigInt> values;

  std::size_t size() const noexcept { return values.size(); }

  BigInt operator()(long n) const {
    if (n <= 0) return 0;
    return values.at(static_cast<std::size_t>(n - 1));
  }
};

inline FardiffThresholds fardiff_thresholds(std::size_t m) {
  FardiffThresholds out;
  out.values.reserve(m);
  for (std::size_t n = 1; n <= m; ++n) {
    BigInt s = fib(static_cast<long>(n));
    if (n > 4) s += out.values[n - 5];
    out.values.push_back(std::move(s));
  }
  return out;
}

inline BigInt fardiff_S(long n) {
  if (n <= 0) return 0;
  BigInt s = 0;
  for (long i = n; i > 0; i -= 4) s += fib(i);
  return s;
}

}  // namespace zeck
