#pragma once

// Exhaustive ground truth for small parameters. Nothing here calls the greedy
// decomposers to generate candidates: legal sequences are built by a direct
// search over coefficient space and signed representations by a direct search
// over index sets, so agreement with decompose()/fardiff() is evidence rather
// than a tautology.
//
// Every enumeration is guarded. The default limit is 10^7 enumerated values
// (and far-difference indices up to 30); the ZECK_MAX_ENUM environment
// variable raises or lowers the value limit.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/decompose.hpp"
#include "zeck/error.hpp"
#include "zeck/sequences.hpp"

namespace zeck {

inline constexpr std::uint64_t default_enumeration_limit = 10'000'000;
inline constexpr std::uint32_t default_fardiff_index_limit = 30;

/// Largest number of values an oracle may enumerate.
inline std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("ZECK_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return default_enumeration_limit;
}

inline bool enumeration_limit_overridden() { return std::getenv("ZECK_MAX_ENUM") != nullptr; }

namespace detail {

inline void check_enumerable(const BigInt& count, const std::string& what) {
  if (count > BigInt(enumeration_limit())) {
    throw error(errc::too_large, what + " has " + count.str() + " values, above the enumeration limit of " +
                                     std::to_string(enumeration_limit()) + " (set ZECK_MAX_ENUM to override)");
  }
}

/// Depth-first generation of legal coefficient strings of a fixed length,
/// block by block: each block is c_1..c_{s-1} followed by a digit d < c_s,
/// and the string may end in a partial prefix c_1..c_r with r < L.
class LegalSearch {
 public:
  using Visitor = std::function<void(std::span<const std::uint32_t>, std::uint64_t)>;

  LegalSearch(const PlrsSpec& spec, std::vector<std::uint64_t> weights, Visitor visit)
      : spec_(spec), weights_(std::move(weights)), visit_(std::move(visit)), digits_(weights_.size()) {}

  void run() { extend(0, 0); }

 private:
  void extend(std::size_t pos, std::uint64_t value) {
    const std::size_t length = digits_.size();
    const std::size_t remaining = length - pos;
    const std::size_t depth = spec_.depth();
    if (remaining == 0) {
      visit_(digits_, value);
      return;
    }
    if (remaining < depth) {
      std::uint64_t v = value;
      for (std::size_t i = 0; i < remaining; ++i) {
        digits_[pos + i] = spec_.c(i + 1);
        v += weights_[pos + i] * spec_.c(i + 1);
      }
      visit_(digits_, v);
    }
    std::uint64_t prefix_value = value;
    for (std::size_t s = 1; s <= std::min(depth, remaining); ++s) {
      // digits_[pos .. pos+s-2] already hold c_1..c_{s-1}
      const std::uint32_t c = spec_.c(s);
      const std::uint32_t lowest = (pos == 0 && s == 1) ? 1 : 0;
      for (std::uint32_t d = lowest; d < c; ++d) {
        digits_[pos + s - 1] = d;
        extend(pos + s, prefix_value + weights_[pos + s - 1] * d);
      }
      digits_[pos + s - 1] = c;
      prefix_value += weights_[pos + s - 1] * c;
    }
  }

  const PlrsSpec& spec_;
  std::vector<std::uint64_t> weights_;
  Visitor visit_;
  std::vector<std::uint32_t> digits_;
};

}  // namespace detail

/// Calls visit(coeffs, value) for every legal coefficient string with top
/// index exactly n (a_1 > 0). Values are machine integers; the interval is
/// guarded so they always fit.
inline void for_each_legal(const PlrsSpec& spec, std::size_t n,
                           const std::function<void(std::span<const std::uint32_t>, std::uint64_t)>& visit) {
  if (n == 0) throw error(errc::out_of_domain, "top index starts at 1");
  SequenceCache cache(spec);
  detail::check_enumerable(cache.term(n + 1) - cache.term(n), "interval [H_n, H_{n+1})");
  if (cache.term(n + 1) > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw error(errc::too_large, "interval endpoints exceed 64 bits");
  }
  std::vector<std::uint64_t> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = cache.term(n - i).convert_to<std::uint64_t>();
  detail::LegalSearch(spec, std::move(weights), visit).run();
}

/// All legal decompositions with top index n, sorted by value.
inline std::vector<Decomposition> enumerate_legal(const PlrsSpec& spec, std::size_t n) {
  std::vector<std::pair<std::uint64_t, Decomposition>> found;
  for_each_legal(spec, n, [&](std::span<const std::uint32_t> coeffs, std::uint64_t value) {
    found.emplace_back(value, Decomposition{spec, n, std::vector<std::uint32_t>(coeffs.begin(), coeffs.end())});
  });
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Decomposition> out;
  out.reserve(found.size());
  for (auto& [value, dec] : found) out.push_back(std::move(dec));
  return out;
}

struct Counterexample {
  BigInt value;
  std::size_t representations = 0;  // legal strings found for this value
  bool decompose_agrees = true;     // greedy matched the unique string
};

/// Uniqueness report for one interval Omega_n = [H_n, H_{n+1}).
struct BijectionReport {
  PlrsSpec spec;
  std::size_t n = 0;
  BigInt interval_size;
  bool passed = false;
  std::vector<Counterexample> counterexamples;
};

/// Every N in [H_n, H_{n+1}) must have exactly one legal string with top
/// index n, the legality checker must accept it, and decompose() must return
/// it. Strings whose value falls outside the interval are counterexamples too.
inline BijectionReport verify_bijection(const SequenceCache& cache, std::size_t n) {
  const PlrsSpec& spec = cache.spec();
  BijectionReport report{spec, n, cache.term(n + 1) - cache.term(n), false, {}};
  const auto low = cache.term(n).convert_to<std::uint64_t>();
  const auto size = report.interval_size.convert_to<std::uint64_t>();
  std::vector<std::uint32_t> hits(size, 0);
  std::map<std::uint64_t, Counterexample> bad;

  for_each_legal(spec, n, [&](std::span<const std::uint32_t> coeffs, std::uint64_t value) {
    if (value < low || value - low >= size) {
      auto& ce = bad[value];
      ce.value = value;
      ++ce.representations;
      return;
    }
    ++hits[value - low];
    const bool legal = is_legal(spec, coeffs);
    const Decomposition greedy = decompose(cache, BigInt(value));
    const bool agrees = legal && greedy.top_index == n &&
                        std::equal(greedy.coeffs.begin(), greedy.coeffs.end(), coeffs.begin(), coeffs.end());
    if (!agrees) {
      auto& ce = bad[value];
      ce.value = value;
      ce.decompose_agrees = false;
    }
  });

  for (std::uint64_t i = 0; i < size; ++i) {
    if (hits[i] != 1) {
      auto& ce = bad[low + i];
      ce.value = low + i;
    }
  }
  for (auto& [value, ce] : bad) {
    if (value >= low && value - low < size) ce.representations = hits[value - low];
    report.counterexamples.push_back(std::move(ce));
  }
  report.passed = report.counterexamples.empty();
  return report;
}

inline BijectionReport verify_bijection(const PlrsSpec& spec, std::size_t n) {
  return verify_bijection(SequenceCache(spec), n);
}

/// Histogram over [H_n, H_{n+1}) of the number of summands (K_n, not K_n - 1).
inline std::map<std::uint64_t, std::uint64_t> empirical_density(const PlrsSpec& spec, std::size_t n) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for_each_legal(spec, n, [&](std::span<const std::uint32_t> coeffs, std::uint64_t) {
    std::uint64_t count = 0;
    for (auto a : coeffs) count += a;
    ++hist[count];
  });
  return hist;
}

namespace detail {

/// Depth-first search over signed index sequences obeying the far-difference
/// gap rules, leading sign +1, all indices <= max_index.
class FardiffSearch {
 public:
  using Visitor = std::function<void(const std::vector<SignedTerm>&, std::int64_t)>;

  FardiffSearch(std::uint32_t max_index, Visitor visit) : visit_(std::move(visit)) {
    fib_.resize(max_index + 1);
    for (std::uint32_t i = 0; i <= max_index; ++i) fib_[i] = zeck::fib(i).convert_to<std::int64_t>();
  }

  /// Representations whose leading index is exactly `lead`.
  void run_leading(std::uint32_t lead) {
    terms_.clear();
    terms_.push_back({lead, 1});
    extend(fib_[lead]);
  }

 private:
  void extend(std::int64_t value) {
    visit_(terms_, value);
    const SignedTerm last = terms_.back();
    for (int sign : {1, -1}) {
      const std::uint32_t gap = sign == last.sign ? 4 : 3;
      if (last.index <= gap) continue;
      for (std::uint32_t next = last.index - gap; next >= 1; --next) {
        terms_.push_back({next, sign});
        extend(value + sign * fib_[next]);
        terms_.pop_back();
      }
    }
  }

  Visitor visit_;
  std::vector<std::int64_t> fib_;
  std::vector<SignedTerm> terms_;
};

inline void check_fardiff_index(std::uint32_t max_index) {
  if (max_index == 0) throw error(errc::out_of_domain, "max_index must be positive");
  if (enumeration_limit_overridden()) {
    if (max_index > 80 || fardiff_S(max_index) + 1 > BigInt(enumeration_limit())) {
      throw error(errc::too_large, "S_" + std::to_string(max_index) + " exceeds ZECK_MAX_ENUM");
    }
  } else if (max_index > default_fardiff_index_limit) {
    throw error(errc::too_large, "far-difference enumeration is limited to max_index <= 30 (set ZECK_MAX_ENUM to override)");
  }
}

}  // namespace detail

/// Every valid signed representation with indices <= max_index, stored by
/// value. Values cover [0, S_{max_index}]; a second representation of any
/// value throws DuplicateValue.
struct FardiffEnumeration {
  std::uint32_t max_index = 0;
  std::vector<std::optional<SignedDecomposition>> by_value;

  const SignedDecomposition* find(std::uint64_t value) const {
    if (value >= by_value.size() || !by_value[value]) return nullptr;
    return &*by_value[value];
  }
  /// True iff every value in [0, S_max] has a representation.
  bool gap_free() const {
    for (const auto& entry : by_value) {
      if (!entry) return false;
    }
    return true;
  }
};

inline FardiffEnumeration enumerate_fardiff(std::uint32_t max_index) {
  detail::check_fardiff_index(max_index);
  const auto top = fardiff_S(max_index).convert_to<std::int64_t>();
  FardiffEnumeration out{max_index, {}};
  out.by_value.resize(static_cast<std::size_t>(top) + 1);
  out.by_value[0] = SignedDecomposition{};
  detail::FardiffSearch search(max_index, [&](const std::vector<SignedTerm>& terms, std::int64_t value) {
    if (value <= 0 || value > top) {
      throw error(errc::out_of_domain, "signed representation with value " + std::to_string(value) +
                                           " outside [1, S_" + std::to_string(max_index) + "]");
    }
    auto& slot = out.by_value[static_cast<std::size_t>(value)];
    if (slot) throw error(errc::duplicate_value, "value " + std::to_string(value) + " has two representations");
    slot = SignedDecomposition{terms};
  });
  for (std::uint32_t lead = 1; lead <= max_index; ++lead) search.run_leading(lead);
  return out;
}

/// Histogram of (positive terms, negative terms) over (S_{n-1}, S_n], from
/// representations led by +F_n. Throws DuplicateValue if a value repeats and
/// OutOfDomain if the interval is not covered exactly.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> empirical_joint(std::uint32_t n) {
  detail::check_fardiff_index(n);
  const auto low = fardiff_S(static_cast<long>(n) - 1).convert_to<std::int64_t>();
  const auto high = fardiff_S(n).convert_to<std::int64_t>();
  std::vector<bool> seen(static_cast<std::size_t>(high - low), false);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> hist;
  detail::FardiffSearch search(n, [&](const std::vector<SignedTerm>& terms, std::int64_t value) {
    if (value <= low || value > high) {
      throw error(errc::out_of_domain, "value " + std::to_string(value) + " led by F_" + std::to_string(n) +
                                           " lies outside (S_{n-1}, S_n]");
    }
    auto idx = static_cast<std::size_t>(value - low - 1);
    if (seen[idx]) throw error(errc::duplicate_value, "value " + std::to_string(value) + " has two representations");
    seen[idx] = true;
    std::uint32_t k = 0;
    for (const auto& t : terms) k += t.sign > 0;
    ++hist[{k, static_cast<std::uint32_t>(terms.size()) - k}];
  });
  search.run_leading(n);
  for (bool b : seen) {
    if (!b) throw error(errc::out_of_domain, "interval (S_{n-1}, S_n] is not fully covered");
  }
  return hist;
}

}  // namespace zeck
