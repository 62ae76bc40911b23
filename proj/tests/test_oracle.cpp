#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "support.hpp"
#include "zeck/oracle.hpp"

using namespace zeck;
namespace ts = testing_support;

namespace {

std::vector<std::uint64_t> values_of(const PlrsSpec& spec, const std::vector<Decomposition>& decs) {
  std::vector<std::uint64_t> out;
  for (const auto& d : decs) out.push_back(reconstruct(spec, d).convert_to<std::uint64_t>());
  return out;
}

}  // namespace

TEST_CASE("enumerate_legal examples", "[oracle]") {
  const auto fib5 = enumerate_legal(fibonacci_spec(), 5);
  CHECK(values_of(fibonacci_spec(), fib5) == std::vector<std::uint64_t>{8, 9, 10, 11, 12});

  CHECK(enumerate_legal(fibonacci_spec(), 1).size() == 1);

  const PlrsSpec s = make_plrs({2, 3, 1});
  const auto two = enumerate_legal(s, 2);
  CHECK(values_of(s, two) == std::vector<std::uint64_t>{3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("enumerate_legal size equals the interval size", "[oracle]") {
  for (auto spec : {make_plrs({1, 1}), make_plrs({2, 3, 1}), make_plrs({2}), make_plrs({3}), make_plrs({10}),
                    make_plrs({1, 0, 1}), make_plrs({3, 0, 2})}) {
    const SequenceCache cache(spec);
    for (std::size_t n = 1; cache.term(n + 1) - cache.term(n) <= 200000; ++n) {
      const auto decs = enumerate_legal(spec, n);
      REQUIRE(BigInt(decs.size()) == cache.term(n + 1) - cache.term(n));
      std::set<std::uint64_t> distinct;
      for (const auto& d : decs) {
        REQUIRE(d.coeffs.front() > 0);
        distinct.insert(reconstruct(cache, d).convert_to<std::uint64_t>());
      }
      REQUIRE(distinct.size() == decs.size());
    }
  }
}

TEST_CASE("verify_bijection passes on small intervals", "[oracle]") {
  for (std::size_t n = 1; n <= 20; ++n) REQUIRE(verify_bijection(fibonacci_spec(), n).passed);
  for (std::size_t n = 1; n <= 8; ++n) REQUIRE(verify_bijection(make_plrs({3}), n).passed);
  for (std::size_t n = 1; n <= 9; ++n) REQUIRE(verify_bijection(make_plrs({2, 3, 1}), n).passed);
  const BijectionReport r = verify_bijection(make_plrs({2, 3, 1}), 4);
  CHECK(r.interval_size == 63);
  CHECK(r.counterexamples.empty());
}

TEST_CASE("empirical_density examples", "[oracle]") {
  using Hist = std::map<std::uint64_t, std::uint64_t>;
  CHECK(empirical_density(fibonacci_spec(), 5) == Hist{{1, 1}, {2, 3}, {3, 1}});
  CHECK(empirical_density(make_plrs({2}), 3) == Hist{{1, 1}, {2, 2}, {3, 1}});

  const auto rows = ts::pascal(40);
  for (std::size_t n = 1; n <= 20; ++n) {
    const auto hist = empirical_density(fibonacci_spec(), n);
    std::uint64_t total = 0;
    for (const auto& [count, weight] : hist) {
      const long k = static_cast<long>(count) - 1;
      REQUIRE(BigInt(weight) == rows[n - 1 - k][k]);
      total += weight;
    }
    REQUIRE(BigInt(total) == fib(static_cast<long>(n) - 1));
  }
}

TEST_CASE("enumeration guard", "[oracle]") {
  // [F_40, F_41) has F_39 > 10^8 values.
  try {
    enumerate_legal(fibonacci_spec(), 40);
    FAIL("expected TooLarge");
  } catch (const error& e) {
    CHECK(e.code() == errc::too_large);
  }
  CHECK_THROWS_AS(enumerate_fardiff(31), error);
  CHECK_THROWS_AS(enumerate_legal(fibonacci_spec(), 0), error);
}

TEST_CASE("enumerate_fardiff examples", "[oracle]") {
  const FardiffEnumeration e5 = enumerate_fardiff(5);
  CHECK(e5.gap_free());
  CHECK(e5.by_value.size() == 10);
  CHECK(e5.find(6)->to_string() == "+F5 -F2");
  CHECK(e5.find(7)->to_string() == "+F5 -F1");
  CHECK(e5.find(8)->to_string() == "+F5");
  CHECK(e5.find(9)->to_string() == "+F5 +F1");
  CHECK(e5.find(10) == nullptr);

  const FardiffEnumeration e17 = enumerate_fardiff(17);
  CHECK(e17.by_value.size() == 3026);
  CHECK(e17.gap_free());
}

TEST_CASE("enumerate_fardiff agrees with ternary search", "[oracle]") {
  const int max = 12;
  const auto table = ts::signed_by_ternary(max);
  const FardiffEnumeration e = enumerate_fardiff(max);
  std::size_t in_range = 0;
  for (const auto& [value, reps] : table) {
    if (value < 0 || value > ts::threshold(max)) continue;
    ++in_range;
    REQUIRE(reps.size() == 1);
    const SignedDecomposition* got = e.find(static_cast<std::uint64_t>(value));
    REQUIRE(got != nullptr);
    REQUIRE(got->terms.size() == reps.front().size());
    for (std::size_t i = 0; i < got->terms.size(); ++i) {
      REQUIRE(got->terms[i].index == static_cast<std::uint32_t>(reps.front()[i].index));
      REQUIRE(got->terms[i].sign == reps.front()[i].sign);
    }
  }
  CHECK(in_range == e.by_value.size());
}

TEST_CASE("empirical_joint examples", "[oracle]") {
  using Joint = std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>;
  CHECK(empirical_joint(5) == Joint{{{1, 0}, 1}, {{1, 1}, 2}, {{2, 0}, 1}});
  for (std::uint32_t n = 1; n <= 22; ++n) {
    const auto j = empirical_joint(n);
    std::uint64_t total = 0;
    for (const auto& [key, c] : j) {
      REQUIRE(key.first >= 1);
      total += c;
    }
    REQUIRE(BigInt(total) == fardiff_S(n) - fardiff_S(static_cast<long>(n) - 1));
  }
}

TEST_CASE("empirical_joint agrees with ternary search", "[oracle]") {
  const int max = 14;
  const auto table = ts::signed_by_ternary(max);
  for (int n = 1; n <= max; ++n) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> want;
    for (const auto& [value, reps] : table) {
      if (value <= ts::threshold(n - 1) || value > ts::threshold(n)) continue;
      std::uint32_t k = 0, l = 0;
      for (const auto& t : reps.front()) (t.sign > 0 ? k : l)++;
      ++want[{k, l}];
    }
    REQUIRE(empirical_joint(static_cast<std::uint32_t>(n)) == want);
  }
}
