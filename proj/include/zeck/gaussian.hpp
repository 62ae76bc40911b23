#pragma once

// Moments of exact summand densities, the Stirling factorisation of the
// Zeckendorf density, comparison with the standard normal, and joint
// statistics of positive/negative far-difference summands.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/combinatorics.hpp"
#include "zeck/error.hpp"
#include "zeck/oracle.hpp"
#include "zeck/quadrat.hpp"

namespace zeck {

/// forced: K_n, every summand counted. nonforced: K_n - 1, the leading
/// summand H_n dropped.
enum class Convention { forced, nonforced };

inline const char* convention_name(Convention c) { return c == Convention::forced ? "forced" : "nonforced"; }

struct MomentReport {
  long n = 0;
  Convention convention = Convention::nonforced;
  Rational mean;
  Rational variance;
  double mean_float = 0;
  double variance_float = 0;
  std::optional<double> skewness;          // absent when the variance is 0
  std::optional<double> excess_kurtosis;   // absent when the variance is 0
};

/// Exact moments of a weighted sample {(value, weight)}.
inline MomentReport moments_of(long n, Convention convention,
                               const std::vector<std::pair<BigInt, BigInt>>& weighted) {
  BigInt p[5] = {0, 0, 0, 0, 0};
  for (const auto& [value, weight] : weighted) {
    BigInt term = weight;
    for (int i = 0; i < 5; ++i) {
      p[i] += term;
      term *= value;
    }
  }
  if (p[0] == 0) throw error(errc::out_of_domain, "empty distribution");
  const Rational m1(p[1], p[0]), m2(p[2], p[0]), m3(p[3], p[0]), m4(p[4], p[0]);
  MomentReport out;
  out.n = n;
  out.convention = convention;
  out.mean = m1;
  out.variance = m2 - m1 * m1;
  out.mean_float = to_double(out.mean);
  out.variance_float = to_double(out.variance);
  if (out.variance > 0) {
    const Rational c3 = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
    const Rational c4 = m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 * m1 * m1 * m1;
    const Rational var2 = out.variance * out.variance;
    out.skewness = to_double(c3) / std::pow(out.variance_float, 1.5);
    out.excess_kurtosis = to_double(Rational(c4 / var2)) - 3.0;
  }
  return out;
}

inline MomentReport exact_moments(const DensityTable& table, Convention convention) {
  std::vector<std::pair<BigInt, BigInt>> weighted;
  weighted.reserve(table.counts.size());
  const long shift = convention == Convention::forced ? 1 : 0;
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    weighted.emplace_back(BigInt(static_cast<long>(k) + shift), table.counts[k]);
  }
  return moments_of(table.n, convention, weighted);
}

/// Moments of a summand-count histogram (keys are K_n, i.e. forced counts).
inline MomentReport exact_moments(long n, const std::map<std::uint64_t, std::uint64_t>& histogram,
                                  Convention convention) {
  std::vector<std::pair<BigInt, BigInt>> weighted;
  const long shift = convention == Convention::forced ? 0 : -1;
  for (const auto& [count, weight] : histogram) {
    weighted.emplace_back(BigInt(static_cast<long>(count) + shift), BigInt(weight));
  }
  return moments_of(n, convention, weighted);
}

// --- Stirling factorisation ------------------------------------------------

namespace detail {

inline long double log_phi() { return std::log((1.0L + std::sqrt(5.0L)) / 2.0L); }

}  // namespace detail

/// N_n(k) = (1/sqrt(2 pi)) sqrt((n-k) / (k (n-2k))) sqrt(5) / phi, real k.
inline double stirling_normalisation(long n, double k) {
  const long double nn = n, kk = k;
  if (kk <= 0 || nn - 2 * kk <= 0) throw error(errc::out_of_domain, "need 0 < k < n/2");
  const long double sqrt5 = std::sqrt(5.0L);
  const long double phi = (1.0L + sqrt5) / 2.0L;
  const long double inv_sqrt_2pi = 1.0L / std::sqrt(2.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(inv_sqrt_2pi * std::sqrt((nn - kk) / (kk * (nn - 2 * kk))) * sqrt5 / phi);
}

/// log S_n(k) = -n log phi + (n-k) log(n-k) - k log k - (n-2k) log(n-2k),
/// evaluated in long double; S_n itself overflows double long before n = 2010.
inline double stirling_log_exponential(long n, double k) {
  const long double nn = n, kk = k;
  if (kk <= 0 || nn - 2 * kk <= 0) throw error(errc::out_of_domain, "need 0 < k < n/2");
  const long double value = -nn * detail::log_phi() + (nn - kk) * std::log(nn - kk) - kk * std::log(kk) -
                            (nn - 2 * kk) * std::log(nn - 2 * kk);
  return static_cast<double>(value);
}

/// Stirling approximation f_{n+1}(k) = N_n(k) S_n(k) of the density
/// p_{n+1}(k) = C(n-k, k) / F_n, together with the exact value.
struct StirlingFactors {
  long n = 0;
  long k = 0;
  double N_factor = 0;
  double S_factor = 0;
  double log_S_factor = 0;
  double f_value = 0;
  double exact = 0;  // p_{n+1}(k)
  double ratio = 0;  // f_value / exact
  double x = 0;      // (k - mu_{n+1}) / sigma_{n+1}
  double u = 0;      // x sigma_{n+1} / n
  double mu = 0;     // mean of the non-forced count on [F_{n+1}, F_{n+2})
  double sigma = 0;
};

inline StirlingFactors stirling_f(long n, long k, const MomentReport& next_moments) {
  if (k <= 0 || n - 2 * k <= 0) {
    throw error(errc::out_of_domain, "stirling_f needs 0 < k and n - 2k > 0");
  }
  StirlingFactors out;
  out.n = n;
  out.k = k;
  out.N_factor = stirling_normalisation(n, static_cast<double>(k));
  out.log_S_factor = stirling_log_exponential(n, static_cast<double>(k));
  out.S_factor = std::exp(out.log_S_factor);
  out.f_value = static_cast<double>(static_cast<long double>(out.N_factor) * std::exp(static_cast<long double>(out.log_S_factor)));
  out.exact = to_double(Rational(binom(n - k, k), fib(n)));
  out.ratio = out.f_value / out.exact;
  out.mu = next_moments.mean_float;
  out.sigma = std::sqrt(next_moments.variance_float);
  out.x = (static_cast<double>(k) - out.mu) / out.sigma;
  out.u = out.x * out.sigma / static_cast<double>(n);
  return out;
}

inline StirlingFactors stirling_f(long n, long k) {
  return stirling_f(n, k, exact_moments(zeck_density(n + 1), Convention::nonforced));
}

// --- Gaussian profile --------------------------------------------------------

inline double standard_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

struct GaussPoint {
  double x = 0;               // grid point
  long k = 0;                 // round(mu + x sigma)
  double lattice_x = 0;       // (k - mu) / sigma
  double scaled_density = 0;  // sigma p_n(k)
  double normal_pdf = 0;      // standard normal density at x
};

/// Standardised density of the non-forced summand count against N(0, 1).
///
/// sup_deviation compares sigma p_n(k) with the normal density at the
/// lattice point's own coordinate (k - mu)/sigma. grid_deviation compares
/// with the density at the requested grid x instead, which also picks up the
/// rounding offset |x - (k - mu)/sigma| <= 1/(2 sigma).
struct GaussFit {
  long n = 0;
  double mu = 0;
  double sigma = 0;
  std::vector<GaussPoint> grid;
  double sup_deviation = 0;
  double grid_deviation = 0;
};

inline GaussFit gauss_profile(long n, double half_width_sigmas, double step) {
  if (n < 10) throw error(errc::out_of_domain, "gauss_profile needs n >= 10");
  if (!(step > 0) || !(half_width_sigmas >= 0)) throw error(errc::invalid_argument, "need step > 0 and width >= 0");
  const DensityTable table = zeck_density(n);
  const MomentReport m = exact_moments(table, Convention::nonforced);
  GaussFit fit;
  fit.n = n;
  fit.mu = m.mean_float;
  fit.sigma = std::sqrt(m.variance_float);
  const long steps = static_cast<long>(std::floor(half_width_sigmas / step + 1e-9));
  for (long i = -steps; i <= steps; ++i) {
    GaussPoint pt;
    pt.x = static_cast<double>(i) * step;
    pt.k = std::lround(fit.mu + pt.x * fit.sigma);
    pt.lattice_x = (static_cast<double>(pt.k) - fit.mu) / fit.sigma;
    const double p = pt.k < 0 ? 0.0 : table.probability_float(static_cast<std::size_t>(pt.k));
    pt.scaled_density = fit.sigma * p;
    pt.normal_pdf = standard_normal_pdf(pt.x);
    fit.sup_deviation = std::max(fit.sup_deviation, std::abs(pt.scaled_density - standard_normal_pdf(pt.lattice_x)));
    fit.grid_deviation = std::max(fit.grid_deviation, std::abs(pt.scaled_density - pt.normal_pdf));
    fit.grid.push_back(pt);
  }
  return fit;
}

/// Density p_n(k) for every k, overlaid with the Gaussian of leading-order
/// mean n/(phi^2 + 1) and variance n/(5 sqrt 5).
struct Figure1 {
  long n = 0;
  double overlay_mean = 0;
  double overlay_variance = 0;
  MomentReport exact;
  struct Row {
    long k;
    double p;
    double normal;
  };
  std::vector<Row> rows;
};

inline Figure1 figure1(long n) {
  const DensityTable table = zeck_density(n);
  Figure1 out;
  out.n = n;
  out.overlay_mean = (constants::mean_slope() * QuadRat(n)).to_double();
  out.overlay_variance = (constants::variance_slope() * QuadRat(n)).to_double();
  out.exact = exact_moments(table, Convention::nonforced);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * out.overlay_variance);
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    const double d = static_cast<double>(k) - out.overlay_mean;
    out.rows.push_back({static_cast<long>(k), table.probability_float(k),
                        norm * std::exp(-d * d / (2.0 * out.overlay_variance))});
  }
  return out;
}

// --- Far-difference statistics --------------------------------------------

enum class FardiffSource { oracle, formula };

inline const char* source_name(FardiffSource s) { return s == FardiffSource::oracle ? "oracle" : "formula"; }

/// Joint moments of K_n (positive terms) and L_n (negative terms) for N
/// uniform on (S_{n-1}, S_n].
struct FardiffStats {
  long n = 0;
  FardiffSource source = FardiffSource::formula;
  BigInt population;
  Rational mean_K, mean_L, var_K, var_L, cov_KL;
  double mean_K_f = 0, mean_L_f = 0, var_K_f = 0, var_L_f = 0, cov_KL_f = 0;
  double corr_KL = 0;
  double cov_sum_diff = 0;   // Cov(K+L, K-L) = Var K - Var L
  double corr_sum_diff = 0;  // Corr(K+L, K-L)
};

inline FardiffStats fardiff_stats_from(long n, FardiffSource source,
                                       const std::map<std::pair<long, long>, BigInt>& table) {
  BigInt s0 = 0, sk = 0, sl = 0, skk = 0, sll = 0, skl = 0;
  for (const auto& [key, c] : table) {
    const BigInt k(key.first), l(key.second);
    s0 += c;
    sk += c * k;
    sl += c * l;
    skk += c * k * k;
    sll += c * l * l;
    skl += c * k * l;
  }
  if (s0 == 0) throw error(errc::out_of_domain, "empty joint table");
  FardiffStats out;
  out.n = n;
  out.source = source;
  out.population = s0;
  out.mean_K = Rational(sk, s0);
  out.mean_L = Rational(sl, s0);
  out.var_K = Rational(skk, s0) - out.mean_K * out.mean_K;
  out.var_L = Rational(sll, s0) - out.mean_L * out.mean_L;
  out.cov_KL = Rational(skl, s0) - out.mean_K * out.mean_L;
  out.mean_K_f = to_double(out.mean_K);
  out.mean_L_f = to_double(out.mean_L);
  out.var_K_f = to_double(out.var_K);
  out.var_L_f = to_double(out.var_L);
  out.cov_KL_f = to_double(out.cov_KL);
  if (out.var_K > 0 && out.var_L > 0) out.corr_KL = out.cov_KL_f / std::sqrt(out.var_K_f * out.var_L_f);
  out.cov_sum_diff = to_double(Rational(out.var_K - out.var_L));
  const Rational var_sum = out.var_K + out.var_L + 2 * out.cov_KL;
  const Rational var_diff = out.var_K + out.var_L - 2 * out.cov_KL;
  if (var_sum > 0 && var_diff > 0) {
    out.corr_sum_diff = out.cov_sum_diff / std::sqrt(to_double(var_sum) * to_double(var_diff));
  }
  return out;
}

inline FardiffStats fardiff_stats(long n, FardiffSource source) {
  if (n < 1) throw error(errc::out_of_domain, "fardiff_stats needs n >= 1");
  std::map<std::pair<long, long>, BigInt> table;
  if (source == FardiffSource::oracle) {
    for (const auto& [key, c] : empirical_joint(static_cast<std::uint32_t>(n))) {
      table.emplace(std::make_pair(static_cast<long>(key.first), static_cast<long>(key.second)), BigInt(c));
    }
  } else {
    table = joint_table(n).counts;
  }
  return fardiff_stats_from(n, source, table);
}

}  // namespace zeck
