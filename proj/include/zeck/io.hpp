#pragma once

// Text formats: PLRS specs, decomposition JSON, density/joint/profile CSV and
// report JSON. Exact rationals serialise as "p/q" strings, big integers as
// decimal strings, floats with a fixed number of significant digits.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zeck/bigint.hpp"
#include "zeck/combinatorics.hpp"
#include "zeck/decompose.hpp"
#include "zeck/error.hpp"
#include "zeck/gaussian.hpp"
#include "zeck/oracle.hpp"
#include "zeck/sequences.hpp"

namespace zeck {

using json = nlohmann::ordered_json;

inline constexpr int default_precision = 6;

inline std::string format_float(double x, int precision = default_precision) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

/// x rounded to `precision` significant digits, so JSON output stays short
/// and stable.
inline double round_sig(double x, int precision = default_precision) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_float(x, precision).c_str(), nullptr);
}

inline json float_json(double x, int precision) {
  if (!std::isfinite(x)) return format_float(x, precision);
  return round_sig(x, precision);
}

// --- PLRS specs --------------------------------------------------------------

/// Accepts "2 3 1" or {"coeffs":[2,3,1]}.
inline PlrsSpec parse_plrs(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw error(errc::empty_coeffs, "empty coefficient list");
  std::vector<std::int64_t> coeffs;
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw error(errc::parse_error, std::string("bad spec JSON: ") + e.what());
    }
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
      throw error(errc::parse_error, "spec JSON needs a \"coeffs\" array");
    }
    for (const auto& c : doc["coeffs"]) {
      if (!c.is_number_integer()) throw error(errc::parse_error, "coefficients must be integers");
      coeffs.push_back(c.get<std::int64_t>());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      const BigInt v = parse_bigint(token);
      if (v < 0) throw error(errc::negative_coeff, "coefficient " + token + " is negative");
      if (v > BigInt(INT64_MAX)) throw error(errc::too_large, "coefficient " + token + " is too large");
      coeffs.push_back(v.convert_to<std::int64_t>());
    }
  }
  return make_plrs(coeffs);
}

inline std::string spec_to_json(const PlrsSpec& spec) {
  json out;
  out["coeffs"] = std::vector<std::uint32_t>(spec.coeffs().begin(), spec.coeffs().end());
  return out.dump();
}

// --- decompositions ------------------------------------------------------------

inline json to_json(const Decomposition& dec) {
  json out;
  out["top_index"] = dec.top_index;
  out["coeffs"] = dec.coeffs;
  return out;
}

inline Decomposition decomposition_from_json(const PlrsSpec& spec, const json& doc) {
  try {
    Decomposition dec{spec, doc.at("top_index").get<std::size_t>(), doc.at("coeffs").get<std::vector<std::uint32_t>>()};
    if (dec.coeffs.size() != dec.top_index) {
      throw error(errc::parse_error, "coeffs must have exactly top_index entries");
    }
    return dec;
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("bad decomposition JSON: ") + e.what());
  }
}

inline json to_json(const SignedDecomposition& sd) {
  json out = json::array();
  for (const auto& t : sd.terms) out.push_back({{"index", t.index}, {"sign", t.sign}});
  return out;
}

inline SignedDecomposition signed_decomposition_from_json(const json& doc) {
  if (!doc.is_array()) throw error(errc::parse_error, "signed decomposition must be a JSON list");
  SignedDecomposition sd;
  try {
    for (const auto& item : doc) {
      const int sign = item.at("sign").get<int>();
      if (sign != 1 && sign != -1) throw error(errc::parse_error, "sign must be 1 or -1");
      sd.terms.push_back({item.at("index").get<std::uint32_t>(), sign});
    }
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("bad signed decomposition JSON: ") + e.what());
  }
  return sd;
}

// --- tables ------------------------------------------------------------------

inline std::string density_csv(const DensityTable& table, int precision = default_precision) {
  std::string out = "n,k,count,prob_num,prob_den,prob_float\n";
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    const Rational p = table.probability(k);
    out += std::to_string(table.n) + ',' + std::to_string(k) + ',' + table.counts[k].str() + ',' +
           boost::multiprecision::numerator(p).str() + ',' + boost::multiprecision::denominator(p).str() + ',' +
           format_float(to_double(p), precision) + '\n';
  }
  return out;
}

inline std::string joint_csv(const JointTable& table) {
  std::string out = "n,k,l,count\n";
  for (const auto& [key, c] : table.counts) {
    out += std::to_string(table.n) + ',' + std::to_string(key.first) + ',' + std::to_string(key.second) + ',' +
           c.str() + '\n';
  }
  return out;
}

inline std::string gauss_csv(const GaussFit& fit, int precision = default_precision) {
  std::string out = "x,scaled_density,normal_pdf\n";
  for (const auto& pt : fit.grid) {
    out += format_float(pt.x, precision) + ',' + format_float(pt.scaled_density, precision) + ',' +
           format_float(pt.normal_pdf, precision) + '\n';
  }
  return out;
}

inline std::string figure1_csv(const Figure1& fig, int precision = default_precision) {
  std::string out = "k,p,normal\n";
  for (const auto& row : fig.rows) {
    out += std::to_string(row.k) + ',' + format_float(row.p, precision) + ',' + format_float(row.normal, precision) +
           '\n';
  }
  return out;
}

// --- reports -----------------------------------------------------------------

inline json to_json(const MomentReport& m, int precision = default_precision) {
  json out;
  out["n"] = m.n;
  out["convention"] = convention_name(m.convention);
  out["mean"] = to_string(m.mean);
  out["mean_float"] = float_json(m.mean_float, precision);
  out["variance"] = to_string(m.variance);
  out["variance_float"] = float_json(m.variance_float, precision);
  out["skewness"] = m.skewness ? float_json(*m.skewness, precision) : json(nullptr);
  out["excess_kurtosis"] = m.excess_kurtosis ? float_json(*m.excess_kurtosis, precision) : json(nullptr);
  return out;
}

inline json to_json(const StirlingFactors& s, int precision = default_precision) {
  json out;
  out["n"] = s.n;
  out["k"] = s.k;
  out["N_factor"] = float_json(s.N_factor, precision);
  out["S_factor"] = float_json(s.S_factor, precision);
  out["log_S_factor"] = float_json(s.log_S_factor, precision);
  out["f_value"] = float_json(s.f_value, precision);
  out["exact_density"] = float_json(s.exact, precision);
  out["ratio"] = float_json(s.ratio, precision);
  out["x"] = float_json(s.x, precision);
  out["u"] = float_json(s.u, precision);
  return out;
}

inline json to_json(const GaussFit& fit, int precision = default_precision) {
  json out;
  out["n"] = fit.n;
  out["mu"] = float_json(fit.mu, precision);
  out["sigma"] = float_json(fit.sigma, precision);
  out["sup_deviation"] = float_json(fit.sup_deviation, precision);
  out["grid_deviation"] = float_json(fit.grid_deviation, precision);
  return out;
}

/// Raw moments plus the observed gaps to the asymptotic constants, which
/// carry o(1) corrections at any enumerable n.
inline json to_json(const FardiffStats& s, int precision = default_precision) {
  json out;
  out["n"] = s.n;
  out["source"] = source_name(s.source);
  out["population"] = s.population.str();
  out["mean_K"] = to_string(s.mean_K);
  out["mean_L"] = to_string(s.mean_L);
  out["var_K"] = to_string(s.var_K);
  out["var_L"] = to_string(s.var_L);
  out["cov_KL"] = to_string(s.cov_KL);
  out["mean_K_float"] = float_json(s.mean_K_f, precision);
  out["mean_L_float"] = float_json(s.mean_L_f, precision);
  out["var_K_float"] = float_json(s.var_K_f, precision);
  out["var_L_float"] = float_json(s.var_L_f, precision);
  out["cov_KL_float"] = float_json(s.cov_KL_f, precision);
  out["corr_KL"] = float_json(s.corr_KL, precision);
  out["cov_sum_diff"] = float_json(s.cov_sum_diff, precision);
  out["corr_sum_diff"] = float_json(s.corr_sum_diff, precision);

  const double nd = static_cast<double>(s.n);
  json ref;
  ref["mean_gap"] = float_json(constants::fardiff_mean_gap().to_double(), precision);
  ref["mean_gap_observed"] = float_json(s.mean_K_f - s.mean_L_f, precision);
  ref["mean_K_offset"] = float_json(constants::fardiff_mean_offset().to_double(), precision);
  ref["mean_K_offset_observed"] = float_json(s.mean_K_f - nd / 10.0, precision);
  ref["variance_slope"] = float_json(constants::fardiff_variance_slope().to_double(), precision);
  ref["var_K_over_n_observed"] = float_json(s.var_K_f / nd, precision);
  ref["corr_KL"] = float_json(constants::fardiff_correlation().to_double(), precision);
  out["asymptotic_reference"] = ref;
  return out;
}

inline json to_json(const BijectionReport& r) {
  json out;
  out["spec"] = std::vector<std::uint32_t>(r.spec.coeffs().begin(), r.spec.coeffs().end());
  out["n"] = r.n;
  out["interval_size"] = r.interval_size.str();
  out["passed"] = r.passed;
  json ces = json::array();
  for (const auto& ce : r.counterexamples) {
    ces.push_back({{"N", ce.value.str()}, {"representations", ce.representations}, {"decompose_agrees", ce.decompose_agrees}});
  }
  out["counterexamples"] = ces;
  return out;
}

}  // namespace zeck
