#pragma once

// Command-line front end. run() takes the arguments without the program name
// and writes to the given streams, so tests can drive it in-process.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeck/zeck.hpp"

namespace zeck::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verify_failed = 2;

struct CliConfig {
  std::string coeffs;
  std::string spec_file;
  std::string n, k, l, n_value, m;
  std::string out;
  std::string format;
  int precision = default_precision;
  bool empirical = false;
  bool all = false;
  std::string convention = "nonforced";
  std::string source = "formula";
  double width = 4.0;
  double step = 0.1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long parse_index(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  BigInt v;
  try {
    v = parse_bigint(text);
  } catch (const error&) {
    throw UsageError(std::string(flag) + " expects a decimal integer, got '" + text + "'");
  }
  if (v < 0 || v > BigInt(1'000'000'000)) throw UsageError(std::string(flag) + " is out of range: " + text);
  return v.convert_to<long>();
}

inline BigInt parse_value(const std::string& text) {
  if (text.empty()) throw UsageError("--n-value is required");
  try {
    return parse_bigint(text);
  } catch (const error&) {
    throw UsageError("--n-value expects a decimal integer, got '" + text + "'");
  }
}

inline PlrsSpec load_spec(const CliConfig& cfg) {
  if (!cfg.coeffs.empty()) return parse_plrs(cfg.coeffs);
  if (!cfg.spec_file.empty()) {
    std::ifstream in(cfg.spec_file);
    if (!in) throw UsageError("cannot read spec file " + cfg.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_plrs(buf.str());
  }
  return fibonacci_spec();
}

inline bool want_json(const CliConfig& cfg, bool json_by_default) {
  if (cfg.format.empty()) return json_by_default;
  return cfg.format == "json";
}

inline json decomposition_json(const SequenceCache& cache, const Decomposition& dec) {
  json out = to_json(dec);
  out["indices"] = dec.indices();
  out["value"] = reconstruct(cache, dec).str();
  out["summands"] = summand_count(dec);
  return out;
}

/// Histogram of K (summand counts) turned into a table over k = K - 1.
inline DensityTable histogram_table(long n, const std::map<std::uint64_t, std::uint64_t>& hist) {
  DensityTable table;
  table.n = n;
  table.normalizer = 0;
  for (const auto& [count, weight] : hist) {
    const std::size_t k = count - 1;
    if (table.counts.size() <= k) table.counts.resize(k + 1, BigInt(0));
    table.counts[k] = weight;
    table.normalizer += weight;
  }
  return table;
}

// --- subcommands ---------------------------------------------------------------

inline std::string cmd_seq(const CliConfig& cfg) {
  const PlrsSpec spec = load_spec(cfg);
  const long m = parse_index(cfg.m.empty() ? cfg.n : cfg.m, "--m");
  if (m < 1) throw UsageError("--m must be at least 1");
  const SequenceCache cache = terms(spec, static_cast<std::size_t>(m));
  if (want_json(cfg, false)) {
    json out;
    out["coeffs"] = std::vector<std::uint32_t>(spec.coeffs().begin(), spec.coeffs().end());
    json values = json::array();
    for (long i = 1; i <= m; ++i) values.push_back(cache.term(static_cast<std::size_t>(i)).str());
    out["terms"] = values;
    return out.dump() + '\n';
  }
  std::string out = "n,H_n\n";
  for (long i = 1; i <= m; ++i) out += std::to_string(i) + ',' + cache.term(static_cast<std::size_t>(i)).str() + '\n';
  return out;
}

inline std::string cmd_decompose(const CliConfig& cfg) {
  const PlrsSpec spec = load_spec(cfg);
  const SequenceCache cache(spec);
  const Decomposition dec = decompose(cache, parse_value(cfg.n_value));
  return decomposition_json(cache, dec).dump() + '\n';
}

inline std::string cmd_zeck(const CliConfig& cfg) {
  const BigInt value = parse_value(cfg.n_value);
  const auto indices = zeckendorf(value);
  if (want_json(cfg, true)) {
    json out;
    out["N"] = value.str();
    out["indices"] = indices;
    json values = json::array();
    for (auto i : indices) values.push_back(fib(static_cast<long>(i)).str());
    out["values"] = values;
    return out.dump() + '\n';
  }
  std::string out = "index,value\n";
  for (auto i : indices) out += std::to_string(i) + ',' + fib(static_cast<long>(i)).str() + '\n';
  return out;
}

inline std::string cmd_fardiff(const CliConfig& cfg) {
  const SignedDecomposition sd = fardiff(parse_value(cfg.n_value));
  if (cfg.format == "json") return to_json(sd).dump() + '\n';
  return sd.to_string() + '\n';
}

inline std::string cmd_density(const CliConfig& cfg) {
  const long n = parse_index(cfg.n, "--n");
  DensityTable table;
  if (cfg.empirical) {
    table = histogram_table(n, empirical_density(load_spec(cfg), static_cast<std::size_t>(n)));
  } else {
    if (!load_spec(cfg).is_fibonacci()) throw UsageError("the density formula is Fibonacci-only; add --empirical");
    table = zeck_density(n);
  }
  if (want_json(cfg, false)) {
    json out;
    out["n"] = n;
    out["normalizer"] = table.normalizer.str();
    json rows = json::array();
    for (std::size_t k = 0; k < table.counts.size(); ++k) {
      rows.push_back({{"k", k}, {"count", table.counts[k].str()}, {"prob", to_string(table.probability(k))}});
    }
    out["counts"] = rows;
    return out.dump() + '\n';
  }
  return density_csv(table, cfg.precision);
}

inline std::string cmd_joint(const CliConfig& cfg) {
  const long n = parse_index(cfg.n, "--n");
  JointTable table;
  if (cfg.empirical) {
    table.n = n;
    table.normalizer = fardiff_S(n) - fardiff_S(n - 1);
    for (const auto& [key, c] : empirical_joint(static_cast<std::uint32_t>(n))) {
      table.counts.emplace(std::make_pair(static_cast<long>(key.first), static_cast<long>(key.second)), BigInt(c));
    }
  } else {
    table = joint_table(n);
  }
  if (!cfg.k.empty() || !cfg.l.empty()) {
    const BigInt c = table.count(parse_index(cfg.k, "--k"), parse_index(cfg.l, "--l"));
    return c.str() + '\n';
  }
  if (want_json(cfg, false)) {
    json out;
    out["n"] = n;
    out["normalizer"] = table.normalizer.str();
    json rows = json::array();
    for (const auto& [key, c] : table.counts) rows.push_back({{"k", key.first}, {"l", key.second}, {"count", c.str()}});
    out["counts"] = rows;
    return out.dump() + '\n';
  }
  return joint_csv(table);
}

inline Convention parse_convention(const std::string& s) {
  return s == "forced" ? Convention::forced : Convention::nonforced;
}

inline std::string cmd_moments(const CliConfig& cfg) {
  const long n = parse_index(cfg.n, "--n");
  const Convention conv = parse_convention(cfg.convention);
  MomentReport report;
  if (cfg.empirical) {
    report = exact_moments(n, empirical_density(load_spec(cfg), static_cast<std::size_t>(n)), conv);
  } else {
    if (!load_spec(cfg).is_fibonacci()) throw UsageError("the density formula is Fibonacci-only; add --empirical");
    report = exact_moments(zeck_density(n), conv);
  }
  json out = to_json(report, cfg.precision);
  if (!cfg.empirical && conv == Convention::nonforced) {
    out["mean_closed"] = float_json(mean_closed(n).to_double(), cfg.precision);
    out["variance_closed"] = float_json(variance_closed(n).to_double(), cfg.precision);
  }
  return out.dump() + '\n';
}

inline std::string cmd_gauss(const CliConfig& cfg) {
  const GaussFit fit = gauss_profile(parse_index(cfg.n, "--n"), cfg.width, cfg.step);
  if (want_json(cfg, false)) return to_json(fit, cfg.precision).dump() + '\n';
  return gauss_csv(fit, cfg.precision);
}

inline std::string cmd_stirling(const CliConfig& cfg) {
  const StirlingFactors s = stirling_f(parse_index(cfg.n, "--n"), parse_index(cfg.k, "--k"));
  return to_json(s, cfg.precision).dump() + '\n';
}

inline std::string cmd_fardiff_stats(const CliConfig& cfg) {
  const FardiffSource source = cfg.source == "oracle" ? FardiffSource::oracle : FardiffSource::formula;
  return to_json(fardiff_stats(parse_index(cfg.n, "--n"), source), cfg.precision).dump() + '\n';
}

inline std::string cmd_figure1(const CliConfig& cfg) {
  const Figure1 fig = figure1(cfg.n.empty() ? 2010 : parse_index(cfg.n, "--n"));
  if (want_json(cfg, false)) {
    json out;
    out["n"] = fig.n;
    out["overlay_mean"] = float_json(fig.overlay_mean, cfg.precision);
    out["overlay_variance"] = float_json(fig.overlay_variance, cfg.precision);
    out["exact"] = to_json(fig.exact, cfg.precision);
    return out.dump() + '\n';
  }
  return figure1_csv(fig, cfg.precision);
}

/// The specs exercised by `verify --all`.
inline std::vector<PlrsSpec> verification_matrix() {
  return {make_plrs({1, 1}), make_plrs({2, 3, 1}), make_plrs({2}), make_plrs({3}), make_plrs({10}),
          make_plrs({1, 0, 1})};
}

inline constexpr std::uint64_t verify_interval_limit = 1'000'000;

struct CheckLine {
  bool passed;
  std::string text;
};

inline std::vector<CheckLine> verify_all() {
  std::vector<CheckLine> lines;
  for (const PlrsSpec& spec : verification_matrix()) {
    const SequenceCache cache(spec);
    std::size_t n = 1;
    std::size_t failures = 0;
    for (; cache.term(n + 1) - cache.term(n) <= verify_interval_limit; ++n) {
      if (!verify_bijection(cache, n).passed) ++failures;
    }
    lines.push_back({failures == 0, "bijection [" + spec.to_string() + "] n=1.." + std::to_string(n - 1) + ": " +
                                        std::to_string(failures) + " failing intervals"});
  }

  bool density_ok = true;
  for (long n = 1; n <= 25; ++n) {
    const auto table = zeck_density(n);
    const auto hist = empirical_density(fibonacci_spec(), static_cast<std::size_t>(n));
    if (hist.size() != table.counts.size()) density_ok = false;
    for (const auto& [count, weight] : hist) {
      if (count == 0 || count > table.counts.size() || table.counts[count - 1] != weight) density_ok = false;
    }
  }
  lines.push_back({density_ok, "density formula vs enumeration, n=1..25"});

  bool fardiff_ok = true;
  try {
    const FardiffEnumeration all = enumerate_fardiff(25);
    fardiff_ok = all.gap_free();
    for (std::uint64_t v = 0; fardiff_ok && v < all.by_value.size(); ++v) {
      fardiff_ok = fardiff(BigInt(v)) == *all.by_value[v];
    }
  } catch (const error&) {
    fardiff_ok = false;
  }
  lines.push_back({fardiff_ok, "far-difference uniqueness and fardiff() agreement on [0, S_25]"});

  bool joint_ok = true;
  for (long n = 1; n <= 20; ++n) {
    const JointTable table = joint_table(n);
    std::map<std::pair<long, long>, BigInt> oracle;
    for (const auto& [key, c] : empirical_joint(static_cast<std::uint32_t>(n))) {
      oracle.emplace(std::make_pair(static_cast<long>(key.first), static_cast<long>(key.second)), BigInt(c));
    }
    if (oracle != table.counts) joint_ok = false;
  }
  lines.push_back({joint_ok, "joint count formula vs enumeration, n=1..20"});
  return lines;
}

inline int cmd_verify(const CliConfig& cfg, std::string& output) {
  if (cfg.all) {
    bool ok = true;
    for (const auto& line : verify_all()) {
      output += (line.passed ? "PASS " : "FAIL ") + line.text + '\n';
      ok = ok && line.passed;
    }
    return ok ? exit_ok : exit_verify_failed;
  }
  const BijectionReport report = verify_bijection(load_spec(cfg), static_cast<std::size_t>(parse_index(cfg.n, "--n")));
  output = to_json(report).dump() + '\n';
  return report.passed ? exit_ok : exit_verify_failed;
}

inline void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Zeckendorf decompositions, far-difference representations and summand statistics", "zeck"};
  app.require_subcommand(1);

  const auto spec_opts = [&](CLI::App* sub) {
    auto* c = sub->add_option("--coeffs", cfg.coeffs, "recurrence coefficients, e.g. \"2 3 1\" (default Fibonacci)");
    auto* f = sub->add_option("--spec-file", cfg.spec_file, "file holding the coefficients as text or JSON");
    c->excludes(f);
  };
  const auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--precision", cfg.precision, "significant digits for floats")->check(CLI::Range(1, 17));
  };

  auto* seq = app.add_subcommand("seq", "first m terms of a recurrence");
  spec_opts(seq);
  seq->add_option("--m", cfg.m, "number of terms");
  seq->add_option("--n", cfg.n, "alias for --m");
  format_opt(seq);

  auto* dec = app.add_subcommand("decompose", "legal decomposition of N");
  spec_opts(dec);
  dec->add_option("--n-value", cfg.n_value, "the integer N")->required();

  auto* zk = app.add_subcommand("zeck", "Zeckendorf decomposition of N");
  zk->add_option("--n-value", cfg.n_value, "the integer N")->required();
  format_opt(zk);

  auto* fd = app.add_subcommand("fardiff", "far-difference representation of N");
  fd->add_option("--n-value", cfg.n_value, "the integer N")->required();
  fd->add_option("--format", cfg.format, "text (default) or json")->check(CLI::IsMember({"text", "json"}));

  auto* dens = app.add_subcommand("density", "summand-count density on [H_n, H_{n+1})");
  spec_opts(dens);
  dens->add_option("--n", cfg.n, "interval index")->required();
  dens->add_flag("--empirical", cfg.empirical, "count by enumeration instead of the formula");
  format_opt(dens);

  auto* joint = app.add_subcommand("joint", "far-difference (positive, negative) counts on (S_{n-1}, S_n]");
  joint->add_option("--n", cfg.n, "interval index")->required();
  joint->add_option("--k", cfg.k, "positive-term count (single cell)");
  joint->add_option("--l", cfg.l, "negative-term count (single cell)");
  joint->add_flag("--empirical", cfg.empirical, "count by enumeration instead of the formula");
  format_opt(joint);

  auto* mom = app.add_subcommand("moments", "exact moments of the summand count");
  spec_opts(mom);
  mom->add_option("--n", cfg.n, "interval index")->required();
  mom->add_option("--convention", cfg.convention, "forced (K_n) or nonforced (K_n - 1)")
      ->check(CLI::IsMember({"forced", "nonforced"}));
  mom->add_flag("--empirical", cfg.empirical, "count by enumeration instead of the formula");

  auto* gauss = app.add_subcommand("gauss", "standardised density against the normal");
  gauss->add_option("--n", cfg.n, "interval index")->required();
  gauss->add_option("--width", cfg.width, "half width of the grid in standard deviations");
  gauss->add_option("--step", cfg.step, "grid step");
  format_opt(gauss);

  auto* st = app.add_subcommand("stirling", "Stirling factorisation of the density");
  st->add_option("--n", cfg.n, "n")->required();
  st->add_option("--k", cfg.k, "k")->required();

  auto* fs = app.add_subcommand("fardiff-stats", "joint moments of positive and negative far-difference terms");
  fs->add_option("--n", cfg.n, "interval index")->required();
  fs->add_option("--source", cfg.source, "oracle or formula")->check(CLI::IsMember({"oracle", "formula"}));

  auto* ver = app.add_subcommand("verify", "exhaustive uniqueness checks");
  spec_opts(ver);
  ver->add_option("--n", cfg.n, "interval index");
  ver->add_flag("--all", cfg.all, "run the full verification matrix");

  auto* fig = app.add_subcommand("figure1", "density at n with its Gaussian overlay");
  fig->add_option("--n", cfg.n, "interval index (default 2010)");
  format_opt(fig);

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    std::string text;
    int code = exit_ok;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "seq") text = detail::cmd_seq(cfg);
    else if (name == "decompose") text = detail::cmd_decompose(cfg);
    else if (name == "zeck") text = detail::cmd_zeck(cfg);
    else if (name == "fardiff") text = detail::cmd_fardiff(cfg);
    else if (name == "density") text = detail::cmd_density(cfg);
    else if (name == "joint") text = detail::cmd_joint(cfg);
    else if (name == "moments") text = detail::cmd_moments(cfg);
    else if (name == "gauss") text = detail::cmd_gauss(cfg);
    else if (name == "stirling") text = detail::cmd_stirling(cfg);
    else if (name == "fardiff-stats") text = detail::cmd_fardiff_stats(cfg);
    else if (name == "verify") code = detail::cmd_verify(cfg, text);
    else if (name == "figure1") text = detail::cmd_figure1(cfg);
    detail::emit(cfg, text, out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_usage;
}

}  // namespace zeck::cli
