#include "cli.hpp"

#include "ggp/moments.hpp"
#include "ggp/numeric.hpp"
#include "ggp/pairings.hpp"
#include "ggp/permgroup.hpp"
#include "ggp/randmat.hpp"
#include "ggp/verify.hpp"
#include "ggp/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ggp::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  std::string output;
  int threads = 0;
  int max_n = EnumerationLimits{}.max_n;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand produces: a flat table for CSV, a document for JSON.
struct Report {
  Table table;
  Json json;
  bool passed = true;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_csv(std::ostream& out, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

// 15 significant digits, or null when not finite.
Json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_real(x));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Report cmd_sequences(const std::string& which, int max, const EnumerationLimits& limits, const ExecConfig& exec) {
  if (max < 1) throw UsageError("--max must be >= 1");
  require_within_cap(max, limits);
  Report r;
  r.table.header = {"n", "points", "value", "check", "agree"};
  Json rows = Json::array();
  Json values = Json::array();
  const auto riordan = riordan_connected(max);
  const auto limit = free_convolve(semicircle_moments(max), gaussian_moments(max), max);
  for (int n = 1; n <= max; ++n) {
    const auto dist = statistic_distribution(n, exec, limits);
    const auto un = static_cast<unsigned>(n);
    std::string value, check;
    if (which == "pairings") {
      value = to_string(double_factorial_odd(un));
      check = to_string(dist.total());
    } else if (which == "catalan") {
      value = to_string(catalan(un));
      check = to_string(dist.non_crossing());
    } else if (which == "connected") {
      value = to_string(riordan[static_cast<std::size_t>(n - 1)]);
      check = to_string(dist.connected());
    } else if (which == "singletons") {
      value = to_string(total_singletons_closed_form(n));
      check = to_string(dist.singleton_total());
    } else {
      value = to_string(limit.at(n));
      check = to_string(weighted_sum(WeightSpec::singleton_count_power(Rational(2)), dist));
    }
    const bool agree = value == check;
    r.passed = r.passed && agree;
    r.table.rows.push_back({std::to_string(n), std::to_string(2 * n), value, check, yes_no(agree)});
    rows.push_back({{"n", n}, {"points", 2 * n}, {"value", value}, {"check", check}, {"agree", agree}});
    values.push_back(value);
  }
  r.json = {{"command", "sequences"}, {"which", which}, {"max", max}, {"values", values}, {"rows", rows},
            {"passed", r.passed}};
  return r;
}

WeightSpec make_spec(const std::string& weight, const Rational& param) {
  if (weight == "const") return WeightSpec::constant();
  if (weight == "qcr") return WeightSpec::crossing_power(param);
  if (weight == "scc") return WeightSpec::component_power(param);
  if (weight == "bH") return WeightSpec::singleton_h_power(param);
  return WeightSpec::singleton_count_power(param);
}

Rational parse_param(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Report cmd_moments(const std::string& weight, const std::string& param_text, int N,
                   const std::optional<std::string>& mix_text, const EnumerationLimits& limits,
                   const ExecConfig& exec) {
  if (N < 1) throw UsageError("--N must be >= 1");
  const Rational param = parse_param("--param", param_text);
  std::optional<Rational> mix;
  if (mix_text) mix = parse_param("--mix", *mix_text);
  const auto spec = make_spec(weight, param);
  require_within_cap(N, limits);

  const auto m = moments_of_weight(spec, N, limits, exec);
  const auto r = cumulants_from_connected(spec, N, limits, exec);
  const bool lemma_agrees = moments_from_cumulants(r) == m;
  std::optional<MuBMoments> mu;
  if (mix) mu = mu_b_moments(spec, *mix, N, limits, exec);

  Report rep;
  rep.passed = lemma_agrees && (!mu || mu->weighted == mu->convolution);
  rep.table.header = {"n", "points", "moment", "moment_decimal", "cumulant"};
  if (mu) {
    for (const char* h : {"mu_b", "mu_b_decimal", "mu_b_convolution", "agree"}) rep.table.header.emplace_back(h);
  }
  Json rows = Json::array();
  for (int n = 1; n <= N; ++n) {
    std::vector<std::string> row = {std::to_string(n), std::to_string(2 * n), to_string(m.at(n)),
                                    format_real(to_double(m.at(n))), to_string(r.at(n))};
    Json j = {{"n", n},
              {"points", 2 * n},
              {"moment", to_string(m.at(n))},
              {"moment_decimal", real(to_double(m.at(n)))},
              {"cumulant", to_string(r.at(n))}};
    if (mu) {
      const auto& a = mu->weighted.at(n);
      const auto& b = mu->convolution.at(n);
      row.insert(row.end(), {to_string(a), format_real(to_double(a)), to_string(b), yes_no(a == b)});
      j["mu_b"] = to_string(a);
      j["mu_b_decimal"] = real(to_double(a));
      j["mu_b_convolution"] = to_string(b);
      j["agree"] = a == b;
    }
    rep.table.rows.push_back(std::move(row));
    rows.push_back(std::move(j));
  }
  rep.json = {{"command", "moments"}, {"weight", spec.str()}, {"N", N}};
  if (mix) rep.json["mix"] = to_string(*mix);
  rep.json["rows"] = rows;
  rep.json["cumulants_reproduce_moments"] = lemma_agrees;
  rep.json["passed"] = rep.passed;
  return rep;
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("--seed: expected a non-negative 64-bit integer, got '" + text + "'");
  }
}

Report cmd_randmat(const McConfig& cfg, const std::string& histogram_path, int bins, const ExecConfig& exec) {
  validate(cfg);
  if (bins < 1) throw UsageError("--bins must be >= 1");
  std::optional<std::ofstream> hist_out;
  if (!histogram_path.empty()) {
    hist_out.emplace(histogram_path);
    if (!*hist_out) throw UsageError("cannot open histogram file '" + histogram_path + "'");
  }

  const auto report = run_mc(cfg, exec);
  Report rep;
  rep.passed = report.passed;
  rep.table.header = {"k", "mean", "std_error", "target", "z", "passed"};
  Json moments = Json::array();
  for (const auto& e : report.moments) {
    rep.table.rows.push_back({std::to_string(e.k), format_real(e.mean), format_real(e.std_error), format_real(e.target),
                              e.z ? format_real(*e.z) : "", yes_no(e.passed)});
    moments.push_back({{"k", e.k},
                       {"mean", real(e.mean)},
                       {"std_error", real(e.std_error)},
                       {"target", real(e.target)},
                       {"z", e.z ? real(*e.z) : Json(nullptr)},
                       {"passed", e.passed}});
  }
  rep.json = {{"command", "randmat"},
              {"config",
               {{"n", cfg.n}, {"trials", cfg.trials}, {"kmax", cfg.kmax}, {"dist", to_string(cfg.law)}, {"seed", cfg.seed}}},
              {"moments", moments},
              {"passed", rep.passed}};

  if (hist_out) {
    // Spectrum of the first trial's matrix, scaled by 1/sqrt(n).
    const auto m = sample_markov(cfg.n, cfg.law, trial_seed(cfg.seed, 0));
    auto eigs = spectrum(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n));
    for (double& x : eigs) x *= scale;
    write_histogram_csv(*hist_out, histogram(eigs, bins));
    rep.json["histogram"] = histogram_path;
  }
  return rep;
}

Report cmd_permcheck(int n, double b, double x, double tol, const ExecConfig& exec) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (n > kMaxKernelDegree)
    throw UsageError("--n " + std::to_string(n) + " exceeds the group degree cap " + std::to_string(kMaxKernelDegree) +
                     " (Gram matrices have n! rows)");
  if (!(tol > 0.0)) throw UsageError("--tol must be > 0");
  if (!(b >= 0.0) || !std::isfinite(b)) throw UsageError("--b must be a finite number >= 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw UsageError("--x must be a finite number >= 0");

  Report rep;
  rep.table.header = {"check", "passed", "checked", "min_eigenvalue", "threshold", "detail"};
  Json checks = Json::array();
  auto group_row = [&](const std::string& name, const GroupCheck& g) {
    rep.passed = rep.passed && g.passed;
    rep.table.rows.push_back({name, yes_no(g.passed), std::to_string(g.checked), "", "", g.detail});
    checks.push_back({{"check", name}, {"passed", g.passed}, {"checked", g.checked}, {"detail", g.detail}});
  };
  auto psd_row = [&](const std::string& name, const PsdReport& p) {
    rep.passed = rep.passed && p.psd;
    rep.table.rows.push_back({name, yes_no(p.psd), "", format_real(p.min_eigenvalue), format_real(p.threshold), ""});
    checks.push_back({{"check", name},
                      {"passed", p.psd},
                      {"min_eigenvalue", real(p.min_eigenvalue)},
                      {"threshold", real(p.threshold)}});
  };

  group_row("young_subgroup_identity", young_subgroup_identity(n));
  group_row("embedding_consistency", embedding_consistency(n));
  group_row("restriction_stability", restriction_stability(n));
  group_row("delta_subadditivity", delta_subadditivity(n));
  psd_row("psd_h", check_positive_definite(n, [](const Permutation& s) { return double(isolated_fixed_points(s)); },
                                           tol, exec));
  psd_row("psd_b_pow_h",
          check_positive_definite(n, [b](const Permutation& s) { return std::pow(b, isolated_fixed_points(s)); }, tol,
                                  exec));
  psd_row("psd_exp_minus_xH",
          check_positive_definite(n, [x](const Permutation& s) { return std::exp(-x * big_h(s)); }, tol, exec));
  const auto cnd = check_cnd(n, tol, exec);
  psd_row("cnd_centered", cnd.centered);
  for (const auto& [xi, p] : cnd.exponentials) psd_row("cnd_exp_" + format_real(xi), p);
  const auto metric = metric_checks(n);
  rep.passed = rep.passed && metric.passed;
  rep.table.rows.push_back({"metric", yes_no(metric.passed), std::to_string(metric.triples), "", "", metric.detail});
  checks.push_back({{"check", "metric"},
                    {"passed", metric.passed},
                    {"checked", metric.triples},
                    {"exhaustive", metric.exhaustive},
                    {"detail", metric.detail}});

  rep.json = {{"command", "permcheck"}, {"n", n}, {"b", real(b)}, {"x", real(x)}, {"tol", real(tol)},
              {"checks", checks},       {"passed", rep.passed}};
  return rep;
}

Report cmd_verify(const std::string& level_name, const ExecConfig& exec, std::ostream& err) {
  const auto level = level_name == "full" ? VerifyLevel::full : VerifyLevel::quick;
  const auto results = run_verification(level, exec, [&](const CheckResult& c) {
    err << c.id << ' ' << (c.ok() ? "PASS" : "FAIL") << " (" << format_real(c.seconds) << " s)\n" << std::flush;
  });
  Report rep;
  rep.table.header = {"id", "title", "passed", "within_budget", "seconds", "budget_seconds", "detail"};
  Json checks = Json::array();
  for (const auto& c : results) {
    rep.passed = rep.passed && c.ok();
    rep.table.rows.push_back({c.id, c.title, yes_no(c.passed), yes_no(c.within_budget), format_real(c.seconds),
                              format_real(c.budget_seconds), c.detail});
    checks.push_back({{"id", c.id},
                      {"title", c.title},
                      {"passed", c.passed},
                      {"within_budget", c.within_budget},
                      {"seconds", real(c.seconds)},
                      {"budget_seconds", real(c.budget_seconds)},
                      {"detail", c.detail}});
  }
  rep.json = {{"command", "verify"}, {"level", level_name}, {"checks", checks}, {"passed", rep.passed}};
  return rep;
}

int default_threads() {
  const char* env = std::getenv(kThreadsEnv);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) throw UsageError(std::string(kThreadsEnv) + ": invalid thread count '" + env + "'");
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common common;
  try {
    common.threads = default_threads();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Pair-partition combinatorics, generalized Gaussian moments and permutation-group checks", "ggp"};
  app.fallthrough();
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output,-o", common.output, "Write output to this file instead of standard output");
  app.add_option("--threads", common.threads,
                 std::string("Worker threads (0 = OpenMP default; env ") + kThreadsEnv + ")")
      ->check(CLI::Range(0, 4096))
      ->capture_default_str();
  app.add_option("--max-n", common.max_n, "Enumeration cap on n for P2(2n)")
      ->check(CLI::Range(1, kHardMaxN))
      ->capture_default_str();

  auto* seq = app.add_subcommand("sequences", "Integer sequences, each computed two ways");
  std::string which;
  int seq_max = 0;
  seq->add_option("--which", which)->required()->check(
      CLI::IsMember({"pairings", "catalan", "connected", "singletons", "moments"}));
  seq->add_option("--max", seq_max, "Largest n")->required();

  auto* mom = app.add_subcommand("moments", "Moments and free cumulants of a weighted Gaussian");
  std::string weight = "const";
  std::string param = "1";
  int N = 4;
  std::optional<std::string> mix;
  mom->add_option("--weight", weight)->check(CLI::IsMember({"const", "qcr", "scc", "bH", "betah"}))->capture_default_str();
  mom->add_option("--param", param, "Weight parameter (integer, p/q or decimal; read exactly)")->capture_default_str();
  mom->add_option("--N", N, "Highest order is 2N")->capture_default_str();
  mom->add_option("--mix", mix, "b in [0, 1]: also compute mu_b both ways");

  auto* rm = app.add_subcommand("randmat", "Monte Carlo spectral moments of Markov random matrices");
  McConfig cfg;
  std::string dist = "rademacher";
  std::string seed = std::to_string(cfg.seed);
  std::string hist_path;
  int bins = 50;
  rm->add_option("--n", cfg.n, "Matrix size")->capture_default_str();
  rm->add_option("--trials", cfg.trials)->capture_default_str();
  rm->add_option("--kmax", cfg.kmax, "Highest moment")->capture_default_str();
  rm->add_option("--dist", dist)->check(CLI::IsMember({"rademacher", "gaussian"}))->capture_default_str();
  rm->add_option("--seed", seed)->capture_default_str();
  rm->add_option("--histogram", hist_path, "Write an eigenvalue histogram CSV of the first trial here");
  rm->add_option("--bins", bins)->capture_default_str();

  auto* pc = app.add_subcommand("permcheck", "Positive definiteness and metric checks on S(n)");
  int pn = 0;
  double pb = 1.0, px = 1.0, ptol = 1e-8;
  pc->add_option("--n", pn)->required();
  pc->add_option("--b", pb, "Base of b^h_n")->capture_default_str();
  pc->add_option("--x", px, "Rate of exp(-x H)")->capture_default_str();
  pc->add_option("--tol", ptol, "Eigenvalue tolerance")->capture_default_str();

  auto* vf = app.add_subcommand("verify", "Run the acceptance suite");
  std::string level;
  vf->add_option("--level", level)->required()->check(CLI::IsMember({"quick", "full"}));

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return kUsage;
  }

  const ExecConfig exec{common.threads};
  const EnumerationLimits limits{common.max_n};
  Report report;
  try {
    if (seq->parsed()) {
      report = cmd_sequences(which, seq_max, limits, exec);
    } else if (mom->parsed()) {
      report = cmd_moments(weight, param, N, mix, limits, exec);
    } else if (rm->parsed()) {
      cfg.law = parse_entry_law(dist);
      cfg.seed = parse_seed(seed);
      report = cmd_randmat(cfg, hist_path, bins, exec);
    } else if (pc->parsed()) {
      report = cmd_permcheck(pn, pb, px, ptol, exec);
    } else {
      report = cmd_verify(level, exec, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open output file '" << common.output << "'\n";
      return kUsage;
    }
  }
  std::ostream& dest = common.output.empty() ? out : file;
  if (common.format == "json")
    dest << report.json.dump(2) << '\n';
  else
    write_csv(dest, report.table);
  dest.flush();
  return report.passed ? kPass : kCheckFailed;
}

}  // namespace ggp::cli
