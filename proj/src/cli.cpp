#include "qstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstat/analysis.hpp"
#include "qstat/oracle.hpp"
#include "qstat/report_io.hpp"

namespace qstat::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

unsigned parse_unsigned(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative number: '" + s + "'");
  try {
    return static_cast<unsigned>(std::stoul(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("number out of range: '" + s + "'");
  }
}

// "a..b" (inclusive) or a single "a".
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const unsigned v = parse_unsigned(s);
    return {v, v};
  }
  const unsigned lo = parse_unsigned(s.substr(0, dots));
  const unsigned hi = parse_unsigned(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("range '" + s + "' is empty");
  return {lo, hi};
}

// "2" or "2,3,4".
std::vector<int> parse_m_list(const std::string& s) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) throw std::invalid_argument("empty modulus in '" + s + "'");
    values.push_back(static_cast<int>(parse_unsigned(item)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void check_formula_n(unsigned n) {
  if (n > kMaxFormulaN)
    throw std::invalid_argument("n exceeds the formula-path cap " + std::to_string(kMaxFormulaN));
}

void check_modulus_arg(int m) {
  if (m < kMinModulus || m > kMaxModulus)
    throw std::invalid_argument("m must be in [" + std::to_string(kMinModulus) + ", " +
                                std::to_string(kMaxModulus) + "]");
}

std::string header_line(const RunConfig& cfg, unsigned n, int m) {
  std::ostringstream s;
  s << "family=" << family_name(cfg.family) << " statistic=" << statistic_name(cfg.statistic)
    << " n=" << n << " m=" << m;
  return s.str();
}

int cmd_gf(const RunConfig& cfg, std::ostream& out) {
  const unsigned n = *cfg.n;
  check_formula_n(n);
  const QPolynomial formula = closed_form_gf(cfg.family, n);

  bool equal = true;
  QPolynomial oracle_gf;
  if (cfg.with_oracle) {
    if (n > enumeration_cap(cfg.family))
      throw std::invalid_argument("--oracle supports n <= " +
                                  std::to_string(enumeration_cap(cfg.family)) + " for family " +
                                  std::string(family_name(cfg.family)));
    oracle_gf = gf_from_oracle(cfg.statistic, cfg.family, n, cfg.threads);
    equal = oracle_gf == formula;
  }

  if (cfg.format == "json") {
    nlohmann::json j{{"family", std::string(family_name(cfg.family))},
                     {"statistic", std::string(statistic_name(cfg.statistic))},
                     {"n", n},
                     {"coeffs", to_json(formula)}};
    if (cfg.with_oracle) {
      j["oracle_coeffs"] = to_json(oracle_gf);
      j["equal"] = equal;
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "k,coefficient\n";
    for (std::size_t k = 0; k < formula.coeffs().size(); ++k)
      out << k << "," << formula.coeffs()[k].str() << "\n";
  } else {
    out << to_display_string(formula) << "\n";
    if (cfg.with_oracle) {
      out << "oracle: " << to_display_string(oracle_gf) << "\n";
      out << (equal ? "EQUAL" : "DIFFER") << "\n";
    }
  }
  return equal ? kExitOk : kExitVerificationFailed;
}

int cmd_dist(const RunConfig& cfg, std::ostream& out) {
  const unsigned n = *cfg.n;
  check_formula_n(n);
  if (cfg.m_values.size() != 1) throw std::invalid_argument("dist takes a single --m");
  const int m = cfg.m_values.front();
  check_modulus_arg(m);
  const ResidueDistribution d = fold_mod(closed_form_gf(cfg.family, n), m);
  const ExactRatio dev = deviation(d);

  if (cfg.format == "json") {
    nlohmann::json j{{"family", std::string(family_name(cfg.family))},
                     {"statistic", std::string(statistic_name(cfg.statistic))},
                     {"n", n},
                     {"dist", to_json(d)},
                     {"deviation", dev.str()}};
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "r,count\n";
    for (int r = 0; r < m; ++r) out << r << "," << d.counts[r].str() << "\n";
  } else {
    out << header_line(cfg, n, m) << "\n";
    out << "counts: ";
    for (int r = 0; r < m; ++r) out << (r ? "," : "") << d.counts[r].str();
    out << "\n";
    out << "total: " << d.total.str() << "\n";
    out << "deviation: " << dev.str() << "\n";
  }
  return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const auto [lo, hi] = *cfg.n_range;
  check_formula_n(hi);
  if (cfg.format == "csv" && cfg.m_values.size() > 1)
    throw std::invalid_argument("csv output supports a single modulus");

  nlohmann::json reports = nlohmann::json::array();
  for (int m : cfg.m_values) {
    check_modulus_arg(m);
    const ConvergenceReport report = convergence_report(cfg.family, m, lo, hi, cfg.threads);
    if (cfg.format == "csv") {
      write_csv(out, report);
    } else if (cfg.format == "json") {
      reports.push_back(to_json(report));
    } else {
      out << "family=" << family_name(report.family)
          << " statistic=" << statistic_name(report.statistic) << " m=" << report.modulus
          << " n=" << lo << ".." << hi << "\n";
      for (const ConvergenceRow& row : report.rows) {
        out << "n=" << row.n << " deviation=" << row.deviation.str() << " ("
            << format_double(row.deviation_float) << ") magnitudes:";
        for (double magnitude : row.filter_magnitudes) out << " " << format_double(magnitude);
        out << "\n";
      }
    }
  }
  if (cfg.format == "json") {
    out << (reports.size() == 1 ? reports.front() : reports).dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != Family::Derangements && cfg.family != Family::CatalanWords)
    throw std::invalid_argument("bounds supports --family derangement or catalan");
  const auto [lo, hi] = *cfg.n_range;
  check_formula_n(hi);

  bool all_pass = true;
  nlohmann::json verdicts = nlohmann::json::array();
  if (cfg.format == "csv") out << "family,m,n,j,value,bound,margin,pass\n";
  for (int m : cfg.m_values) {
    check_modulus_arg(m);
    for (unsigned n = lo; n <= hi; ++n) {
      const BoundCheckVerdict verdict = cfg.family == Family::Derangements
                                            ? derangement_bound_check(n, m)
                                            : catalan_ratio_check(n, m);
      all_pass = all_pass && verdict.pass;
      if (cfg.format == "json") {
        verdicts.push_back(to_json(verdict));
      } else if (cfg.format == "csv") {
        for (const BoundCheckEntry& e : verdict.per_j) {
          out << family_name(cfg.family) << "," << m << "," << n << "," << e.j << ","
              << format_double(e.value) << "," << format_double(e.bound) << ","
              << format_double(e.margin) << "," << (verdict.pass ? "true" : "false") << "\n";
        }
      } else {
        double min_margin = std::numeric_limits<double>::infinity();
        for (const BoundCheckEntry& e : verdict.per_j) min_margin = std::min(min_margin, e.margin);
        out << "m=" << m << " n=" << n << ": " << (verdict.pass ? "PASS" : "FAIL")
            << " min_margin=" << format_double(min_margin) << "\n";
      }
    }
  }
  if (cfg.format == "json") out << verdicts.dump(2) << "\n";
  return all_pass ? kExitOk : kExitVerificationFailed;
}

struct SuiteResult {
  std::string name;
  bool pass = false;
};

unsigned verify_cap(Family f) {
  switch (f) {
    case Family::Permutations:
    case Family::Derangements:
      return 8;
    case Family::SignedPermutations:
    case Family::SignedDerangements:
      return 6;
    case Family::CatalanWords:
      return 12;
  }
  throw std::logic_error("unreachable family");
}

BigInt derangement_count(unsigned n) {
  // D_n = (n-1)(D_{n-1} + D_{n-2})
  BigInt prev2 = 1, prev1 = 0;
  if (n == 0) return prev2;
  for (unsigned i = 2; i <= n; ++i) {
    BigInt current = (i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = current;
  }
  return prev1;
}

BigInt signed_derangement_count(unsigned n) {
  // inclusion-exclusion over the set of positions holding their own value
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt term = binomial(n, k) * boost::multiprecision::pow(BigInt(2), n - k) *
                  factorial(n - k);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

BigInt family_count(Family f, unsigned n) {
  switch (f) {
    case Family::Permutations: return factorial(n);
    case Family::Derangements: return derangement_count(n);
    case Family::SignedPermutations:
      return boost::multiprecision::pow(BigInt(2), n) * factorial(n);
    case Family::SignedDerangements: return signed_derangement_count(n);
    case Family::CatalanWords: return catalan_number(n);
  }
  throw std::logic_error("unreachable family");
}

std::vector<SuiteResult> run_verification(unsigned max_n, unsigned threads) {
  std::vector<SuiteResult> suites;
  constexpr Family kFamilies[] = {Family::Permutations, Family::Derangements,
                                  Family::SignedPermutations, Family::SignedDerangements,
                                  Family::CatalanWords};

  for (Family f : kFamilies) {
    const unsigned cap = std::min(max_n, verify_cap(f));
    const Statistic stat = default_statistic(f);
    bool equal = true;
    bool counts_ok = true;
    for (unsigned n = 0; n <= cap; ++n) {
      const QPolynomial oracle_gf = gf_from_oracle(stat, f, n, threads);
      equal = equal && oracle_gf == closed_form_gf(f, n);
      counts_ok = counts_ok && oracle_gf.sum_of_coeffs() == family_count(f, n);
    }
    std::ostringstream name;
    name << "oracle-vs-formula " << family_name(f) << "/" << statistic_name(stat) << " n<=" << cap;
    suites.push_back({name.str(), equal});
    suites.push_back({"cardinality " + std::string(family_name(f)) + " n<=" + std::to_string(cap),
                      counts_ok});
  }

  {
    const unsigned cap = std::min(max_n, 7u);
    bool pass = true;
    for (unsigned n = 1; n <= cap; ++n) {
      const long long nf = factorial(n).convert_to<long long>();
      for (unsigned k = 1; k <= n; ++k) {
        for (unsigned l = 1; l <= n; ++l) {
          if (std::gcd(k, l) != 1) continue;
          const auto matrix = joint_maj_distribution(n, k, l);
          const long long expected = nf / static_cast<long long>(k * l);
          for (const auto& matrix_row : matrix) {
            for (long long entry : matrix_row) pass = pass && entry == expected;
          }
        }
      }
    }
    suites.push_back({"joint maj/maj-inverse uniformity (coprime moduli) n<=" +
                          std::to_string(cap),
                      pass});
  }
  return suites;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const std::vector<SuiteResult> suites = run_verification(cfg.max_n, cfg.threads);
  bool all_pass = true;
  for (const SuiteResult& s : suites) all_pass = all_pass && s.pass;

  if (cfg.format == "json") {
    nlohmann::json j;
    j["suites"] = nlohmann::json::array();
    for (const SuiteResult& s : suites)
      j["suites"].push_back(nlohmann::json{{"name", s.name}, {"pass", s.pass}});
    j["pass"] = all_pass;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "suite,pass\n";
    for (const SuiteResult& s : suites)
      out << s.name << "," << (s.pass ? "true" : "false") << "\n";
  } else {
    for (const SuiteResult& s : suites) {
      const bool equality_suite = s.name.rfind("oracle-vs-formula", 0) == 0;
      out << s.name << ": " << (s.pass ? (equality_suite ? "EQUAL" : "PASS")
                                       : (equality_suite ? "DIFFER" : "FAIL"))
          << "\n";
    }
    out << "VERIFY: " << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  check_formula_n(cfg.max_n);
  nlohmann::json results = nlohmann::json::array();
  if (cfg.format == "csv") out << "family,statistic,m,max_n,n0\n";
  for (int m : cfg.m_values) {
    check_modulus_arg(m);
    const std::optional<unsigned> onset = exact_balance_threshold(cfg.family, m, cfg.max_n);
    if (cfg.format == "csv") {
      out << family_name(cfg.family) << "," << statistic_name(cfg.statistic) << "," << m << ","
          << cfg.max_n << ",";
      if (onset)
        out << *onset;
      else
        out << "none";
      out << "\n";
    } else if (cfg.format == "json") {
      nlohmann::json j{{"family", std::string(family_name(cfg.family))},
                       {"statistic", std::string(statistic_name(cfg.statistic))},
                       {"m", m},
                       {"max_n", cfg.max_n}};
      if (onset)
        j["n0"] = *onset;
      else
        j["n0"] = nullptr;
      results.push_back(j);
    } else {
      out << "family=" << family_name(cfg.family) << " statistic=" << statistic_name(cfg.statistic)
          << " m=" << m << " max_n=" << cfg.max_n << ": n0=";
      if (onset)
        out << *onset;
      else
        out << "none";
      out << "\n";
    }
  }
  if (cfg.format == "json") out << results.dump(2) << "\n";
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "gf") return cmd_gf(cfg, out);
  if (cfg.command == "dist") return cmd_dist(cfg, out);
  if (cfg.command == "converge") return cmd_converge(cfg, out);
  if (cfg.command == "bounds") return cmd_bounds(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "threshold") return cmd_threshold(cfg, out);
  throw std::invalid_argument("unknown command " + cfg.command);
}

void validate_format(const std::string& format) {
  if (format != "text" && format != "csv" && format != "json")
    throw std::invalid_argument("format must be text, csv or json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("qstat");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generating functions, residue folds and uniformity reports "
               "for major-index statistics"};
  app.require_subcommand(1);

  std::string family_str;
  std::string statistic_str;
  std::string n_str;
  std::string m_str;
  std::string format = "text";
  std::string out_path;
  bool with_oracle = false;
  unsigned max_n_verify = 12;
  unsigned max_n_threshold = 20;
  unsigned threads = 1;

  const std::string family_help =
      "perm | derangement | signed_perm | signed_derangement | catalan";
  const std::string statistic_help = "maj | fmaj (default: the family's statistic)";
  const std::string format_help = "text | csv | json";
  const std::string out_help = "write the result to a file instead of stdout";
  const std::string threads_help = "worker threads (output is identical for any count)";

  CLI::App* gf = app.add_subcommand("gf", "print a generating function");
  gf->add_option("--family", family_str, family_help)->required();
  gf->add_option("--statistic", statistic_str, statistic_help);
  gf->add_option("--n", n_str, "size")->required();
  gf->add_option("--format", format, format_help)->capture_default_str();
  gf->add_option("--out", out_path, out_help);
  gf->add_flag("--oracle", with_oracle, "also enumerate and compare");
  gf->add_option("--threads", threads, threads_help)->capture_default_str();

  CLI::App* dist = app.add_subcommand("dist", "fold a generating function modulo m");
  dist->add_option("--family", family_str, family_help)->required();
  dist->add_option("--statistic", statistic_str, statistic_help);
  dist->add_option("--n", n_str, "size")->required();
  dist->add_option("--m", m_str, "modulus")->required();
  dist->add_option("--format", format, format_help)->capture_default_str();
  dist->add_option("--out", out_path, out_help);

  CLI::App* converge = app.add_subcommand("converge", "deviation and filter-magnitude report");
  converge->add_option("--family", family_str, family_help)->required();
  converge->add_option("--statistic", statistic_str, statistic_help);
  converge->add_option("--n", n_str, "size range a..b")->required();
  converge->add_option("--m", m_str, "modulus or comma list")->required();
  converge->add_option("--format", format, format_help)->capture_default_str();
  converge->add_option("--out", out_path, out_help);
  converge->add_option("--threads", threads, threads_help)->capture_default_str();

  CLI::App* bounds = app.add_subcommand("bounds", "explicit bound checks over a size range");
  bounds->add_option("--family", family_str, "derangement | catalan")->required();
  bounds->add_option("--n", n_str, "size range a..b")->required();
  bounds->add_option("--m", m_str, "modulus or comma list")->required();
  bounds->add_option("--format", format, format_help)->capture_default_str();
  bounds->add_option("--out", out_path, out_help);

  CLI::App* verify = app.add_subcommand("verify", "oracle-vs-formula equality suites");
  verify->add_option("--max-n", max_n_verify, "clip every suite to this size")
      ->capture_default_str();
  verify->add_option("--format", format, format_help)->capture_default_str();
  verify->add_option("--out", out_path, out_help);
  verify->add_option("--threads", threads, threads_help)->capture_default_str();

  CLI::App* threshold = app.add_subcommand("threshold", "onset of exact residue uniformity");
  threshold->add_option("--family", family_str, family_help)->required();
  threshold->add_option("--statistic", statistic_str, statistic_help);
  threshold->add_option("--m", m_str, "modulus or comma list")->required();
  threshold->add_option("--max-n", max_n_threshold, "scan sizes 0..max-n")->capture_default_str();
  threshold->add_option("--format", format, format_help)->capture_default_str();
  threshold->add_option("--out", out_path, out_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.format = format;
    cfg.out_path = out_path;
    cfg.with_oracle = with_oracle;
    cfg.threads = std::max(1u, threads);
    validate_format(cfg.format);

    if (gf->parsed() || dist->parsed() || converge->parsed() || bounds->parsed() ||
        threshold->parsed()) {
      cfg.family = family_from_name(family_str);
      cfg.statistic =
          statistic_str.empty() ? default_statistic(cfg.family) : statistic_from_name(statistic_str);
      if (!statistic_applies(cfg.statistic, cfg.family))
        throw std::invalid_argument("statistic " + std::string(statistic_name(cfg.statistic)) +
                                    " does not apply to family " +
                                    std::string(family_name(cfg.family)));
    }

    if (gf->parsed() || dist->parsed()) {
      cfg.command = gf->parsed() ? "gf" : "dist";
      const auto range = parse_range(n_str);
      if (range.first != range.second)
        throw std::invalid_argument("this command takes a single --n, not a range");
      cfg.n = range.first;
    } else if (converge->parsed() || bounds->parsed()) {
      cfg.command = converge->parsed() ? "converge" : "bounds";
      cfg.n_range = parse_range(n_str);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      cfg.max_n = max_n_verify;
    } else {
      cfg.command = "threshold";
      cfg.max_n = max_n_threshold;
    }
    if (!m_str.empty()) cfg.m_values = parse_m_list(m_str);

    if (!cfg.out_path.empty()) {
      std::ofstream file(cfg.out_path);
      if (!file) throw std::invalid_argument("cannot open output file " + cfg.out_path);
      return dispatch(cfg, file);
    }
    return dispatch(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qstat::cli
