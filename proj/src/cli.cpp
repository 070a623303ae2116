#include "jackcc/cli.hpp"

#include "jackcc/connection.hpp"
#include "jackcc/grouporacle.hpp"
#include "jackcc/jack.hpp"
#include "jackcc/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>

namespace jackcc {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Pretty };

struct Config {
  int max_n = 8;
  std::filesystem::path cache_dir;
  Format format = Format::Pretty;
  unsigned seed = 20240917;
};

// Raised for requests beyond the configured size limits.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string line;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) line += ',';
    line += csv_field(f);
    first = false;
  }
  return line + "\n";
}

template <class Range>
std::string space_joined(const Range& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ' ';
    s += v.get_str();
  }
  return s;
}

template <class Range>
json string_array(const Range& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

void check_weight(int n, const Config& cfg) {
  if (n > cfg.max_n) {
    throw CapExceeded("weight " + std::to_string(n) + " exceeds --max-n " + std::to_string(cfg.max_n));
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// ---------------------------------------------------------------------------

struct AcoefArgs {
  std::string lambda;
  int r = 0;
  std::string alpha;
};

int cmd_acoef(const AcoefArgs& a, const Config& cfg, std::ostream& out) {
  const Partition lambda = parse_partition(a.lambda);
  check_weight(lambda.weight(), cfg);
  if (a.r < 0) throw std::invalid_argument("--r must be nonnegative");
  if (a.r > lambda.reflection_length() + 8) {
    throw CapExceeded("--r is limited to r_lambda + 8 = " + std::to_string(lambda.reflection_length() + 8));
  }
  std::optional<Rational> alpha;
  if (!a.alpha.empty()) {
    alpha = parse_rational(a.alpha);
    if (*alpha == 0) throw std::invalid_argument("--alpha must be a nonzero rational");
  }
  const ArLambdaResult res = a_r_lambda(lambda, a.r);
  std::optional<Rational> numeric;
  if (alpha) numeric = substitute_alpha(res.value, *alpha);

  switch (cfg.format) {
    case Format::Json: {
      json j{{"lambda", lambda.to_string()}, {"r", a.r}, {"value", to_json(res.value)},
             {"text", res.value.to_string()}, {"g", string_array(res.g)}, {"b", string_array(res.b)}};
      if (numeric) {
        j["alpha"] = alpha->get_str();
        j["numeric"] = numeric->get_str();
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      if (numeric) {
        out << csv_row({"lambda", "r", "value", "g", "b", "alpha", "numeric"});
        out << csv_row({lambda.to_string(), std::to_string(a.r), res.value.to_string(), space_joined(res.g),
                        space_joined(res.b), alpha->get_str(), numeric->get_str()});
      } else {
        out << csv_row({"lambda", "r", "value", "g", "b"});
        out << csv_row({lambda.to_string(), std::to_string(a.r), res.value.to_string(), space_joined(res.g),
                        space_joined(res.b)});
      }
      break;
    case Format::Pretty:
      out << "a^" << a.r << "_(" << lambda.to_string() << ") = " << res.value.to_string() << '\n';
      out << "g: [" << space_joined(res.g) << "]\n";
      out << "b: [" << space_joined(res.b) << "]\n";
      if (numeric) out << "at alpha = " << alpha->get_str() << ": " << numeric->get_str() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_theta(int n, const Config& cfg, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  check_weight(n, cfg);
  const auto table = theta_table(n);
  switch (cfg.format) {
    case Format::Json:
      out << to_json(*table).dump() << '\n';
      break;
    case Format::Csv:
      out << csv_row({"lambda", "mu", "theta", "norm"});
      for (const auto& l : table->partitions()) {
        for (const auto& mu : table->partitions()) {
          out << csv_row({l.to_string(), mu.to_string(), table->theta(l, mu).to_string(), table->norm(l).to_string()});
        }
      }
      break;
    case Format::Pretty:
      for (const auto& l : table->partitions()) {
        out << "J_(" << l.to_string() << ")  norm " << table->norm(l).to_string() << '\n';
        for (const auto& mu : table->partitions()) {
          const auto& t = table->theta(l, mu);
          if (!t.is_zero()) out << "  p_(" << mu.to_string() << "): " << t.to_string() << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

int cmd_connect(const std::string& text, const Config& cfg, std::ostream& out) {
  std::vector<Partition> lambdas;
  for (const auto& piece : split(text, ';')) lambdas.push_back(parse_partition(piece));
  check_weight(lambdas.front().weight(), cfg);
  const LaurentAlpha value = jcc(lambdas);
  json names = json::array();
  std::string joined;
  for (const auto& l : lambdas) {
    names.push_back(l.to_string());
    joined += (joined.empty() ? "" : ";") + l.to_string();
  }
  switch (cfg.format) {
    case Format::Json:
      out << json{{"lambdas", names}, {"value", to_json(value)}, {"text", value.to_string()}}.dump() << '\n';
      break;
    case Format::Csv:
      out << csv_row({"lambdas", "value"}) << csv_row({joined, value.to_string()});
      break;
    case Format::Pretty:
      out << "a_{" << joined << "} = " << value.to_string() << '\n';
      break;
  }
  return kExitOk;
}

// Random triples must give the same coefficient in every argument order.
CheckResult symmetry_check(int n_max, unsigned seed) {
  std::mt19937 rng(seed);
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(1, n_max)(rng);
    const auto parts = generate_partitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::vector<Partition> args{parts[pick(rng)], parts[pick(rng)], parts[pick(rng)]};
    const LaurentAlpha base = jcc(args);
    std::sort(args.begin(), args.end());
    do {
      if (jcc(args) != base) {
        return {"jcc symmetric in its arguments", "FAILED at " + args[0].to_string() + ";" + args[1].to_string() + ";" +
                                                      args[2].to_string(), false};
      }
    } while (std::next_permutation(args.begin(), args.end()));
  }
  return {"jcc symmetric in its arguments", std::to_string(trials) + " random triples, seed " + std::to_string(seed),
          true};
}

int cmd_verify(const std::string& suite, int k, bool strict, const Config& cfg, std::ostream& out) {
  if (k < 1) throw std::invalid_argument("--max-n must be positive");
  VerificationReport report;
  if (suite == "theorems") {
    report = verify_theorems(k, 4);
    report.checks.push_back(symmetry_check(std::min(k, 6), cfg.seed));
  } else if (suite == "oracles") {
    report = verify_oracles(k);
  } else {
    report = verify_matchings_conjecture(k);
  }
  switch (cfg.format) {
    case Format::Json: {
      json checks = json::array();
      for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"detail", c.detail}, {"passed", c.passed}});
      out << json{{"suite", suite}, {"maxN", k}, {"checks", checks}, {"passed", report.all_passed()}}.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << csv_row({"check", "passed", "detail"});
      for (const auto& c : report.checks) out << csv_row({c.name, c.passed ? "true" : "false", c.detail});
      break;
    case Format::Pretty:
      for (const auto& c : report.checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
      break;
  }
  if (report.all_passed()) return kExitOk;
  if (suite == "conjecture") return strict ? kExitConjectureFailure : kExitOk;
  return kExitTheoremFailure;
}

int cmd_table(int n, int r_max, const Config& cfg, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (r_max < 0) throw std::invalid_argument("--r-max must be nonnegative");
  check_weight(n, cfg);
  if (r_max > n - 1 + 8) throw CapExceeded("--r-max is limited to n - 1 + 8");
  const auto iterates = laplace_beltrami_iterates(n, r_max);
  if (cfg.format == Format::Csv) out << csv_row({"lambda", "r", "value", "g", "b"});
  for (const auto& lambda : generate_partitions(n)) {
    for (int r = 0; r <= r_max; ++r) {
      const ArLambdaResult res = analyze_ar(lambda, r, iterates[static_cast<std::size_t>(r)].coeff(lambda));
      switch (cfg.format) {
        case Format::Json:
          out << json{{"lambda", lambda.to_string()}, {"r", r}, {"value", to_json(res.value)},
                      {"text", res.value.to_string()}, {"g", string_array(res.g)}, {"b", string_array(res.b)}}
                     .dump()
              << '\n';
          break;
        case Format::Csv:
          out << csv_row({lambda.to_string(), std::to_string(r), res.value.to_string(), space_joined(res.g),
                          space_joined(res.b)});
          break;
        case Format::Pretty:
          out << "a^" << r << "_(" << lambda.to_string() << ") = " << res.value.to_string() << '\n';
          break;
      }
    }
  }
  return kExitOk;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("JACK_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".jackcache";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jack characters and Jack connection coefficients", "jackcc"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  std::string format = "pretty";
  std::string cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--cache-dir", cache_dir, "Directory for cached theta tables (default $JACK_CACHE_DIR or ./.jackcache)");
  app.add_option("--max-n", cfg.max_n, "Largest weight accepted")->check(CLI::Range(1, kMaxWeight));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  AcoefArgs acoef_args;
  auto* acoef = app.add_subcommand("acoef", "a^r_lambda(alpha) with its g and b coefficients");
  acoef->add_option("--lambda", acoef_args.lambda, "Partition, e.g. 4,2,1,1 or [1^2 2^1 4^1]")->required();
  acoef->add_option("--r", acoef_args.r, "Number of transposition factors")->required();
  acoef->add_option("--alpha", acoef_args.alpha, "Also evaluate at this nonzero rational p/q");

  int theta_n = 0;
  auto* theta_cmd = app.add_subcommand("theta", "Jack characters theta^lambda_mu for all partitions of n");
  theta_cmd->add_option("--n", theta_n, "Weight")->required();

  std::string lambdas;
  auto* connect = app.add_subcommand("connect", "Jack connection coefficient a_{lambda^1,...,lambda^s}");
  connect->add_option("--lambdas", lambdas, "Partitions separated by ';', e.g. \"2;2\"")->required();

  std::string suite = "theorems";
  int verify_n = 5;
  bool strict = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "theorems, oracles or conjecture")
      ->check(CLI::IsMember({"theorems", "oracles", "conjecture"}));
  verify->add_option("--max-n", verify_n, "Largest weight to check")->check(CLI::Range(1, kMaxWeight));
  verify->add_flag("--strict", strict, "Exit 4 when a conjecture observation fails");

  int table_n = 0;
  int table_r = 0;
  auto* table = app.add_subcommand("table", "Grid of a^r_lambda over lambda |- n and r <= r-max");
  table->add_option("--n", table_n, "Weight")->required();
  table->add_option("--r-max", table_r, "Largest r")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitParseError;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;
  cfg.cache_dir = cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
  ThetaStore::global().set_cache_dir(cfg.cache_dir);

  try {
    if (*acoef) return cmd_acoef(acoef_args, cfg, out);
    if (*theta_cmd) return cmd_theta(theta_n, cfg, out);
    if (*connect) return cmd_connect(lambdas, cfg, out);
    if (*verify) return cmd_verify(suite, verify_n, strict, cfg, out);
    if (*table) return cmd_table(table_n, table_r, cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kExitTheoremFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace jackcc
