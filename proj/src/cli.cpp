#include "dhh/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dhh/errors.hpp"
#include "dhh/identities.hpp"
#include "dhh/numbers.hpp"
#include "dhh/serialize.hpp"
#include "dhh/series.hpp"
#include "dhh/zeta.hpp"

namespace dhh {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct Options {
  std::string format = "json";
  std::string out_path;

  std::string family;
  std::string which = "all";
  std::string n_text;
  std::string k_text;
  std::string r_text;
  std::string m_text;
  std::string lambda_text;
  std::string delta_text = "1";
  long order = 64;
  long terms = 100;
  long verify_terms = 30;
  long digits = 10;
  long m_value = 2;
  long r_value = 1;
  std::string mutate;
  unsigned workers = 0;
};

long parse_long(std::string_view text, const std::string& flag) {
  long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("--" + flag + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

/// "A..B" or "A".
IndexRange parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  IndexRange r;
  if (dots == std::string::npos) {
    r.min = r.max = parse_long(text, flag);
  } else {
    r.min = parse_long(std::string_view(text).substr(0, dots), flag);
    r.max = parse_long(std::string_view(text).substr(dots + 2), flag);
  }
  if (r.min > r.max) throw UsageError("--" + flag + ": empty range " + text);
  return r;
}

IndexRange range_or(const std::string& text, const std::string& flag, IndexRange fallback) {
  return text.empty() ? fallback : parse_range(text, flag);
}

void require_min(IndexRange r, long floor, const std::string& flag, const std::string& why) {
  if (r.min < floor) {
    throw UsageError("--" + flag + " must be >= " + std::to_string(floor) + " (" + why + ")");
  }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError("--" + flag + ": expected a rational p/q or 'symbolic', got '" + text + "'");
  }
}

/// nullopt means symbolic.
std::optional<Rational> parse_lambda(const std::string& text) {
  if (text.empty() || text == "symbolic") return std::nullopt;
  return parse_rational(text, "lambda");
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string csv_cell(const Json& v) {
  if (v.is_string()) return csv_quote(v.get<std::string>());
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) s += ',';
      s += v[i].get<std::string>();
    }
    return csv_quote(s + "]");
  }
  return v.dump();
}

/// Writes rows (each an object with the given columns) as CSV.
void write_csv(std::ostream& os, const std::vector<std::string>& columns, const Json& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << csv_cell(row.at(columns[i]));
    }
    os << '\n';
  }
}

struct Output {
  Format format;
  std::string text;
};

// ---------------------------------------------------------------- table

Output cmd_table(const Options& o, Format format) {
  const IndexRange n = range_or(o.n_text, "n", {1, 10});
  const std::optional<Rational> lambda = parse_lambda(o.lambda_text);
  require_min(n, 0, "n", "indices are nonnegative");

  std::vector<std::string> columns{"n"};
  Json rows = Json::array();
  auto lambda_value = [&](const LambdaPoly& p) -> Json {
    return lambda ? Json(p(*lambda)) : Json(p);
  };

  const std::string& f = o.family;
  if (f == "harmonic") {
    for (long i = n.min; i <= n.max; ++i) rows.push_back({{"n", i}, {"value", harmonic(i)}});
  } else if (f == "degen-harmonic") {
    for (long i = n.min; i <= n.max; ++i) {
      rows.push_back({{"n", i}, {"value", lambda_value(degen_harmonic(i))}});
    }
  } else if (f == "hyper" || f == "degen-hyper" || f == "qpoly") {
    const bool degen = f != "hyper";
    const IndexRange r = range_or(o.r_text, "r", {1, 1});
    require_min(r, degen ? 1 : 0, "r", f + " requires r >= " + (degen ? "1" : "0"));
    if (f == "qpoly") require_min(n, 1, "n", "qpoly requires n >= 1");
    if (f == "hyper" && r.min == 0 && n.min == 0) {
      throw UsageError("hyper: H_0^(0) = 1/0 is undefined; exclude n = 0 or r = 0");
    }
    columns.push_back("r");
    for (long i = n.min; i <= n.max; ++i) {
      for (long j = r.min; j <= r.max; ++j) {
        Json value;
        if (f == "hyper") {
          value = hyperharmonic(i, j);
        } else if (f == "degen-hyper") {
          value = lambda_value(degen_hyperharmonic(i, j));
        } else {
          value = lambda_value(q_poly({i, j}));
        }
        rows.push_back({{"n", i}, {"r", j}, {"value", value}});
      }
    }
  } else if (f == "stirling1") {
    const IndexRange k = range_or(o.k_text, "k", {0, n.max});
    require_min(k, 0, "k", "indices are nonnegative");
    columns.push_back("k");
    for (long i = n.min; i <= n.max; ++i) {
      for (long j = k.min; j <= k.max; ++j) {
        rows.push_back({{"n", i}, {"k", j}, {"value", stirling1(i, j).get_str()}});
      }
    }
  } else {
    throw UsageError("unknown table family '" + f + "'");
  }
  columns.push_back("value");

  std::ostringstream os;
  if (format == Format::csv) {
    write_csv(os, columns, rows);
  } else {
    Json doc{{"family", f}, {"rows", rows}};
    if (f == "degen-harmonic" || f == "degen-hyper" || f == "qpoly") {
      doc["lambda"] = lambda ? lambda->to_string() : "symbolic";
    }
    os << doc.dump(2) << '\n';
  }
  return {format, os.str()};
}

// ---------------------------------------------------------------- verify

Output cmd_verify(const Options& o, Format format, bool& all_passed) {
  VerifyConfig config;
  const bool all = o.which == "all";
  config.n = range_or(o.n_text, "n", config.n);
  config.k = range_or(o.k_text, "k", config.k);
  config.r = range_or(o.r_text, "r", config.r);
  config.m = range_or(o.m_text, "m", config.m);
  config.order = o.order;
  config.terms = o.verify_terms;
  config.workers = o.workers;
  if (!o.lambda_text.empty() && o.lambda_text != "symbolic") {
    config.lambdas.clear();
    std::stringstream list(o.lambda_text);
    for (std::string item; std::getline(list, item, ',');) {
      config.lambdas.push_back(parse_rational(item, "lambda"));
    }
  }
  if (!o.mutate.empty()) config.perturbation = Perturbation{o.mutate, Rational(1)};

  const std::string& w = o.which;
  const bool uses_n = all || w == "theorem2" || w == "theorem3" || w == "lemma1";
  const bool uses_k = all || w == "theorem2" || w == "theorem3";
  if (uses_n) require_min(config.n, 1, "n", w + " requires n >= 1");
  if (uses_k) require_min(config.k, 1, "k", w + " requires k >= 1");
  if (w == "derivative") require_min(config.k, 0, "k", "derivative order is nonnegative");
  require_min(config.r, w == "rearrangement" ? 2 : 1, "r", w + " range");
  if (all || w == "rearrangement") require_min(config.m, 2, "m", "zeta exponent m >= 2");
  if (config.order < 0) throw UsageError("--order must be nonnegative");
  if (config.terms < 1) throw UsageError("--terms must be at least 1");

  std::vector<VerificationReport> reports;
  if (all) {
    reports = verify_all(config);
  } else {
    reports.push_back(verify_sweep(w, config));
    if (w == identity_names::kTheorem3) {
      reports.push_back(verify_sweep(identity_names::kTheorem3Evaluated, config));
    }
  }
  all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

  std::ostringstream os;
  if (format == Format::csv) {
    Json rows = Json::array();
    for (const auto& r : reports) {
      rows.push_back({{"identity", r.identity},
                      {"status", r.passed() ? "pass" : "fail"},
                      {"cases", r.cases},
                      {"failures", r.failures.size()}});
    }
    write_csv(os, {"identity", "status", "cases", "failures"}, rows);
  } else {
    os << to_json(reports).dump(2) << '\n';
  }
  return {format, os.str()};
}

// ---------------------------------------------------------------- series

Output cmd_series(const Options& o, Format format) {
  if (o.r_value < 1) throw UsageError("--r must be at least 1");
  if (o.order < 0) throw UsageError("--order must be nonnegative");
  const std::optional<Rational> lambda = parse_lambda(o.lambda_text);
  Json doc = lambda ? series_to_json(degen_hyper_gf<Rational>(o.r_value, o.order, *lambda))
                    : series_to_json(degen_hyper_gf<LambdaPoly>(o.r_value, o.order,
                                                                 LambdaPoly::lambda()));
  std::ostringstream os;
  if (format == Format::csv) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < doc["coeffs"].size(); ++i) {
      rows.push_back({{"n", i}, {"coeff", doc["coeffs"][i]}});
    }
    write_csv(os, {"n", "coeff"}, rows);
  } else {
    os << doc.dump(2) << '\n';
  }
  return {format, os.str()};
}

// ---------------------------------------------------------------- zeta

Output cmd_zeta(const Options& o, Format format) {
  ZetaQuery q;
  q.m = o.m_value;
  q.delta = parse_rational(o.delta_text, "delta");
  if (o.lambda_text == "symbolic") throw UsageError("zeta needs a rational --lambda");
  q.lambda = o.lambda_text.empty() ? Rational(0) : parse_rational(o.lambda_text, "lambda");
  q.terms = o.terms;
  q.digits = o.digits;
  try {
    q.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const Json doc = to_json(zeta_partial(q), q.digits);
  std::ostringstream os;
  if (format == Format::csv) {
    write_csv(os, {"partial_sum", "decimal", "last_term", "terms"}, Json::array({doc}));
  } else {
    os << doc.dump(2) << '\n';
  }
  return {format, os.str()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate harmonic and hyperharmonic numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", o.out_path, "Write results to this file instead of stdout");

  auto* table = app.add_subcommand("table", "Tabulate a number family");
  table->add_option("family", o.family, "Family to tabulate")
      ->required()
      ->check(CLI::IsMember(
          {"harmonic", "degen-harmonic", "hyper", "degen-hyper", "stirling1", "qpoly"}));
  table->add_option("--n", o.n_text, "Range A..B for n");
  table->add_option("--r", o.r_text, "Range A..B for r");
  table->add_option("--k", o.k_text, "Range A..B for k");
  table->add_option("--lambda", o.lambda_text, "Rational λ or 'symbolic'");

  auto* verify = app.add_subcommand("verify", "Verify identities exactly");
  verify->add_option("identity", o.which, "Identity to verify")
      ->check(CLI::IsMember(
          {"all", "theorem2", "theorem3", "lemma1", "gf", "derivative", "rearrangement"}))
      ->capture_default_str();
  verify->add_option("--n", o.n_text, "Range A..B for n");
  verify->add_option("--k", o.k_text, "Range A..B for k");
  verify->add_option("--r", o.r_text, "Range A..B for r");
  verify->add_option("--m", o.m_text, "Range A..B for the zeta exponent m");
  verify->add_option("--lambda", o.lambda_text, "Comma-separated rational λ values");
  verify->add_option("--order", o.order, "Truncation order for series identities")
      ->capture_default_str();
  verify->add_option("--terms", o.verify_terms, "Truncation N for the rearrangement")
      ->capture_default_str();
  verify->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
  verify->add_option("--mutate", o.mutate, "Corrupt one identity's right-hand side")
      ->group("");

  auto* series = app.add_subcommand("series", "Coefficients of -log_λ(1-t)/(1-t)^r");
  series->add_option("--r", o.r_value, "Order r >= 1")->capture_default_str();
  series->add_option("--order", o.order, "Truncation order")->capture_default_str();
  series->add_option("--lambda", o.lambda_text, "Rational λ or 'symbolic' (default)");

  auto* zeta = app.add_subcommand("zeta", "Truncated degenerate Hurwitz zeta");
  zeta->add_option("--m", o.m_value, "Integer exponent m >= 2")->capture_default_str();
  zeta->add_option("--delta", o.delta_text, "Positive rational shift")->capture_default_str();
  zeta->add_option("--lambda", o.lambda_text, "Rational λ (default 0)");
  zeta->add_option("--terms", o.terms, "Number of summands")->capture_default_str();
  zeta->add_option("--digits", o.digits, "Fractional decimal digits")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Format format = o.format == "csv" ? Format::csv : Format::json;
  int code = kExitOk;
  Output result;
  try {
    if (table->parsed()) {
      result = cmd_table(o, format);
    } else if (verify->parsed()) {
      bool passed = true;
      result = cmd_verify(o, format, passed);
      if (!passed) code = kExitVerificationFailed;
    } else if (series->parsed()) {
      result = cmd_series(o, format);
    } else {
      result = cmd_zeta(o, format);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_path << " for writing\n";
      return kExitUsage;
    }
    file << result.text;
  }
  return code;
}

}  // namespace dhh
