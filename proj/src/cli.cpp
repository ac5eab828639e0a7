#include "gw/cli.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gw/errors.hpp"
#include "gw/numerics.hpp"
#include "gw/realwords.hpp"
#include "gw/words.hpp"

namespace gw::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  std::ostringstream out;
  out.precision(15);
  out << v;
  return out.str();
}

// Numerator/denominator when they fit in 64 bits, factored form otherwise.
std::string rational_str(const FactoredRational& r) {
  try {
    return r.str();
  } catch (const out_of_range_error&) {
    return r.factored_str();
  }
}

std::string csv_quote(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\" ") != std::string::npos;
  if (!needs_quotes) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string verdict_str(const PrimitivityVerdict& verdict) {
  switch (verdict.status) {
    case PrimitivityStatus::Trivial:
      return "trivial";
    case PrimitivityStatus::Multiple: {
      std::ostringstream out;
      out << "multiple(" << verdict.multiple_k << ")";
      return out.str();
    }
    case PrimitivityStatus::Decomposable:
      return "decomposable";
    case PrimitivityStatus::Primitive:
      return "primitive";
    case PrimitivityStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::string status_name(PrimitivityStatus status) {
  switch (status) {
    case PrimitivityStatus::Trivial:
      return "trivial";
    case PrimitivityStatus::Multiple:
      return "multiple";
    case PrimitivityStatus::Decomposable:
      return "decomposable";
    case PrimitivityStatus::Primitive:
      return "primitive";
    case PrimitivityStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

ordered_json partition_json(const Partition& p) {
  return ordered_json(p.parts());
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

}  // namespace

std::string format_solutions(const std::vector<SearchEntry>& entries, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto& entry : entries) {
      ordered_json record;
      record["size"] = entry.pair.size();
      record["length"] = entry.pair.length();
      record["lambda"] = partition_json(entry.pair.lambda());
      record["mu"] = partition_json(entry.pair.mu());
      if (entry.verdict) {
        record["verdict"] = status_name(entry.verdict->status);
        if (entry.verdict->status == PrimitivityStatus::Multiple) {
          record["k"] = entry.verdict->multiple_k;
        }
        if (entry.verdict->witness) {
          record["witness"] = {{"sigma", partition_json(entry.verdict->witness->sigma)},
                               {"tau", partition_json(entry.verdict->witness->tau)}};
        }
      }
      list.push_back(std::move(record));
    }
    out << list.dump() << '\n';
    return out.str();
  }

  if (format == OutputFormat::Csv) {
    out << "size,length,lambda,mu,verdict,witness\n";
    for (const auto& entry : entries) {
      std::string verdict;
      std::string witness;
      if (entry.verdict) {
        verdict = verdict_str(*entry.verdict);
        if (entry.verdict->witness) {
          witness = entry.verdict->witness->sigma.str() + " ; " +
                    entry.verdict->witness->tau.str();
        }
      }
      out << entry.pair.size() << ',' << entry.pair.length() << ','
          << csv_quote(entry.pair.lambda().str()) << ',' << csv_quote(entry.pair.mu().str())
          << ',' << verdict << ',' << csv_quote(witness) << '\n';
    }
    return out.str();
  }

  if (entries.empty()) return "(no solutions)\n";
  // Rows arrive sorted by (size, length, lambda); group them by length the
  // way the length-classified table is usually laid out.
  std::map<std::int64_t, std::vector<const SearchEntry*>> by_length;
  for (const auto& entry : entries) by_length[entry.pair.length()].push_back(&entry);
  bool first = true;
  for (const auto& [length, rows] : by_length) {
    if (!first) out << '\n';
    first = false;
    out << "## length " << length << "\n\n";
    out << "| size | lambda | mu | verdict |\n";
    out << "|------|--------|----|---------|\n";
    for (const SearchEntry* entry : rows) {
      out << "| " << entry->pair.size() << " | " << entry->pair.lambda().str() << " | "
          << entry->pair.mu().str() << " | "
          << (entry->verdict ? verdict_str(*entry->verdict) : std::string()) << " |\n";
    }
  }
  return out.str();
}

namespace {

struct Options {
  std::string word_text;
  std::string pair_text;
  std::string format = "table";
  std::int64_t d = 0;
  std::int64_t l = 0;
  std::string y = "1";
  bool real = false;
  double x = 0.0;
  double eta = 0.0;
  std::int64_t max_size = 0;
  std::int64_t max_length = 0;
  bool primitive = false;
  bool confirm_long = false;
  int threads = 0;
  std::int64_t budget = kDefaultBudget;
  std::int64_t n = 0;
  std::string points = "10,100,1000";
};

void add_format_option(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

std::vector<std::int64_t> parse_points(const std::string& text) {
  std::vector<std::int64_t> points;
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', start);
    std::string token = cleaned.substr(start, comma - start);
    if (token.empty()) throw parse_error("empty entry in points list");
    for (char c : token) {
      if (c < '0' || c > '9') throw parse_error("invalid point '" + token + "'");
    }
    if (token.size() > 9) throw parse_error("point too large: '" + token + "'");
    points.push_back(std::stoll(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return points;
}

// "p^e * p^e" style input for preimage targets; falls back to plain
// numerator/denominator parsing when no '^' appears.
FactoredRational parse_rational_arg(const std::string& text) {
  if (text.find('^') == std::string::npos) return FactoredRational::parse(text);
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  std::map<std::int64_t, std::int64_t> exponents;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t star = cleaned.find('*', start);
    std::string token = cleaned.substr(start, star - start);
    std::size_t caret = token.find('^');
    if (token.empty() || caret == 0 || caret == std::string::npos ||
        caret + 1 >= token.size()) {
      throw parse_error("invalid factor '" + token + "' (expected p^e)");
    }
    std::int64_t p = 0;
    std::int64_t e = 0;
    try {
      p = std::stoll(token.substr(0, caret));
      e = std::stoll(token.substr(caret + 1));
    } catch (const std::exception&) {
      throw parse_error("invalid factor '" + token + "'");
    }
    exponents[p] += e;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  try {
    return FactoredRational::from_exponents(std::move(exponents));
  } catch (const out_of_range_error& e) {
    throw parse_error(e.what());
  }
}

void emit_key_values(std::ostringstream& buffer, OutputFormat format,
                     const std::vector<std::pair<std::string, std::string>>& fields,
                     const ordered_json& json) {
  if (format == OutputFormat::Json) {
    buffer << json.dump() << '\n';
    return;
  }
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      buffer << (i ? "," : "") << fields[i].first;
    }
    buffer << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) {
      buffer << (i ? "," : "") << csv_quote(fields[i].second);
    }
    buffer << '\n';
    return;
  }
  for (const auto& [key, value] : fields) buffer << key << ": " << value << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int exit_code = 0;
  Options opt;

  CLI::App app{"Exact calculus of gamma-factor quotients and the partition power equation"};
  app.name("gammaword");
  app.require_subcommand(1);

  CLI::App* phi_cmd = app.add_subcommand("phi", "Homomorphism triple (d, l, y) of a word");
  phi_cmd->add_option("word", opt.word_text, "Word like \"[9,8,1]/[12,3,3]\"")->required();
  add_format_option(phi_cmd, opt);
  phi_cmd->callback([&] {
    PhiImage image = phi(GammaWord::parse(opt.word_text));
    std::string y = rational_str(image.y);
    emit_key_values(buffer, parse_format(opt.format),
                    {{"d", std::to_string(image.d)},
                     {"l", std::to_string(image.l)},
                     {"y", y}},
                    {{"d", image.d}, {"l", image.l}, {"y", y}});
  });

  CLI::App* limit_cmd =
      app.add_subcommand("limit", "Limit constant of a kernel word (sqrt of an exact rational)");
  limit_cmd->add_option("word", opt.word_text, "Word in the kernel")->required();
  add_format_option(limit_cmd, opt);
  limit_cmd->callback([&] {
    LimitConstant limit = limit_constant(GammaWord::parse(opt.word_text));
    std::string csq = rational_str(limit.csq);
    emit_key_values(buffer, parse_format(opt.format),
                    {{"csq", csq}, {"limit", fmt_double(limit.value)}},
                    {{"csq", csq}, {"limit", limit.value}});
  });

  CLI::App* profile_cmd =
      app.add_subcommand("profile", "Exact factors of the word's growth law");
  profile_cmd->add_option("word", opt.word_text, "Word")->required();
  add_format_option(profile_cmd, opt);
  profile_cmd->callback([&] {
    AsymptoticProfile profile = asymptotic_profile(GammaWord::parse(opt.word_text));
    std::string csq = rational_str(profile.csq);
    std::string base = rational_str(profile.exp_base);
    emit_key_values(buffer, parse_format(opt.format),
                    {{"csq", csq},
                     {"half_pow", std::to_string(profile.half_pow)},
                     {"lin_coef", std::to_string(profile.lin_coef)},
                     {"exp_base", base}},
                    {{"csq", csq},
                     {"half_pow", profile.half_pow},
                     {"lin_coef", profile.lin_coef},
                     {"exp_base", base}});
  });

  CLI::App* fingerprint_cmd =
      app.add_subcommand("fingerprint", "Rational coset invariant of a word");
  fingerprint_cmd->add_option("word", opt.word_text, "Word")->required();
  add_format_option(fingerprint_cmd, opt);
  fingerprint_cmd->callback([&] {
    FactoredRational fp = coset_fingerprint(GammaWord::parse(opt.word_text));
    emit_key_values(buffer, parse_format(opt.format),
                    {{"fingerprint", rational_str(fp)}, {"factored", fp.factored_str()}},
                    {{"fingerprint", rational_str(fp)}, {"factored", fp.factored_str()}});
  });

  CLI::App* preimage_cmd =
      app.add_subcommand("preimage", "Construct a word with a prescribed homomorphism image");
  preimage_cmd->add_option("--d", opt.d, "Target factor-count difference");
  preimage_cmd->add_option("--l", opt.l, "Target index-sum difference (integer mode)");
  preimage_cmd->add_option("--y", opt.y,
                           "Target third component: rational like 256 or 2^8 (integer "
                           "mode), positive real (real mode)");
  preimage_cmd->add_flag("--real", opt.real, "Real-index mode");
  preimage_cmd->add_option("--x", opt.x, "Target sum difference (real mode)");
  add_format_option(preimage_cmd, opt);
  preimage_cmd->callback([&] {
    OutputFormat format = parse_format(opt.format);
    if (opt.real) {
      double y_target = 0.0;
      try {
        y_target = std::stod(opt.y);
      } catch (const std::exception&) {
        throw parse_error("invalid real target y '" + opt.y + "'");
      }
      RealGammaWord word = construct_preimage_real(opt.d, opt.x, y_target);
      RealPhiImage image = phi_real(word);
      emit_key_values(buffer, format,
                      {{"word", word.str()},
                       {"d", std::to_string(image.d)},
                       {"x", fmt_double(image.sum_diff)},
                       {"y", fmt_double(image.power)}},
                      {{"word", word.str()},
                       {"d", image.d},
                       {"x", image.sum_diff},
                       {"y", image.power}});
      return;
    }
    FactoredRational y = parse_rational_arg(opt.y);
    GammaWord word = construct_preimage_int(opt.d, opt.l, y);
    emit_key_values(buffer, format,
                    {{"word", word.str()},
                     {"d", std::to_string(opt.d)},
                     {"l", std::to_string(opt.l)},
                     {"y", rational_str(y)}},
                    {{"word", word.str()}, {"d", opt.d}, {"l", opt.l}, {"y", rational_str(y)}});
  });

  CLI::App* solve_cmd = app.add_subcommand("solve-xx", "Both roots of x^x = eta in (0, 1)");
  solve_cmd->add_option("eta", opt.eta, "Value in (e^{-1/e}, 1), margin 1e-12")->required();
  add_format_option(solve_cmd, opt);
  solve_cmd->callback([&] {
    XxRootPair roots = solve_xx(opt.eta);
    double r1 = std::abs(std::exp(roots.theta1 * std::log(roots.theta1)) - roots.eta);
    double r2 = std::abs(std::exp(roots.theta2 * std::log(roots.theta2)) - roots.eta);
    emit_key_values(buffer, parse_format(opt.format),
                    {{"eta", fmt_double(roots.eta)},
                     {"theta1", fmt_double(roots.theta1)},
                     {"theta2", fmt_double(roots.theta2)},
                     {"residual1", fmt_double(r1)},
                     {"residual2", fmt_double(r2)}},
                    {{"eta", roots.eta},
                     {"theta1", roots.theta1},
                     {"theta2", roots.theta2},
                     {"residual1", r1},
                     {"residual2", r2}});
  });

  CLI::App* check_cmd =
      app.add_subcommand("check", "Test a partition pair and classify it when it solves");
  check_cmd->add_option("pair", opt.pair_text, "Pair like \"12,3,3 ; 9,8,1\"")->required();
  check_cmd->add_option("--budget", opt.budget, "Decomposability node budget");
  add_format_option(check_cmd, opt);
  check_cmd->callback([&] {
    OutputFormat format = parse_format(opt.format);
    std::size_t semi = opt.pair_text.find(';');
    if (semi == std::string::npos || opt.pair_text.find(';', semi + 1) != std::string::npos) {
      throw parse_error("expected 'lambda ; mu'");
    }
    Partition lambda = Partition::parse(opt.pair_text.substr(0, semi));
    Partition mu = Partition::parse(opt.pair_text.substr(semi + 1));
    if (!is_solution(lambda, mu)) {
      emit_key_values(buffer, format, {{"solution", "no"}}, {{"solution", false}});
      return;
    }
    SolutionPair pair(lambda, mu);
    PrimitivityVerdict verdict = is_primitive(pair, opt.budget);
    std::vector<std::pair<std::string, std::string>> fields = {
        {"solution", "yes"},
        {"size", std::to_string(pair.size())},
        {"length", std::to_string(pair.length())},
        {"status", status_name(verdict.status)}};
    ordered_json json = {{"solution", true},
                         {"size", pair.size()},
                         {"length", pair.length()},
                         {"status", status_name(verdict.status)}};
    if (verdict.status == PrimitivityStatus::Multiple) {
      fields.emplace_back("k", std::to_string(verdict.multiple_k));
      json["k"] = verdict.multiple_k;
    }
    if (verdict.witness) {
      fields.emplace_back("witness",
                          verdict.witness->sigma.str() + " ; " + verdict.witness->tau.str());
      json["witness"] = {{"sigma", partition_json(verdict.witness->sigma)},
                         {"tau", partition_json(verdict.witness->tau)}};
    }
    emit_key_values(buffer, format, fields, json);
    if (verdict.status == PrimitivityStatus::Unknown) exit_code = 3;
  });

  CLI::App* search_cmd =
      app.add_subcommand("search", "Enumerate solutions up to a size and length bound");
  search_cmd->add_option("--max-size", opt.max_size, "Largest partition size")->required();
  search_cmd->add_option("--max-length", opt.max_length, "Largest partition length")->required();
  search_cmd->add_flag("--primitive", opt.primitive, "Keep only primitive pairs");
  search_cmd->add_option("--threads", opt.threads, "Worker threads (default: all cores)");
  search_cmd->add_option("--budget", opt.budget, "Decomposability node budget");
  add_format_option(search_cmd, opt);
  search_cmd->callback([&] {
    SearchOptions options;
    options.max_size = opt.max_size;
    options.max_length = opt.max_length;
    options.primitive_only = opt.primitive;
    options.threads = opt.threads;
    options.budget = opt.budget;
    SearchResult result = search(options);
    buffer << format_solutions(result.entries, parse_format(opt.format));
    if (result.any_unknown) exit_code = 3;
  });

  CLI::App* search3_cmd =
      app.add_subcommand("search3", "Enumerate all nontrivial length-3 solutions up to a size");
  search3_cmd->add_option("--max-size", opt.max_size, "Largest partition size")->required();
  search3_cmd->add_flag("--confirm-long", opt.confirm_long,
                        "Acknowledge a long run (required above size 500)");
  search3_cmd->add_option("--threads", opt.threads, "Worker threads (default: all cores)");
  add_format_option(search3_cmd, opt);
  search3_cmd->callback([&] {
    if (opt.max_size > 500 && !opt.confirm_long) {
      throw parse_error("sizes above 500 can run long; pass --confirm-long to proceed");
    }
    SearchResult result = search_length3(opt.max_size, opt.threads);
    buffer << format_solutions(result.entries, parse_format(opt.format));
  });

  CLI::App* family_cmd =
      app.add_subcommand("family", "The power-of-two solution family member for n");
  family_cmd->add_option("--n", opt.n, "Family parameter, n >= 3")->required();
  add_format_option(family_cmd, opt);
  family_cmd->callback([&] {
    SolutionPair pair = family_pair(opt.n);
    PowerFingerprint fp = power_fingerprint(pair.lambda());
    std::optional<FamilyProfile> profile = family_decomposition_check(opt.n);
    std::string profile_text = "none";
    ordered_json profile_json;
    if (profile) {
      std::ostringstream ptext;
      ptext << "a=" << profile->a << " b=" << profile->b << " c=" << profile->c
            << " d=" << profile->d << " e=" << profile->e << " f=" << profile->f;
      profile_text = ptext.str();
      profile_json = {{"a", profile->a}, {"b", profile->b}, {"c", profile->c},
                      {"d", profile->d}, {"e", profile->e}, {"f", profile->f}};
    }
    emit_key_values(buffer, parse_format(opt.format),
                    {{"n", std::to_string(opt.n)},
                     {"length", std::to_string(pair.length())},
                     {"size", std::to_string(pair.size())},
                     {"fingerprint", fp.str()},
                     {"lambda", pair.lambda().str()},
                     {"mu", pair.mu().str()},
                     {"decomposition", profile_text}},
                    {{"n", opt.n},
                     {"length", pair.length()},
                     {"size", pair.size()},
                     {"fingerprint", fp.str()},
                     {"lambda", partition_json(pair.lambda())},
                     {"mu", partition_json(pair.mu())},
                     {"decomposition", profile ? profile_json : ordered_json(nullptr)}});
  });

  CLI::App* n5_cmd =
      app.add_subcommand("n5", "The explicit two-block decomposition of the n = 5 family pair");
  add_format_option(n5_cmd, opt);
  n5_cmd->callback([&] {
    auto [block1, block2] = n5_decomposition();
    bool recomposes = oplus(block1, block2) == family_pair(5);
    emit_key_values(buffer, parse_format(opt.format),
                    {{"block1", block1.str()},
                     {"block2", block2.str()},
                     {"recomposes", recomposes ? "yes" : "no"}},
                    {{"block1",
                      {{"lambda", partition_json(block1.lambda())},
                       {"mu", partition_json(block1.mu())}}},
                     {"block2",
                      {{"lambda", partition_json(block2.lambda())},
                       {"mu", partition_json(block2.mu())}}},
                     {"recomposes", recomposes}});
  });

  CLI::App* converge_cmd =
      app.add_subcommand("converge", "Exact deviations of a kernel word from its limit");
  converge_cmd->add_option("word", opt.word_text, "Word in the kernel")->required();
  converge_cmd->add_option("--points", opt.points, "Evaluation points (default 10,100,1000)");
  add_format_option(converge_cmd, opt);
  converge_cmd->callback([&] {
    ConvergenceReport report =
        convergence_report(GammaWord::parse(opt.word_text), parse_points(opt.points));
    OutputFormat format = parse_format(opt.format);
    if (format == OutputFormat::Json) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : report.rows) {
        rows.push_back(
            {{"x", row.x}, {"log_value", row.log_value}, {"deviation", row.deviation}});
      }
      ordered_json json = {{"word", report.word.str()},
                           {"limit", report.limit},
                           {"strictly_decreasing", report.strictly_decreasing},
                           {"rows", rows}};
      buffer << json.dump() << '\n';
    } else if (format == OutputFormat::Csv) {
      buffer << "x,log_value,deviation\n";
      for (const auto& row : report.rows) {
        buffer << row.x << ',' << fmt_double(row.log_value) << ',' << fmt_double(row.deviation)
               << '\n';
      }
    } else {
      buffer << "word: " << report.word.str() << '\n';
      buffer << "limit: " << fmt_double(report.limit) << '\n';
      buffer << "| x | log_value | deviation |\n";
      buffer << "|---|-----------|-----------|\n";
      for (const auto& row : report.rows) {
        buffer << "| " << row.x << " | " << fmt_double(row.log_value) << " | "
               << fmt_double(row.deviation) << " |\n";
      }
      buffer << "strictly_decreasing: " << (report.strictly_decreasing ? "yes" : "no") << '\n';
    }
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const budget_exhausted& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  return exit_code;
}

}  // namespace gw::cli
