#include "signbal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "signbal/experiments.hpp"
#include "signbal/signbalance.hpp"

namespace signbal::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RangeBounds {
  std::size_t lo;
  std::size_t hi;
};

// Admissible --n-max per verify target; fixed-range targets take none.
std::optional<RangeBounds> verify_bounds(std::string_view target) {
  if (target == "thm1.2") return RangeBounds{4, kMaxExperimentN};
  if (target == "thm1.3") return RangeBounds{2, kMaxExperimentN};
  if (target == "ss-counts") return RangeBounds{5, kMaxExperimentN};
  if (target == "catalan321") return RangeBounds{2, 12};
  if (target == "all") return RangeBounds{5, kMaxExperimentN};
  return std::nullopt;
}

std::string verify_help() {
  std::string text = "verification target:";
  for (const auto& t : verification_targets()) {
    text += "\n  " + std::string(t.id) + "  " + std::string(t.description);
    if (t.default_n_max) text += " (default --n-max " + std::to_string(*t.default_n_max) + ")";
  }
  text += "\n  all  every target above";
  return text;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    file << content;
    if (!file.flush()) throw std::runtime_error("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

std::string witness_text(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(indices[i]);
  }
  return out;
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome run_contains(const CliRequest& req) {
  const auto host = Permutation::parse(req.subject);
  Json results = Json::array();
  std::ostringstream table, csv;
  csv << "pattern,contained,witness\n";
  bool avoids = true;
  for (const auto& pattern : req.patterns) {
    const auto witness = find_occurrence(host, pattern);
    avoids = avoids && !witness;
    Json row = {{"pattern", pattern.to_string()}, {"contained", witness.has_value()}};
    row["witness"] = witness ? Json(witness->indices) : Json();
    results.push_back(row);
    csv << pattern.to_string() << ',' << (witness ? "true" : "false") << ','
        << (witness ? witness_text(witness->indices) : "") << '\n';
    if (witness) {
      std::vector<int> values;
      for (auto i : witness->indices) values.push_back(host.at(i));
      table << pattern.to_string() << ": contained at positions (" << witness_text(witness->indices)
            << ")";
      if (!values.empty()) {
        table << ", values";
        for (int v : values) table << ' ' << v;
      }
      table << '\n';
    } else {
      table << pattern.to_string() << ": avoided\n";
    }
  }
  table << host.to_string() << (avoids ? " avoids all patterns\n" : " contains some pattern\n");
  switch (req.format) {
    case Format::Json:
      return {Json{{"schema_version", 1},
                   {"kind", "containment"},
                   {"host", host.to_string()},
                   {"results", results},
                   {"avoids_all", avoids}}
                  .dump() +
              "\n"};
    case Format::Csv:
      return {csv.str()};
    case Format::Table:
      break;
  }
  return {table.str()};
}

Outcome run_enumerate(const CliRequest& req) {
  const AvoidanceClassQuery query{*req.n, req.patterns};
  const auto members = enumerate_class(query, req.enumeration_options());
  std::ostringstream text;
  if (req.format == Format::Json) {
    Json list = Json::array();
    for (const auto& p : members) {
      list.push_back({{"word", p.to_string()},
                      {"inversions", inversions(p)},
                      {"parity", std::string(to_string(parity(p)))}});
    }
    text << Json{{"schema_version", 1},
                 {"kind", "enumeration"},
                 {"n", query.n},
                 {"patterns", query.patterns.to_string()},
                 {"count", members.size()},
                 {"members", list}}
                .dump()
         << '\n';
  } else if (req.format == Format::Csv) {
    text << "word,inversions,parity\n";
    for (const auto& p : members) {
      text << '"' << p.to_string() << "\"," << inversions(p) << ',' << to_string(parity(p))
           << '\n';
    }
  } else {
    for (const auto& p : members) {
      text << p.to_string() << "  tau=" << inversions(p) << "  " << to_string(parity(p)) << '\n';
    }
    text << members.size() << " members\n";
  }
  return {text.str()};
}

Outcome run_count(const CliRequest& req) {
  const AvoidanceClassQuery query{*req.n, req.patterns};
  const auto c = signed_count(query, req.enumeration_options());
  std::ostringstream text;
  if (req.format == Format::Json) {
    text << Json{{"schema_version", 1},
                 {"kind", "count"},
                 {"n", query.n},
                 {"patterns", query.patterns.to_string()},
                 {"count", c.total()},
                 {"even", c.even},
                 {"odd", c.odd},
                 {"imbalance", c.imbalance()},
                 {"balanced", is_sign_balanced(c)}}
                .dump()
         << '\n';
  } else if (req.format == Format::Csv) {
    text << "n,count,even,odd,imbalance,balanced\n"
         << query.n << ',' << c.total() << ',' << c.even << ',' << c.odd << ',' << c.imbalance()
         << ',' << (is_sign_balanced(c) ? "true" : "false") << '\n';
  } else {
    text << c.total() << '\n';
  }
  return {text.str()};
}

Outcome run_balance(const CliRequest& req) {
  const auto report =
      balance_over_range(req.patterns, req.n_min, *req.n_max, req.enumeration_options());
  Outcome outcome;
  switch (req.format) {
    case Format::Json:
      outcome.text = to_json(report) + "\n";
      break;
    case Format::Csv:
      outcome.text = to_csv(report);
      break;
    case Format::Table:
      outcome.text = to_table(report);
      break;
  }
  outcome.code = report.all_balanced() ? kExitOk : kExitFailed;
  return outcome;
}

Outcome run_verify(const CliRequest& req) {
  const ReportFormat format{req.timing};
  std::vector<VerificationVerdict> verdicts;
  if (req.subject == "all") {
    for (const auto& t : verification_targets()) {
      std::optional<std::size_t> range;
      if (t.default_n_max) range = req.n_max ? req.n_max : t.default_n_max;
      verdicts.push_back(run_verification(t.id, range, req.enumeration_options()));
    }
  } else {
    verdicts.push_back(run_verification(req.subject, req.n_max, req.enumeration_options()));
  }
  bool passed = true;
  for (const auto& v : verdicts) passed = passed && v.passed;
  std::ostringstream text;
  if (req.format == Format::Json) {
    text << (verdicts.size() == 1 && req.subject != "all" ? to_json(verdicts.front(), format)
                                                          : to_json(verdicts, format))
         << '\n';
  } else if (req.format == Format::Csv) {
    text << "name,passed,n_lo,n_hi,cases,witnesses,suppressed_witnesses\n";
    for (const auto& v : verdicts) {
      text << v.name << ',' << (v.passed ? "true" : "false") << ',' << v.n_lo << ',' << v.n_hi
           << ',' << v.cases << ',' << v.witnesses.size() << ',' << v.suppressed_witnesses << '\n';
    }
  } else {
    for (const auto& v : verdicts) text << to_table(v, format);
  }
  return {text.str(), passed ? kExitOk : kExitFailed};
}

Outcome run_scan(const CliRequest& req, std::ostream& err) {
  const auto scan = scan_pairs_length4(req.n_max.value_or(8), req.enumeration_options());
  std::optional<std::string> sidecar = req.orbits_output;
  if (!sidecar && req.output && req.format == Format::Csv) sidecar = *req.output + ".orbits.json";
  if (sidecar) write_atomically(*sidecar, orbits_to_json(scan) + "\n");
  Outcome outcome;
  switch (req.format) {
    case Format::Csv:
      outcome.text = to_csv(scan);
      break;
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& row : scan.rows) {
        rows.push_back({{"pair", row.pair.to_string()},
                        {"set_balanced", row.set_balanced},
                        {"balanced_through", row.balanced_through},
                        {"first_failing_n", row.first_failure ? Json(*row.first_failure) : Json()},
                        {"orbit_id", row.orbit_id},
                        {"imbalances", row.imbalances}});
      }
      Json doc = {{"schema_version", 1}, {"kind", "pair_scan"}, {"n_max", scan.n_max},
                  {"rows", rows}, {"orbits", Json::parse(orbits_to_json(scan))["orbits"]},
                  {"inconsistencies", scan.inconsistencies}};
      outcome.text = doc.dump() + "\n";
      break;
    }
    case Format::Table:
      outcome.text = to_table(scan);
      break;
  }
  for (const auto& issue : scan.inconsistencies) err << "orbit inconsistency: " << issue << '\n';
  outcome.code = scan.inconsistencies.empty() ? kExitOk : kExitFailed;
  return outcome;
}

Outcome run_lis(const CliRequest& req) {
  const auto p = Permutation::parse(req.subject);
  const auto lengths = lis_lds(p);
  std::ostringstream text;
  if (req.format == Format::Json) {
    text << Json{{"schema_version", 1},
                 {"kind", "monotone_lengths"},
                 {"permutation", p.to_string()},
                 {"lis", lengths.lis},
                 {"lds", lengths.lds}}
                .dump()
         << '\n';
  } else if (req.format == Format::Csv) {
    text << "permutation,lis,lds\n\"" << p.to_string() << "\"," << lengths.lis << ','
         << lengths.lds << '\n';
  } else {
    text << "lis=" << lengths.lis << " lds=" << lengths.lds << '\n';
  }
  return {text.str()};
}

void add_common(CLI::App* sub, CliRequest& req, std::string& format) {
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option_function<std::string>(
      "--output,-o", [&req](const std::string& path) { req.output = path; },
      "write the report to this file (atomic replace)");
  sub->add_option("--parallelism,-j", req.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--oracle", req.oracle, "use brute-force enumeration (bounded by SIGNBAL_GUARD_N)");
  sub->add_flag_callback("--no-timing", [&req] { req.timing = false; },
                         "omit timing fields from reports");
  sub->add_option("--cap", req.cap, "maximum members a single enumeration may emit")
      ->check(CLI::PositiveNumber);
}

void add_patterns(CLI::Option* option) {
  option->check([](const std::string& text) -> std::string {
    try {
      PatternSet::parse(text);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return {};
  });
}

}  // namespace

EnumerationOptions CliRequest::enumeration_options() const {
  EnumerationOptions options;
  options.cap = cap;
  options.parallelism = parallelism;
  options.use_oracle = oracle;
  options.oracle_guard = oracle_guard;
  return options;
}

CliRequest parse_args(std::span<const std::string> args, std::size_t oracle_guard) {
  CliRequest req;
  req.oracle_guard = oracle_guard;
  req.parallelism = std::max(1U, std::thread::hardware_concurrency());
  std::string patterns_text;
  std::string format = "table";
  std::optional<std::size_t> n_max;
  std::size_t n = 0;

  CLI::App app{"Pattern-avoidance classes: containment, enumeration, and sign balance", "signbal"};
  app.require_subcommand(1);

  auto* contains = app.add_subcommand("contains", "find occurrences of each pattern in a host");
  contains->add_option("host", req.subject, "host permutation")->required();
  add_patterns(contains->add_option("--patterns,-p", patterns_text, "comma-separated patterns")
                   ->required());
  add_common(contains, req, format);

  auto* enumerate = app.add_subcommand("enumerate", "list S_n(R) in lexicographic order");
  auto* count = app.add_subcommand("count", "size and even/odd split of S_n(R)");
  for (auto* sub : {enumerate, count}) {
    add_patterns(sub->add_option("--patterns,-p", patterns_text, "comma-separated patterns"));
    sub->add_option("--n", n, "permutation length")->required()->check(CLI::PositiveNumber);
    add_common(sub, req, format);
  }

  auto* balance = app.add_subcommand("balance", "per-n sign balance of S_n(R)");
  add_patterns(balance->add_option("--patterns,-p", patterns_text, "comma-separated patterns"));
  balance->add_option("--n-min", req.n_min, "first n (default 2)");
  balance->add_option("--n-max", n_max, "last n")->required();
  add_common(balance, req, format);

  auto* verify = app.add_subcommand("verify", "run a named verification");
  app.footer(verify_help());
  verify->add_option("target", req.subject, verify_help())->required();
  verify->add_option("--n-max", n_max, "override the target's default range");
  add_common(verify, req, format);

  auto* scan = app.add_subcommand("scan", "scan all pairs of length-4 patterns");
  scan->add_option("--n-max", n_max, "last n (default 8)");
  scan->add_option_function<std::string>(
      "--orbits", [&req](const std::string& path) { req.orbits_output = path; },
      "write the orbit sidecar JSON here");
  add_common(scan, req, format);

  auto* lis = app.add_subcommand("lis", "longest increasing/decreasing subsequence lengths");
  lis->add_option("permutation", req.subject, "permutation word")->required();
  add_common(lis, req, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  req.patterns = PatternSet::parse(patterns_text);
  req.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  req.n_max = n_max;
  if (*contains) {
    req.command = Command::Contains;
    try {
      Permutation::parse(req.subject);
    } catch (const std::invalid_argument& e) {
      throw UsageError("host " + req.subject + " is not a permutation word: " + e.what());
    }
  } else if (*enumerate || *count) {
    req.command = *enumerate ? Command::Enumerate : Command::Count;
    req.n = n;
  } else if (*balance) {
    req.command = Command::Balance;
    if (req.n_min < 2) throw UsageError("--n-min must be at least 2");
    if (*n_max < req.n_min) {
      throw UsageError("inverted range: --n-min " + std::to_string(req.n_min) + " > --n-max " +
                       std::to_string(*n_max));
    }
  } else if (*verify) {
    req.command = Command::Verify;
    const auto& targets = verification_targets();
    const bool known =
        req.subject == "all" || std::any_of(targets.begin(), targets.end(), [&](const auto& t) {
          return t.id == req.subject;
        });
    if (!known) throw UsageError("unknown verification target '" + req.subject + "'");
    if (n_max) {
      const auto bounds = verify_bounds(req.subject);
      if (!bounds) throw UsageError(req.subject + " checks a fixed range and takes no --n-max");
      if (*n_max < bounds->lo || *n_max > bounds->hi) {
        throw UsageError("--n-max for " + req.subject + " must lie in " +
                         std::to_string(bounds->lo) + ".." + std::to_string(bounds->hi));
      }
    }
  } else if (*scan) {
    req.command = Command::Scan;
    if (n_max && (*n_max < 5 || *n_max > 10)) throw UsageError("--n-max for scan must lie in 5..10");
  } else {
    req.command = Command::Lis;
    try {
      if (Permutation::parse(req.subject).empty()) throw std::invalid_argument("empty");
    } catch (const std::invalid_argument& e) {
      throw UsageError("permutation " + req.subject + " is not a nonempty permutation word");
    }
  }
  return req;
}

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  Outcome outcome;
  try {
    switch (req.command) {
      case Command::Contains:
        outcome = run_contains(req);
        break;
      case Command::Enumerate:
        outcome = run_enumerate(req);
        break;
      case Command::Count:
        outcome = run_count(req);
        break;
      case Command::Balance:
        outcome = run_balance(req);
        break;
      case Command::Verify:
        outcome = run_verify(req);
        break;
      case Command::Scan:
        outcome = run_scan(req, err);
        break;
      case Command::Lis:
        outcome = run_lis(req);
        break;
    }
  } catch (const GuardError& e) {
    const bool overflow = dynamic_cast<const EnumerationOverflow*>(&e) != nullptr;
    out << Json{{"schema_version", 1},
                {"kind", "error"},
                {"error", {{"type", overflow ? "overflow" : "guard"}, {"message", e.what()}}}}
               .dump()
        << '\n';
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  if (req.output) {
    write_atomically(*req.output, outcome.text);
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

std::optional<std::size_t> guard_from_environment() {
  const char* raw = std::getenv("SIGNBAL_GUARD_N");
  if (!raw) return std::nullopt;
  const std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw UsageError("SIGNBAL_GUARD_N must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const auto guard = guard_from_environment().value_or(kDefaultOracleGuard);
    const auto req = parse_args(args, guard);
    return run(req, out, err);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'signbal --help' for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace signbal::cli
