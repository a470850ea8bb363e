// Command-line front end: containment queries, the bar/bond transforms,
// nat-co classification, table regeneration, and the brute-force verifier.
// Every command is a thin shell over the library; --json wraps the answer
// in a {command, input, result, elapsed_ms} envelope.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpat/classifier.hpp"
#include "permpat/oracle.hpp"
#include "permpat/text.hpp"
#include "permpat/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace permpat;

namespace {

constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBudget = 70;

struct GlobalOptions {
  bool json_out = false;
  std::string semantics = "subset";
  unsigned long long budget = 1'000'000'000ULL;
  int threads = 0;
  bool deep = false;
};

struct Output {
  json input;
  json result;
  std::string text;
  int exit_code = 0;
};

BarredSemantics semantics_of(const GlobalOptions& g) {
  return g.semantics == "role" ? BarredSemantics::role : BarredSemantics::subset;
}

OracleOptions oracle_options(const GlobalOptions& g, Cache* cache) {
  OracleOptions opts;
  opts.budget = g.budget;
  opts.max_threads = g.threads;
  opts.allow_deep = g.deep;
  opts.semantics = semantics_of(g);
  opts.cache = cache;
  return opts;
}

BarredPattern parse_barred(const std::string& text) {
  Pattern p = parse_pattern(text);
  if (auto* b = std::get_if<BarredPattern>(&p))
    return std::move(*b);
  throw std::invalid_argument("expected a barred pattern: " + text);
}

VincularPattern parse_vincular(const std::string& text) {
  Pattern p = parse_pattern(text);
  if (auto* v = std::get_if<VincularPattern>(&p))
    return std::move(*v);
  throw std::invalid_argument("expected a vincular pattern: " + text);
}

json positions_json(const Occurrence& occ) {
  json out = json::array();
  for (int p : occ)
    out.push_back(p);
  return out;
}

std::string join(const std::vector<int>& values, char sep = ',') {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

Output run_contains(const GlobalOptions& g, const std::string& pattern_text,
                    const std::string& host_text) {
  const Pattern pattern = parse_pattern(pattern_text);
  const Permutation host = parse_permutation(host_text);
  const BarredSemantics sem = semantics_of(g);

  bool found = false;
  std::optional<Occurrence> witness;
  if (const auto* cl = std::get_if<Permutation>(&pattern)) {
    const auto occs = classical_occurrences(host, *cl);
    found = !occs.empty();
    if (found)
      witness = occs.front();
  } else if (const auto* v = std::get_if<VincularPattern>(&pattern)) {
    const auto occs = vincular_occurrences(host, *v);
    found = !occs.empty();
    if (found)
      witness = occs.front();
  } else {
    witness = barred_witness(host, std::get<BarredPattern>(pattern), sem);
    found = witness.has_value();
  }

  Output out;
  out.input = {{"pattern", format_pattern(pattern)},
               {"permutation", format_pattern(host)},
               {"semantics", g.semantics}};
  out.result["contains"] = found;
  if (witness)
    out.result["witness"] = positions_json(*witness);
  out.text = found ? "true" : "false";
  return out;
}

Output run_avoiders(const GlobalOptions& g, Cache* cache,
                    const std::vector<std::string>& pattern_texts, int max_n,
                    bool count_only) {
  std::vector<Pattern> patterns;
  json echo = json::array();
  for (const auto& t : pattern_texts) {
    patterns.push_back(parse_pattern(t));
    echo.push_back(format_pattern(patterns.back()));
  }
  const auto mode = count_only ? ClassMode::count : ClassMode::collect;
  const auto cls = avoidance_class(patterns, max_n, mode, oracle_options(g, cache));

  Output out;
  out.input = {{"patterns", echo},
               {"max_n", max_n},
               {"count_only", count_only},
               {"semantics", g.semantics}};
  json lengths = json::array();
  for (int m = 1; m <= max_n; ++m) {
    json row;
    row["m"] = m;
    row["count"] = cls.counts[static_cast<size_t>(m) - 1];
    out.text += "m=" + std::to_string(m) +
                " count=" + std::to_string(cls.counts[static_cast<size_t>(m) - 1]) + "\n";
    if (!count_only) {
      json members = json::array();
      for (const auto& w : cls.members[static_cast<size_t>(m) - 1]) {
        members.push_back(format_pattern(w));
        out.text += "  " + format_pattern(w) + "\n";
      }
      row["members"] = members;
    }
    lengths.push_back(row);
  }
  if (!out.text.empty())
    out.text.pop_back();
  out.result["per_length"] = lengths;
  return out;
}

Output run_bar(const std::string& text) {
  const VincularPattern v = parse_vincular(text);
  const auto bars = bar_set(v);
  Output out;
  out.input = {{"vincular", format_pattern(v)}};
  json patterns = json::array();
  for (const auto& b : bars) {
    patterns.push_back(format_pattern(b));
    out.text += format_pattern(b) + "\n";
  }
  if (!out.text.empty())
    out.text.pop_back();
  out.result = {{"patterns", patterns}, {"count", bars.size()}};
  return out;
}

Output run_bond(const std::string& text) {
  const BarredPattern b = parse_barred(text);
  const auto bonds = bond_set(b);
  Output out;
  out.input = {{"barred", format_pattern(b)}};
  json patterns = json::array();
  for (const auto& v : bonds) {
    patterns.push_back(format_pattern(v));
    out.text += format_pattern(v) + "\n";
  }
  if (!out.text.empty())
    out.text.pop_back();
  out.result = {{"patterns", patterns}, {"count", bonds.size()}};
  return out;
}

Output run_boycotts(const std::string& text) {
  const BarredPattern b = parse_barred(text);
  const auto boys = boycotts(b);
  Output out;
  out.input = {{"barred", format_pattern(b)}};
  json rows = json::array();
  for (const auto& boy : boys) {
    rows.push_back({{"X", boy.values}, {"U", boy.unbarred}, {"B", boy.barred}});
    out.text += "X={" + join(boy.values) + "} U={" + join(boy.unbarred) + "} B={" +
                join(boy.barred) + "}\n";
  }
  if (!out.text.empty())
    out.text.pop_back();
  out.result = {{"boycotts", rows}, {"count", boys.size()}};
  return out;
}

Output run_natco(const std::string& text) {
  const BarredPattern b = parse_barred(text);
  const auto report = is_nat_co(b);
  Output out;
  out.input = {{"barred", format_pattern(b)}};
  json failed = json::array();
  std::string failed_text;
  for (auto c : report.failed_conditions) {
    failed.push_back(to_string(c));
    failed_text += (failed_text.empty() ? "" : ",") + to_string(c);
  }
  out.result = {{"verdict", report.verdict},
                {"boycott_count", report.boycott_count},
                {"failed_conditions", failed}};
  out.text = report.verdict ? "true" : "false";
  out.text += "\nboycott_count=" + std::to_string(report.boycott_count);
  if (!failed_text.empty())
    out.text += "\nfailed=" + failed_text;
  return out;
}

Output run_enumerate(const std::string& kind, std::optional<int> n, int max_n) {
  Output out;
  if (kind == "natco") {
    std::vector<BarredPattern> found;
    if (n) {
      found = enumerate_nat_co(*n);
      out.input = {{"kind", kind}, {"n", *n}};
    } else {
      for (int k = 3; k <= 7; ++k) {
        auto part = enumerate_nat_co(k);
        found.insert(found.end(), part.begin(), part.end());
      }
      out.input = {{"kind", kind}};
    }
    json patterns = json::array();
    for (const auto& b : found) {
      patterns.push_back(format_pattern(b));
      out.text += format_pattern(b) + "\n";
    }
    if (!out.text.empty())
      out.text.pop_back();
    out.result = {{"patterns", patterns}, {"count", found.size()}};
  } else if (kind == "covinc") {
    const auto found = enumerate_coincidental_vincular(max_n);
    out.input = {{"kind", kind}, {"max_n", max_n}};
    json patterns = json::array();
    for (const auto& v : found) {
      patterns.push_back(format_pattern(v));
      out.text += format_pattern(v) + "\n";
    }
    if (!out.text.empty())
      out.text.pop_back();
    out.result = {{"patterns", patterns}, {"count", found.size()}};
  } else {
    throw std::invalid_argument("enumerate kind must be natco or covinc");
  }
  return out;
}

Output run_verify(const GlobalOptions& g, Cache* cache,
                  const std::vector<std::string>& barred_texts,
                  const std::vector<std::string>& vincular_texts, int max_n) {
  std::vector<Pattern> lhs, rhs;
  json barred_echo = json::array(), vincular_echo = json::array();
  for (const auto& t : barred_texts) {
    lhs.push_back(parse_pattern(t));
    barred_echo.push_back(format_pattern(lhs.back()));
  }
  for (const auto& t : vincular_texts) {
    rhs.push_back(parse_pattern(t));
    vincular_echo.push_back(format_pattern(rhs.back()));
  }
  const auto report = verify_equal(lhs, rhs, max_n, oracle_options(g, cache));

  Output out;
  out.input = {{"barred", barred_echo},
               {"vincular", vincular_echo},
               {"max_n", max_n},
               {"semantics", g.semantics}};
  if (report.status == VerifyStatus::equal_up_to_bound) {
    out.result = {{"status", "equal-up-to-bound"}, {"bound", report.bound}};
    out.text = "EQUAL up to m=" + std::to_string(report.bound);
  } else {
    const std::string side =
        report.witness_side == WitnessSide::left ? "barred" : "vincular";
    out.result = {{"status", "counterexample"},
                  {"witness", format_pattern(*report.witness)},
                  {"length", report.witness->size()},
                  {"witness_avoids", side}};
    out.text = "COUNTEREXAMPLE " + format_pattern(*report.witness) +
               " length=" + std::to_string(report.witness->size()) + " avoids=" + side;
    out.exit_code = kExitCounterexample;
  }
  return out;
}

Output run_tables(int which) {
  Output out;
  out.input = {{"which", which}};
  const TableData data = emit_tables(which);
  if (const auto* census = std::get_if<NatCoCensus>(&data)) {
    json cells = json::array();
    auto pad = [](const std::string& s, size_t w) {
      return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
    };
    std::string header = "   ";
    for (int n = 3; n <= 7; ++n)
      header += pad("n=" + std::to_string(n), 5);
    out.text = header + "\n";
    for (int bars = 1; bars <= 2; ++bars) {
      std::string row = "b=" + std::to_string(bars);
      for (int n = 3; n <= 7; ++n)
        row += pad(std::to_string(census->at(n, bars)), 5);
      out.text += row + "\n";
    }
    out.text += "total " + std::to_string(census->total);
    for (const auto& [cell, count] : census->cells)
      cells.push_back({{"n", cell.first}, {"bars", cell.second}, {"count", count}});
    out.result = {{"cells", cells}, {"total", census->total}};
  } else if (const auto* samples = std::get_if<NatCoSampleTable>(&data)) {
    json cells = json::array();
    for (const auto& [cell, pattern] : samples->cells) {
      cells.push_back(
          {{"n", cell.first}, {"bars", cell.second}, {"pattern", format_pattern(pattern)}});
      out.text += "n=" + std::to_string(cell.first) + " b=" + std::to_string(cell.second) +
                  ": " + format_pattern(pattern) + "\n";
    }
    if (!out.text.empty())
      out.text.pop_back();
    out.result = {{"cells", cells}};
  } else {
    const auto& table = std::get<CoincidentalVincularTable>(data);
    json by_length = json::object();
    for (const auto& [n, patterns] : table.by_length) {
      json list = json::array();
      out.text += "n=" + std::to_string(n) + ":\n";
      for (const auto& v : patterns) {
        list.push_back(format_pattern(v));
        out.text += "  " + format_pattern(v) + "\n";
      }
      by_length[std::to_string(n)] = list;
    }
    if (!out.text.empty())
      out.text.pop_back();
    out.result = {{"by_length", by_length}, {"total", table.total}};
  }
  return out;
}

int emit(const GlobalOptions& g, const std::string& command, const Output& out,
         std::chrono::steady_clock::time_point start) {
  if (g.json_out) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    json envelope;
    envelope["command"] = command;
    envelope["input"] = out.input;
    envelope["result"] = out.result;
    envelope["elapsed_ms"] = elapsed;
    std::cout << envelope.dump() << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation pattern engine: containment, transforms, classification, "
               "and brute-force avoidance-class verification"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json_out, "emit a JSON envelope instead of text");
  app.add_option("--semantics", global.semantics, "barred-pattern semantics")
      ->check(CLI::IsMember({"subset", "role"}))
      ->capture_default_str();
  app.add_option("--budget", global.budget,
                 "containment-check budget for oracle scans")
      ->capture_default_str();
  app.add_option("--threads", global.threads, "oracle worker threads (0 = auto)");
  app.add_flag("--deep", global.deep, "allow oracle scans up to length 10");

  std::string pattern_arg, host_arg;
  auto* contains_cmd =
      app.add_subcommand("contains", "does a permutation contain a pattern");
  contains_cmd->add_option("pattern", pattern_arg, "pattern text")->required();
  contains_cmd->add_option("permutation", host_arg, "host permutation")->required();

  std::vector<std::string> avoider_patterns;
  int avoiders_max_n = 8;
  bool count_only = false;
  auto* avoiders_cmd =
      app.add_subcommand("avoiders", "enumerate or count the avoidance class");
  avoiders_cmd->add_option("patterns", avoider_patterns, "pattern texts")->required();
  avoiders_cmd->add_option("--max-n", avoiders_max_n, "largest length to scan")
      ->capture_default_str();
  avoiders_cmd->add_flag("--count-only", count_only, "report counts without members");

  std::string bar_arg;
  auto* bar_cmd = app.add_subcommand("bar", "barred patterns that break one bond");
  bar_cmd->add_option("vincular", bar_arg, "vincular pattern text")->required();

  std::string bond_arg;
  auto* bond_cmd = app.add_subcommand("bond", "vincular patterns that replace bars");
  bond_cmd->add_option("barred", bond_arg, "barred pattern text")->required();

  std::string boycotts_arg;
  auto* boycotts_cmd = app.add_subcommand("boycotts", "maximal barred factors with flanks");
  boycotts_cmd->add_option("barred", boycotts_arg, "barred pattern text")->required();

  std::string natco_arg;
  auto* natco_cmd = app.add_subcommand("natco", "naturally-coincidental classification");
  natco_cmd->add_option("barred", natco_arg, "barred pattern text")->required();

  std::string enum_kind;
  int enum_n = -1;
  int enum_max_n = 4;
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive pattern scans");
  enum_cmd->add_option("kind", enum_kind, "natco or covinc")
      ->required()
      ->check(CLI::IsMember({"natco", "covinc"}));
  enum_cmd->add_option("--n", enum_n, "single length for natco (default 3..7)");
  enum_cmd->add_option("--max-n", enum_max_n, "largest length for covinc")
      ->capture_default_str();

  std::vector<std::string> verify_barred, verify_vincular;
  int verify_max_n = 8;
  auto* verify_cmd =
      app.add_subcommand("verify", "compare two avoidance classes length by length");
  verify_cmd->add_option("--barred", verify_barred, "left-side pattern texts");
  verify_cmd->add_option("--vincular", verify_vincular, "right-side pattern texts");
  verify_cmd->add_option("--max-n", verify_max_n, "largest length to compare")
      ->capture_default_str();

  int which_table = 0;
  auto* tables_cmd = app.add_subcommand("tables", "regenerate the census tables");
  tables_cmd->add_option("--which", which_table, "1 = census, 2 = samples, 3 = covinc")
      ->required()
      ->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::unique_ptr<Cache> cache;
  if (const char* path = std::getenv("PERMPAT_CACHE"); path && *path)
    cache = std::make_unique<Cache>(path);

  const auto start = std::chrono::steady_clock::now();
  try {
    Output out;
    std::string command;
    if (*contains_cmd) {
      command = "contains";
      out = run_contains(global, pattern_arg, host_arg);
    } else if (*avoiders_cmd) {
      command = "avoiders";
      out = run_avoiders(global, cache.get(), avoider_patterns, avoiders_max_n, count_only);
    } else if (*bar_cmd) {
      command = "bar";
      out = run_bar(bar_arg);
    } else if (*bond_cmd) {
      command = "bond";
      out = run_bond(bond_arg);
    } else if (*boycotts_cmd) {
      command = "boycotts";
      out = run_boycotts(boycotts_arg);
    } else if (*natco_cmd) {
      command = "natco";
      out = run_natco(natco_arg);
    } else if (*enum_cmd) {
      command = "enumerate";
      out = run_enumerate(enum_kind, enum_n >= 0 ? std::optional<int>(enum_n) : std::nullopt,
                          enum_max_n);
    } else if (*verify_cmd) {
      command = "verify";
      out = run_verify(global, cache.get(), verify_barred, verify_vincular, verify_max_n);
    } else {
      command = "tables";
      out = run_tables(which_table);
    }
    return emit(global, command, out, start);
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
