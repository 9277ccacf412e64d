// juggle: command-line front end for the multiplex juggling library.
//
// Exit codes: 0 ok, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "juggle/json_io.hpp"
#include "juggle/juggle.hpp"

#ifndef JUGGLE_DATA_DIR
#define JUGGLE_DATA_DIR "data"
#endif

namespace {

using namespace juggle;
using nlohmann::json;

enum class Format { text, json, csv };

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

json envelope(const char* command) { return {{"schemaVersion", json_io::kSchemaVersion}, {"command", command}}; }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<BigInt>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int m = 1;
  std::string from, to;
  int length = 0;
  std::string method = "brute";
  std::optional<int> height;
};

int cmd_count(const CountArgs& a, Format fmt) {
  const State from = State::parse(a.from, a.m);
  const State to = State::parse(a.to, a.m);
  if (a.length < 0) throw ParameterError("length must be non-negative");
  if (from.balls() != to.balls()) throw ParameterError(from.display() + " and " + to.display() + " hold different numbers of balls");

  auto capped = [&] {
    const int h = a.height.value_or(saturated_height(from.height(), to.height(), static_cast<unsigned long long>(a.length)));
    return count_walks_capped(HeightCappedDiagram(from.balls(), a.m, h), from, to, static_cast<unsigned long long>(a.length));
  };

  std::vector<std::pair<std::string, BigInt>> results;
  if (a.method == "brute" || a.method == "all") results.emplace_back("brute", count_walks_brute(from, to, a.length));
  if (a.method == "matrix" || a.method == "all")
    results.emplace_back("matrix", count_selections(SelectionMatrix::for_walk(from, to, a.length)));
  if (a.method == "capped" || a.method == "all") results.emplace_back("capped", capped());
  // The transfer method only covers n >= h(from); under "all" it is skipped below that.
  if (a.method == "transfer" || (a.method == "all" && a.length >= from.height()))
    results.emplace_back("transfer", count_walks_transfer(from, to, a.length));

  bool agree = true;
  for (const auto& r : results) agree = agree && r.second == results.front().second;

  if (fmt == Format::json) {
    json j = envelope("count");
    j["m"] = a.m;
    j["from"] = from.to_string();
    j["to"] = to.to_string();
    j["length"] = a.length;
    json counts = json::object();
    for (const auto& [name, value] : results) counts[name] = json_io::count(value);
    j["counts"] = counts;
    j["agree"] = agree;
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "method,count\n";
    for (const auto& [name, value] : results) std::cout << name << ',' << value << '\n';
  } else if (results.size() == 1) {
    std::cout << results.front().second << '\n';
  } else {
    for (const auto& [name, value] : results) std::cout << name << ": " << value << '\n';
    std::cout << (agree ? "all methods agree" : "MISMATCH between methods") << '\n';
  }
  return agree ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- sequence

struct SequenceArgs {
  std::string state;
  int m = 1;
  std::size_t terms = 8;
  bool primitive = false;
  std::optional<std::size_t> spot_check_every;
};

int cmd_sequence(const SequenceArgs& a, Format fmt) {
  const State origin = State::parse(a.state, a.m);
  const CountSequence seq = a.primitive ? primitive_sequence(origin, a.terms) : periodic_sequence(origin, a.terms);
  std::optional<std::vector<std::size_t>> mismatches;
  if (a.spot_check_every) mismatches = spot_check(seq, *a.spot_check_every);

  if (fmt == Format::json) {
    json j = envelope("sequence");
    j["state"] = origin.to_string();
    j["m"] = a.m;
    j["kind"] = to_string(seq.kind);
    j["terms"] = json_io::counts(seq.terms);
    if (mismatches) j["spotCheck"] = {{"every", *a.spot_check_every}, {"mismatches", *mismatches}};
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "n,count\n";
    for (std::size_t i = 0; i < seq.terms.size(); ++i) std::cout << i + 1 << ',' << seq.terms[i] << '\n';
  } else {
    std::cout << join(seq.terms) << '\n';
    if (mismatches) {
      if (mismatches->empty())
        std::cout << "spot check every " << *a.spot_check_every << ": ok\n";
      else
        std::cout << "spot check every " << *a.spot_check_every << ": mismatch at n=" << join_indices(*mismatches) << '\n';
    }
  }
  return mismatches && !mismatches->empty() ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- genfunc

struct GenfuncArgs {
  std::string state;
  int m = 1;
  bool primitive = false;
  bool reduce = false;
  std::optional<std::size_t> terms;
};

int cmd_genfunc(const GenfuncArgs& a, Format fmt) {
  const State origin = State::parse(a.state, a.m);
  RationalGF f = periodic_gf(origin);
  if (a.primitive) f = primitive_transform(f);
  if (a.reduce) f = reduced(f);
  std::vector<BigInt> expansion;
  if (a.terms) expansion = expand(f, *a.terms);

  if (fmt == Format::json) {
    json j = envelope("genfunc");
    j["state"] = origin.to_string();
    j["m"] = a.m;
    j["kind"] = a.primitive ? "primitive" : "periodic";
    j["gf"] = json_io::gf(f);
    if (a.terms) j["expansion"] = json_io::counts(expansion);
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "power,numerator,denominator\n";
    const int top = std::max(f.numerator.degree(), f.denominator.degree());
    for (int k = 0; k <= top; ++k)
      std::cout << k << ',' << f.numerator[static_cast<std::size_t>(k)] << ',' << f.denominator[static_cast<std::size_t>(k)] << '\n';
  } else {
    std::cout << f.to_string() << '\n';
    if (a.terms) std::cout << join(expansion) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string pattern;
  std::optional<int> m;
  std::optional<std::string> state;
};

int cmd_validate(const ValidateArgs& a, Format fmt) {
  const SiteswapPattern pattern = parse_pattern(a.pattern, a.m);
  const ValidityReport report = validate(pattern);
  std::optional<State> start;
  if (a.state) start = State::parse(*a.state, pattern.capacity());

  std::vector<State> trajectory;
  std::string simulation_error;
  if (start && report.valid()) {
    try {
      trajectory = simulate(pattern, *start);
    } catch (const std::exception& e) {
      simulation_error = e.what();
    }
  }
  const bool ok = report.valid() && simulation_error.empty();

  if (fmt == Format::json) {
    json j = envelope("validate");
    j["pattern"] = json_io::pattern(pattern);
    j["canonical"] = format_pattern(pattern);
    j["period"] = report.period;
    j["residueCounts"] = report.residue_counts;
    j["heightSum"] = report.height_sum;
    j["balls"] = report.balls ? json(*report.balls) : json(nullptr);
    j["valid"] = report.valid();
    j["problems"] = report.problems;
    if (start) {
      json path = json::array();
      for (const auto& s : trajectory) path.push_back(s.to_string());
      j["trajectory"] = path;
      if (!simulation_error.empty()) j["simulationError"] = simulation_error;
    }
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "step,throws,state\n";
    for (std::size_t i = 0; i < trajectory.size(); ++i)
      std::cout << i << ',' << (i ? pattern.throws()[i - 1].to_string() : "") << ",\"" << trajectory[i].to_string() << "\"\n";
    if (!ok) std::cerr << "pattern is not valid\n";
  } else {
    std::cout << "pattern " << format_pattern(pattern) << " (period " << report.period << ", m=" << report.capacity << ")\n";
    std::cout << "residue counts";
    for (int c : report.residue_counts) std::cout << ' ' << c;
    std::cout << '\n';
    if (report.valid()) {
      std::cout << "valid, b=" << *report.balls << '\n';
    } else {
      std::cout << "invalid\n";
      for (const auto& p : report.problems) std::cout << "  " << p << '\n';
    }
    if (!trajectory.empty()) {
      std::cout << "trajectory";
      for (std::size_t i = 0; i < trajectory.size(); ++i) {
        if (i) std::cout << " -" << pattern.throws()[i - 1].to_string() << "->";
        std::cout << ' ' << trajectory[i].display();
      }
      std::cout << '\n';
    }
    if (!simulation_error.empty()) std::cout << "simulation failed: " << simulation_error << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- tables

struct TablesArgs {
  std::string fixtures = std::string(JUGGLE_DATA_DIR) + "/tables.json";
  std::optional<std::string> row;
};

struct RowResult {
  std::string table;
  State origin;
  std::vector<BigInt> expected_terms, actual_terms;
  RationalGF expected_gf, actual_gf;

  bool terms_ok() const { return expected_terms == actual_terms; }
  bool gf_ok() const { return expected_gf == actual_gf; }
  bool ok() const { return terms_ok() && gf_ok(); }
};

std::pair<std::string, int> parse_row_selector(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw ParameterError("row selector must look like \"state:m\", got \"" + text + "\"");
  try {
    std::size_t used = 0;
    const std::string tail = text.substr(colon + 1);
    const int m = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing text");
    return {text.substr(0, colon), m};
  } catch (const std::logic_error&) {
    throw ParameterError("row selector must end in \":m\", got \"" + text + "\"");
  }
}

int cmd_tables(const TablesArgs& a, Format fmt) {
  std::ifstream in(a.fixtures);
  if (!in) throw ParameterError("cannot open fixture file " + a.fixtures);
  const json fixtures = json::parse(in);

  std::optional<std::pair<std::string, int>> selector;
  if (a.row) selector = parse_row_selector(*a.row);

  // One periodic GF per (state, m), shared by both tables.
  std::map<std::pair<std::string, int>, RationalGF> periodic_cache;
  auto periodic_for = [&](const State& s) -> const RationalGF& {
    const auto key = std::make_pair(s.to_string(), s.capacity());
    auto it = periodic_cache.find(key);
    if (it == periodic_cache.end()) it = periodic_cache.emplace(key, periodic_gf(s)).first;
    return it->second;
  };

  std::vector<RowResult> rows;
  for (const char* table : {"periodic", "primitive"}) {
    for (const auto& row : fixtures.at(table)) {
      const int m = row.at("m").get<int>();
      const State origin = State::parse(row.at("state").get<std::string>(), m);
      if (selector && !(State::parse(selector->first, selector->second) == origin)) continue;
      RowResult r{table, origin, {}, {}, json_io::gf_from(row), RationalGF({}, {1})};
      for (const auto& t : row.at("terms")) r.expected_terms.push_back(json_io::big_int_from(t));
      if (r.table == "periodic") {
        r.actual_terms = periodic_sequence(origin, r.expected_terms.size()).terms;
        r.actual_gf = periodic_for(origin);
      } else {
        r.actual_gf = primitive_transform(periodic_for(origin));
        r.actual_terms = expand(r.actual_gf, r.expected_terms.size());
      }
      rows.push_back(std::move(r));
    }
  }
  if (selector && rows.empty()) throw ParameterError("no fixture row for " + *a.row);

  std::size_t reproduced = 0;
  for (const auto& r : rows) reproduced += r.ok() ? 1 : 0;
  const bool all_ok = reproduced == rows.size();

  if (fmt == Format::json) {
    json j = envelope("tables");
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"table", r.table},
                      {"state", r.origin.to_string()},
                      {"m", r.origin.capacity()},
                      {"ok", r.ok()},
                      {"terms", {{"ok", r.terms_ok()}, {"expected", json_io::counts(r.expected_terms)}, {"actual", json_io::counts(r.actual_terms)}}},
                      {"gf", {{"ok", r.gf_ok()}, {"expected", json_io::gf(r.expected_gf)}, {"actual", json_io::gf(r.actual_gf)}}}});
    }
    j["rows"] = list;
    j["reproduced"] = reproduced;
    j["total"] = rows.size();
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "table,state,m,terms_ok,gf_ok\n";
    for (const auto& r : rows)
      std::cout << r.table << ",\"" << r.origin.to_string() << "\"," << r.origin.capacity() << ',' << r.terms_ok() << ','
                << r.gf_ok() << '\n';
  } else {
    for (const auto& r : rows) {
      std::cout << (r.ok() ? "ok       " : "MISMATCH ") << r.table << ' ' << r.origin.display() << " m=" << r.origin.capacity()
                << "  " << join(r.actual_terms) << "  " << r.actual_gf.to_string() << '\n';
      if (!r.terms_ok()) std::cout << "    expected terms " << join(r.expected_terms) << '\n';
      if (!r.gf_ok()) std::cout << "    expected gf " << r.expected_gf.to_string() << '\n';
    }
    std::cout << reproduced << '/' << rows.size() << " rows reproduced\n";
  }
  return all_ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int m = 1;
  std::string from, to;
  int length = 0;
  std::size_t limit = kDefaultWalkLimit;
  bool all = false;
};

int cmd_enumerate(const EnumerateArgs& a, Format fmt) {
  const State from = State::parse(a.from, a.m);
  const State to = State::parse(a.to, a.m);
  if (a.length < 0) throw ParameterError("length must be non-negative");
  const BigInt total = count_walks_brute(from, to, a.length);
  const auto walks = enumerate_walks(from, to, a.length, a.all ? std::nullopt : std::optional<std::size_t>(a.limit));

  auto labels = [](const Walk& w) {
    std::string out;
    for (const auto& s : w.steps) out += s.throws.to_string();
    return out;
  };

  if (fmt == Format::json) {
    json j = envelope("enumerate");
    j["m"] = a.m;
    j["from"] = from.to_string();
    j["to"] = to.to_string();
    j["length"] = a.length;
    j["total"] = json_io::count(total);
    json list = json::array();
    for (const auto& w : walks) list.push_back(json_io::walk_steps(w));
    j["walks"] = list;
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "index,throws,states\n";
    for (std::size_t i = 0; i < walks.size(); ++i) {
      std::cout << i + 1 << ',' << labels(walks[i]) << ",\"" << walks[i].start.display();
      for (const auto& s : walks[i].steps) std::cout << ' ' << s.state.display();
      std::cout << "\"\n";
    }
  } else {
    for (const auto& w : walks) {
      std::cout << w.start.display();
      for (const auto& s : w.steps) std::cout << " -" << s.throws.to_string() << "-> " << s.state.display();
      std::cout << '\n';
    }
    std::cout << walks.size() << " of " << total << " walks listed\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- recurrence

struct RecurrenceArgs {
  int b = 0;
  int m = 1;
};

int cmd_recurrence(const RecurrenceArgs& a, Format fmt) {
  const TransferMatrix transfer = build_transfer_matrix(a.b, a.m);
  const IntPolynomial p = char_poly(transfer.entries);
  const LinearRecurrence rec = recurrence_from_charpoly(p);

  if (fmt == Format::json) {
    json j = envelope("recurrence");
    j["b"] = a.b;
    j["m"] = a.m;
    json index = json::array();
    for (const auto& g : transfer.index) index.push_back(g.to_string());
    j["index"] = index;
    json rows = json::array();
    for (std::size_t i = 0; i < transfer.order(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < transfer.order(); ++k) row.push_back(json_io::coefficient(transfer.entries(i, k)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
    j["charPoly"] = json_io::polynomial(p);
    json q = json::array();
    for (const auto& c : rec.q) q.push_back(json_io::coefficient(c));
    j["recurrence"] = q;
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "partition";
    for (const auto& g : transfer.index) std::cout << ",\"" << g.to_string() << '"';
    std::cout << '\n';
    for (std::size_t i = 0; i < transfer.order(); ++i) {
      std::cout << '"' << transfer.index[i].to_string() << '"';
      for (std::size_t k = 0; k < transfer.order(); ++k) std::cout << ',' << transfer.entries(i, k);
      std::cout << '\n';
    }
  } else {
    std::cout << "partitions:";
    for (const auto& g : transfer.index) std::cout << " (" << g.to_string() << ')';
    std::cout << '\n';
    for (std::size_t i = 0; i < transfer.order(); ++i) {
      std::cout << " ";
      for (std::size_t k = 0; k < transfer.order(); ++k) std::cout << ' ' << transfer.entries(i, k);
      std::cout << '\n';
    }
    std::cout << "characteristic polynomial: " << p.to_string_descending() << '\n';
    std::cout << "recurrence: " << rec.to_string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and list multiplex juggling sequences"};
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count walks from one state to another");
  c->add_option("--m", count.m, "Hand capacity")->required()->check(CLI::PositiveNumber);
  c->add_option("--from", count.from, "Start state, e.g. \"1,2\"")->required();
  c->add_option("--to", count.to, "End state")->required();
  c->add_option("--length", count.length, "Walk length")->required();
  c->add_option("--method", count.method, "brute | matrix | transfer | capped | all")
      ->check(CLI::IsMember({"brute", "matrix", "transfer", "capped", "all"}))
      ->capture_default_str();
  c->add_option("--height", count.height, "Height cap for the capped method (default: saturated)");

  SequenceArgs sequence;
  auto* s = app.add_subcommand("sequence", "Closed-walk counts a(1..N) or first-return counts b(1..N)");
  s->add_option("--state", sequence.state, "Origin state")->required();
  s->add_option("--m", sequence.m, "Hand capacity")->required()->check(CLI::PositiveNumber);
  s->add_option("--terms", sequence.terms, "Number of terms")->capture_default_str();
  s->add_flag("--primitive", sequence.primitive, "Count first returns only");
  s->add_option("--spot-check", sequence.spot_check_every, "Re-derive every K-th term by brute force")->check(CLI::PositiveNumber);

  GenfuncArgs genfunc;
  auto* g = app.add_subcommand("genfunc", "Rational generating function of the closed-walk counts");
  g->add_option("--state", genfunc.state, "Origin state")->required();
  g->add_option("--m", genfunc.m, "Hand capacity")->required()->check(CLI::PositiveNumber);
  g->add_flag("--primitive", genfunc.primitive, "Apply F/(1+F)");
  g->add_flag("--reduced", genfunc.reduce, "Cancel common factors");
  g->add_option("--terms", genfunc.terms, "Also print this many series terms");

  ValidateArgs val;
  auto* v = app.add_subcommand("validate", "Check a multiplex siteswap pattern");
  v->add_option("--pattern", val.pattern, "Pattern, e.g. \"[2,0][3,1]\"")->required();
  v->add_option("--m", val.m, "Hand capacity (default: widest throw set)")->check(CLI::PositiveNumber);
  v->add_option("--state", val.state, "Run the pattern from this state");

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "Regenerate the reference tables and compare with the fixtures");
  t->add_option("--fixtures", tables.fixtures, "Fixture file")->capture_default_str();
  t->add_option("--row", tables.row, "Check a single state, e.g. \"2,1:3\"");

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "List walks in lexicographic order");
  e->add_option("--m", enumerate.m, "Hand capacity")->required()->check(CLI::PositiveNumber);
  e->add_option("--from", enumerate.from, "Start state")->required();
  e->add_option("--to", enumerate.to, "End state")->required();
  e->add_option("--length", enumerate.length, "Walk length")->required();
  e->add_option("--limit", enumerate.limit, "Maximum number of walks listed")->capture_default_str();
  e->add_flag("--all", enumerate.all, "List every walk");

  RecurrenceArgs recurrence;
  auto* r = app.add_subcommand("recurrence", "Transfer matrix, characteristic polynomial and recurrence");
  r->add_option("--b", recurrence.b, "Number of balls")->required()->check(CLI::NonNegativeNumber);
  r->add_option("--m", recurrence.m, "Hand capacity")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kOk : kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, fmt);
    if (s->parsed()) return cmd_sequence(sequence, fmt);
    if (g->parsed()) return cmd_genfunc(genfunc, fmt);
    if (v->parsed()) return cmd_validate(val, fmt);
    if (t->parsed()) return cmd_tables(tables, fmt);
    if (e->parsed()) return cmd_enumerate(enumerate, fmt);
    if (r->parsed()) return cmd_recurrence(recurrence, fmt);
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const ParameterError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: malformed fixture file: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
