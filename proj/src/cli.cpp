#include "branchlaw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "branchlaw/json_io.hpp"

namespace branchlaw::cli {

namespace {

const std::vector<std::string> kCommands = {"parse",   "derive",  "integrate", "hd",       "eta",
                                            "mx",      "removal", "commute",   "minimal",  "relevant",
                                            "branch",  "layer",   "pieri",     "involute", "selfcheck"};

struct Options {
  std::string command;
  std::vector<std::string> args;
  std::optional<std::string> side;
  bool json = false;
  bool strict = false;
  bool langlands = false;
  std::optional<std::string> batch;
  std::optional<std::string> cache;
  std::uint64_t seed = 1;
  int max_points = 6;
};

struct Outcome {
  json payload;
  bool falsy = false;
};

// Parses argv-style arguments; throws UsageError or returns nullopt after --help.
std::optional<Options> parse_options(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Derivative calculus and branching decisions for multisegments", "branchlaw"};
  app.add_option("command", o.command, "Command")->check(CLI::IsMember(kCommands));
  app.allow_extras();
  app.footer(
      "Commands:\n"
      "  parse VALUE                  canonical form of a segment, multisegment or rep\n"
      "  derive REP SEG|MULT          derivative (default side right)\n"
      "  integrate REP SEG|MULT       integral (default side left)\n"
      "  hd REP                       highest derivative multisegment\n"
      "  eta REP SEG | mx REP SEG     eta vector and saturated multisegment\n"
      "  removal SEG|MULT MULT        removal process\n"
      "  commute M N REP              strong RdLi commutation trace\n"
      "  minimal REP MULT             minimality and minimized form\n"
      "  relevant REP REP | branch REP REP\n"
      "  layer M N REP                smallest derivative index\n"
      "  pieri REP [I]                simple quotients of BZ derivatives\n"
      "  involute MULT                Langlands/Zelevinsky conversion\n"
      "  selfcheck                    consistency suite (--seed, --max-points)\n"
      "Quote arguments containing braces.");
  app.add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--strict", o.strict, "Exit 1 on false or null results");
  app.add_flag("--langlands", o.langlands, "Read bare {...} reps and print reps as Langlands parameters");
  app.add_option("--batch", o.batch, "One query per line; one JSON result per line");
  app.add_option("--cache", o.cache, "JSON-lines result cache");
  app.add_option("--seed", o.seed, "Seed for selfcheck");
  app.add_option("--max-points", o.max_points, "Point bound for selfcheck")->check(CLI::Range(1, 12));
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  o.args = app.remaining();
  for (const auto& a : o.args)
    if (a.size() > 1 && a[0] == '-' && (a[1] == '-' || std::isalpha(static_cast<unsigned char>(a[1]))))
      throw UsageError("unknown option " + a);
  return o;
}

void need(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.args.size() < lo || o.args.size() > hi)
    throw UsageError(o.command + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                     " arguments, got " + std::to_string(o.args.size()));
}

Side side_of(const Options& o, Side fallback) {
  if (!o.side) return fallback;
  return *o.side == "left" ? Side::left : Side::right;
}

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

Multisegment mult_of(const Value& v) {
  if (auto d = std::get_if<Segment>(&v)) return Multisegment{*d};
  if (auto m = std::get_if<Multisegment>(&v)) return *m;
  throw UsageError("expected a segment or multisegment, got " + format(v));
}

// Segment or multisegment argument.
Multisegment as_mult(const std::string& text) { return mult_of(parse_value(text)); }

struct Query {
  std::string canonical;
  std::function<Outcome()> run;
};

std::string rep_text(const IrrRep& pi, const Options& o) { return o.langlands ? format_langlands(pi) : format(pi); }

json rep_json(const IrrRep& pi, const Options& o) {
  json j = to_json(pi);
  if (o.langlands) j["rep"] = format_langlands(pi);
  return j;
}

Query build(const Options& o) {
  const std::string& c = o.command;
  auto rep = [&o](std::size_t i) { return parse_rep(o.args[i], o.langlands); };
  std::string flags = o.langlands ? " --langlands" : "";

  if (c == "parse") {
    need(o, 1, 1);
    Value v = parse_value(o.args[0], o.langlands);
    return {c + " " + format(v) + flags, [v, o] {
              json p;
              if (auto pi = std::get_if<IrrRep>(&v)) {
                p = rep_json(*pi, o);
                p["kind"] = "rep";
                p["value"] = rep_text(*pi, o);
              } else {
                p = {{"kind", std::holds_alternative<Segment>(v) ? "segment" : "multisegment"}, {"value", format(v)}};
              }
              return Outcome{p, false};
            }};
  }
  if (c == "derive" || c == "integrate") {
    need(o, 2, 2);
    IrrRep pi = rep(0);
    Value x = parse_value(o.args[1]);
    mult_of(x);
    Side side = side_of(o, c == "derive" ? Side::right : Side::left);
    std::string key = c + " " + format(pi) + " " + format(x) + " " + side_name(side) + flags;
    return {key, [pi, x, side, c, o] {
              std::optional<IrrRep> r;
              if (c == "derive") {
                r = std::holds_alternative<Segment>(x) ? derivative(pi, std::get<Segment>(x), side)
                                                        : derivative_seq(pi, mult_of(x), side);
              } else {
                r = std::holds_alternative<Segment>(x) ? integral(pi, std::get<Segment>(x), side)
                                                        : integral_seq(pi, mult_of(x), side);
              }
              json p{{"side", side_name(side)}};
              p["result"] = r ? json(rep_text(*r, o)) : json(nullptr);
              return Outcome{p, !r};
            }};
  }
  if (c == "hd") {
    need(o, 1, 1);
    IrrRep pi = rep(0);
    Side side = side_of(o, Side::right);
    return {c + " " + format(pi) + " " + side_name(side), [pi, side] {
              return Outcome{{{"side", side_name(side)}, {"hd", format(hd(pi, side))}}, false};
            }};
  }
  if (c == "eta" || c == "mx") {
    need(o, 2, 2);
    IrrRep pi = rep(0);
    Segment d = parse_segment(o.args[1]);
    Side side = side_of(o, Side::right);
    return {c + " " + format(pi) + " " + format(d) + " " + side_name(side), [pi, d, side, c] {
              if (c == "eta") return Outcome{to_json(eta(pi, d, side), side), false};
              return Outcome{{{"side", side_name(side)}, {"mx", format(mx(pi, d, side))}}, false};
            }};
  }
  if (c == "removal") {
    need(o, 2, 2);
    Value x = parse_value(o.args[0]);
    mult_of(x);
    Multisegment h = parse_multisegment(o.args[1]);
    return {c + " " + format(x) + " " + format(h), [x, h] {
              json p;
              if (auto d = std::get_if<Segment>(&x)) {
                RemovalResult r = removal(*d, h);
                json seq = json::array();
                for (const auto& s : r.sequence) seq.push_back(format(s));
                p = {{"result", format(r.result)}, {"sequence", seq}};
              } else {
                p = {{"result", format(removal(mult_of(x), h))}};
              }
              return Outcome{p, false};
            }};
  }
  if (c == "commute" || c == "layer") {
    need(o, 3, 3);
    Multisegment m = as_mult(o.args[0]), n = as_mult(o.args[1]);
    IrrRep pi = rep(2);
    return {c + " " + format(m) + " " + format(n) + " " + format(pi), [m, n, pi, c] {
              if (c == "layer") return Outcome{{{"i_star", smallest_derivative_index(m, n, pi)}}, false};
              CommTriple t = strongly_commutative_multi(m, n, pi);
              return Outcome{to_json(t), !t.verdict};
            }};
  }
  if (c == "minimal") {
    need(o, 2, 2);
    IrrRep pi = rep(0);
    Multisegment m = as_mult(o.args[1]);
    Side side = side_of(o, Side::right);
    return {c + " " + format(pi) + " " + format(m) + " " + side_name(side), [pi, m, side] {
              bool ok = is_minimal(pi, m, side);
              return Outcome{{{"side", side_name(side)}, {"minimal", ok}, {"minimized", format(minimize(pi, m, side))}}, !ok};
            }};
  }
  if (c == "relevant" || c == "branch") {
    need(o, 2, 2);
    IrrRep a = rep(0), b = rep(1);
    return {c + " " + format(a) + " " + format(b) + flags, [a, b, c, o] {
              RelevanceResult r = c == "branch" ? branch(a, b) : relevant(a, b);
              json p = to_json(r);
              if (r.target) p["target"] = rep_json(*r.target, o);
              return Outcome{p, !r.relevant};
            }};
  }
  if (c == "pieri") {
    need(o, 1, 2);
    IrrRep pi = rep(0);
    std::optional<int> i;
    if (o.args.size() == 2) {
      try {
        i = std::stoi(o.args[1]);
      } catch (const std::exception&) {
        throw UsageError("pieri index must be an integer");
      }
    }
    std::string key = c + " " + format(pi) + (i ? " " + std::to_string(*i) : std::string()) + flags;
    return {key, [pi, i, o] {
              json rows = json::object();
              json p{{"rep", rep_text(pi, o)}};
              auto row_json = [&o](const std::vector<Quotient>& row) {
                json a = json::array();
                for (const auto& q : row) a.push_back({{"target", rep_text(q.target, o)}, {"witness", format(q.witness)}});
                return a;
              };
              if (i) {
                QuotientSet s = simple_quotients(pi, *i);
                rows[std::to_string(*i)] = row_json(s.quotients);
                p["collisions"] = s.collisions;
                p["violations"] = json::array();
              } else {
                PieriTable t = pieri_table(pi);
                for (const auto& [k, row] : t.rows) rows[std::to_string(k)] = row_json(row);
                p["collisions"] = t.collisions;
                p["violations"] = t.violations;
              }
              p["rows"] = rows;
              return Outcome{p, false};
            }};
  }
  if (c == "involute") {
    need(o, 1, 1);
    Multisegment m = as_mult(o.args[0]);
    return {c + " " + format(m), [m] {
              return Outcome{{{"input", format(m)}, {"result", format(langlands_to_zelevinsky(m))}}, false};
            }};
  }
  if (c == "selfcheck") {
    need(o, 0, 0);
    std::string key = c + " " + std::to_string(o.seed) + " " + std::to_string(o.max_points);
    return {key, [o] {
              SuiteConfig cfg;
              cfg.seed = o.seed;
              cfg.max_points = o.max_points;
              Report r = consistency_suite(cfg);
              return Outcome{to_json(r), !r.pass()};
            }};
  }
  throw UsageError("unknown command " + c);
}

std::string join(const json& arr, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + arr[i].get<std::string>();
  return s;
}

std::string render_text(const std::string& c, const json& p) {
  std::ostringstream os;
  if (c == "parse" || c == "involute") {
    os << p[c == "parse" ? "value" : "result"].get<std::string>() << "\n";
  } else if (c == "derive" || c == "integrate") {
    os << (p["result"].is_null() ? std::string("null") : p["result"].get<std::string>()) << "\n";
  } else if (c == "hd" || c == "mx") {
    os << p[c].get<std::string>() << "\n";
  } else if (c == "eta") {
    os << "(";
    for (std::size_t i = 0; i < p["eta"].size(); ++i) os << (i ? "," : "") << p["eta"][i].get<int>();
    os << ")\n";
  } else if (c == "removal") {
    os << p["result"].get<std::string>() << "\n";
    if (p.contains("sequence")) os << "sequence: " << join(p["sequence"], " ") << "\n";
  } else if (c == "commute") {
    os << std::left << std::setw(14) << "d" << std::setw(14) << "d'" << std::setw(36) << "state" << std::setw(12)
       << "eta" << std::setw(12) << "eta'" << "ok\n";
    auto vec = [](const json& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].get<int>());
      return s + ")";
    };
    for (const auto& row : p["trace"])
      os << std::setw(14) << row["d"].get<std::string>() << std::setw(14) << row["dp"].get<std::string>() << std::setw(36)
         << row["state"].get<std::string>() << std::setw(12) << vec(row["before"]) << std::setw(12) << vec(row["after"])
         << (row["ok"].get<bool>() ? "yes" : "no") << "\n";
    os << "verdict: " << (p["verdict"].get<bool>() ? "true" : "false") << "\n";
  } else if (c == "minimal") {
    os << "minimal: " << (p["minimal"].get<bool>() ? "true" : "false") << "\n";
    os << "minimized: " << p["minimized"].get<std::string>() << "\n";
  } else if (c == "relevant" || c == "branch") {
    os << "relevant: " << (p["relevant"].get<bool>() ? "true" : "false") << "\n";
    if (p["relevant"].get<bool>()) {
      os << "i_star: " << p["i_star"].get<int>() << "\n";
      os << "m: {" << join(p["m"], ",") << "}\n";
      os << "n: {" << join(p["n"], ",") << "}\n";
      os << "target: " << p["target"]["rep"].get<std::string>() << "\n";
    }
  } else if (c == "layer") {
    os << p["i_star"].get<int>() << "\n";
  } else if (c == "pieri") {
    os << std::left << std::setw(4) << "i" << std::setw(7) << "count" << "target <- witness\n";
    std::vector<std::pair<int, std::string>> keys;
    for (const auto& [i, row] : p["rows"].items()) keys.emplace_back(std::stoi(i), i);
    std::sort(keys.begin(), keys.end());
    for (const auto& [n, i] : keys) {
      const json& row = p["rows"][i];
      bool first = true;
      for (const auto& q : row) {
        os << std::setw(4) << (first ? i : "") << std::setw(7) << (first ? std::to_string(row.size()) : "")
           << q["target"].get<std::string>() << " <- " << q["witness"].get<std::string>() << "\n";
        first = false;
      }
    }
    for (const auto& v : p["violations"]) os << "violation: " << v.get<std::string>() << "\n";
    for (const auto& v : p["collisions"]) os << "collision: " << v.get<std::string>() << "\n";
  } else if (c == "selfcheck") {
    os << "seed " << p["seed"].get<std::uint64_t>() << ", max points " << p["max_points"].get<int>() << "\n";
    for (const auto& ch : p["checks"]) {
      os << std::left << std::setw(24) << ch["name"].get<std::string>() << std::right << std::setw(8)
         << ch["instances"].get<long>() << " instances " << std::setw(5) << ch["violations"].get<long>() << " violations"
         << "\n";
      for (const auto& ce : ch["counterexamples"]) os << "  " << ce.get<std::string>() << "\n";
    }
    os << (p["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
  } else {
    os << p.dump(2) << "\n";
  }
  return os.str();
}

std::string hash_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class Cache {
 public:
  explicit Cache(std::optional<std::string> path) : path_(std::move(path)) {
    if (!path_) return;
    std::ifstream in(*path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        json e = json::parse(line);
        entries_[e.at("h").get<std::string>()] = {e.at("q").get<std::string>(), e.at("r")};
      } catch (const json::exception&) {
      }
    }
  }

  std::optional<json> get(const std::string& query) const {
    auto it = entries_.find(hash_hex(query));
    if (it == entries_.end() || it->second.first != query) return std::nullopt;
    return it->second.second;
  }

  void put(const std::string& query, const json& result) {
    if (!path_) return;
    std::string h = hash_hex(query);
    if (entries_.count(h)) return;
    entries_[h] = {query, result};
    std::ofstream out(*path_, std::ios::app);
    out << json{{"h", h}, {"q", query}, {"r", result}}.dump() << "\n";
  }

 private:
  std::optional<std::string> path_;
  std::map<std::string, std::pair<std::string, json>> entries_;
};

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"type", kind}, {"message", message}}}};
}

bool falsy_of(const std::string& c, const json& p) {
  if (c == "derive" || c == "integrate") return p["result"].is_null();
  if (c == "commute") return !p["verdict"].get<bool>();
  if (c == "minimal") return !p["minimal"].get<bool>();
  if (c == "relevant" || c == "branch") return !p["relevant"].get<bool>();
  if (c == "selfcheck") return !p["pass"].get<bool>();
  return false;
}

struct Evaluated {
  std::string query;
  std::optional<json> payload;
  bool from_cache = false;
};

Evaluated evaluate(const Options& o, const Cache& cache) {
  Query q = build(o);
  if (auto hit = cache.get(q.canonical)) return {q.canonical, *hit, true};
  return {q.canonical, q.run().payload, false};
}

int run_batch(const Options& top, std::ostream& out, std::ostream& err) {
  std::ifstream in(*top.batch);
  if (!in) {
    err << "error: cannot open " << *top.batch << "\n";
    return 2;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }

  Cache cache(top.cache);
  struct Slot {
    std::string command;
    std::string query;
    json result;
    bool error = false;
    bool fresh = false;
  };
  std::vector<Slot> slots(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      Slot& s = slots[i];
      try {
        auto opts = parse_options(tokenize(lines[i]), err);
        if (!opts) throw UsageError("help requested in batch line");
        if (opts->command.empty()) throw UsageError("missing command");
        Options o = *opts;
        o.langlands = o.langlands || top.langlands;
        s.command = o.command;
        Evaluated e = evaluate(o, cache);
        s.query = e.query;
        s.result = *e.payload;
        s.fresh = !e.from_cache;
      } catch (const Error& e) {
        s.result = error_json(e.kind(), e.what());
        s.error = true;
      } catch (const std::exception& e) {
        s.result = error_json("InternalError", e.what());
        s.error = true;
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool any_error = false, any_falsy = false;
  for (auto& s : slots) {
    out << s.result.dump() << "\n";
    if (s.error) {
      any_error = true;
      continue;
    }
    any_falsy = any_falsy || falsy_of(s.command, s.result);
    if (s.fresh) cache.put(s.query, s.result);
  }
  if (any_error) return 2;
  return top.strict && any_falsy ? 1 : 0;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        cur += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      have = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += ch;
      have = true;
    }
  }
  if (quote) throw UsageError("unterminated quote");
  if (have) out.push_back(cur);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<Options> opts;
  try {
    opts = parse_options(args, out);
    if (!opts) return 0;
    if (opts->batch) return run_batch(*opts, out, err);
    if (opts->command.empty()) throw UsageError("missing command");

    Cache cache(opts->cache);
    Evaluated e = evaluate(*opts, cache);
    if (!e.from_cache) cache.put(e.query, *e.payload);
    out << (opts->json ? e.payload->dump() + "\n" : render_text(opts->command, *e.payload));
    return opts->strict && falsy_of(opts->command, *e.payload) ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    if (opts && opts->json) out << error_json(e.kind(), e.what()).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace branchlaw::cli
