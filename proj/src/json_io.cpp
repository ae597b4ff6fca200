#include "branchlaw/json_io.hpp"

namespace branchlaw {

json to_json(const Segment& d) { return format(d); }

json to_json(const Multisegment& m) {
  json a = json::array();
  for (const auto& d : order(m, OrderMode::ascending)) a.push_back(format(d));
  return a;
}

json to_json(const IrrRep& pi) { return {{"rep", format(pi)}, {"rank", pi.rank()}, {"level", pi.level()}}; }

json to_json(const EtaVector& v, Side side) {
  return {{"frame", format(v.frame)}, {"side", side == Side::right ? "right" : "left"}, {"eta", v.comps}, {"abs", v.abs()}};
}

json to_json(const RelevanceResult& r) {
  json j{{"relevant", r.relevant}};
  j["i_star"] = r.i_star ? json(*r.i_star) : json(nullptr);
  j["m"] = r.relevant ? to_json(r.witness_m) : json::array();
  j["n"] = r.relevant ? to_json(r.witness_n) : json::array();
  j["target"] = r.target ? to_json(*r.target) : json(nullptr);
  return j;
}

json to_json(const CommTriple& t) {
  json rows = json::array();
  for (const auto& row : t.trace)
    rows.push_back({{"d", format(row.d)},
                    {"dp", format(row.dp)},
                    {"state", format(row.state)},
                    {"before", row.before.comps},
                    {"after", row.after.comps},
                    {"derivative_defined", row.derivative_defined},
                    {"ok", row.ok}});
  return {{"m", format(t.m)}, {"n", format(t.n)}, {"pi", format(t.pi)}, {"verdict", t.verdict}, {"trace", rows}};
}

json to_json(const std::vector<Quotient>& row) {
  json a = json::array();
  for (const auto& q : row) a.push_back({{"target", format(q.target)}, {"witness", format(q.witness)}});
  return a;
}

json to_json(const PieriTable& t) {
  json rows = json::object();
  for (const auto& [i, row] : t.rows) rows[std::to_string(i)] = to_json(row);
  return {{"rows", rows}, {"collisions", t.collisions}, {"violations", t.violations}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"instances", c.instances},
                      {"violations", c.violations},
                      {"pass", c.pass()},
                      {"counterexamples", c.counterexamples}});
  return {{"pass", r.pass()}, {"seed", r.seed}, {"max_points", r.max_points}, {"checks", checks}};
}

}  // namespace branchlaw
