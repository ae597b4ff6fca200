#include "branchlaw/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "branchlaw/enumerate.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

namespace {

std::string show(const std::optional<IrrRep>& x) { return x ? format(*x) : std::string("null"); }

}  // namespace

DerivativeFn engine_derivative() {
  return [](const IrrRep& pi, const Segment& d) { return derivative(pi, d, Side::right); };
}

std::vector<Multisegment> enumerate_multisegments(const PointMultiset& s, int limit) {
  if (static_cast<int>(s.size()) > limit)
    throw LimitExceeded(std::to_string(s.size()) + " points exceed the limit of " + std::to_string(limit));
  return multisegments_with_support(s);
}

std::optional<IrrRep> derivative_by_inversion(const IrrRep& pi, const Segment& d, int limit) {
  auto rest = multiset_difference(csupp(pi), d.points());
  if (!rest) return std::nullopt;
  std::optional<IrrRep> hit;
  for (const auto& m : enumerate_multisegments(*rest, limit)) {
    IrrRep sigma(m);
    if (integral(sigma, d, Side::right) != pi) continue;
    if (hit) throw NonUnique("two inverses of " + format(d) + " at " + format(pi));
    hit = sigma;
  }
  return hit;
}

Multisegment hd_by_search(const IrrRep& pi, int limit) {
  const IrrRep target = highest(pi, Side::right);
  auto rest = multiset_difference(csupp(pi), csupp(target));
  std::vector<Multisegment> realizing;
  for (const auto& h : enumerate_multisegments(*rest, limit))
    if (derivative_seq(pi, h, Side::right) == target) realizing.push_back(h);
  std::vector<Multisegment> minimal;
  for (const auto& h : realizing) {
    bool below = std::any_of(realizing.begin(), realizing.end(),
                             [&](const Multisegment& g) { return g != h && leq_Z(g, h); });
    if (!below) minimal.push_back(h);
  }
  if (minimal.size() != 1)
    throw NonUnique(std::to_string(minimal.size()) + " minimal highest derivative multisegments for " + format(pi));
  return minimal.front();
}

bool is_minimal_exhaustive(const IrrRep& pi, const Multisegment& m, Side side) {
  auto target = derivative_seq(pi, m, side);
  if (!target) throw VanishingDerivative("derivative along m vanishes");
  for (const auto& n : down_closure(m))
    if (n != m && derivative_seq(pi, n, side) == target) return false;
  return true;
}

std::vector<IrrRep> corpus(int max_points, HalfInt lo, HalfInt hi, LineId line) {
  std::vector<CuspidalPoint> values;
  for (HalfInt e = lo; e <= hi; e += kOne) values.push_back({line, e});
  std::vector<IrrRep> out;
  PointMultiset cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    for (const auto& m : multisegments_with_support(cur)) out.emplace_back(m);
    if (static_cast<int>(cur.size()) == max_points) return;
    for (std::size_t i = from; i < values.size(); ++i) {
      cur.push_back(values[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Segment> window_segments(HalfInt lo, HalfInt hi, LineId line) {
  std::vector<Segment> out;
  for (HalfInt a = lo; a <= hi; a += kOne)
    for (HalfInt b = a; b <= hi; b += kOne) out.emplace_back(a, b, line);
  return out;
}

namespace checks {

namespace {

int eps_with(const DerivativeFn& derive, const IrrRep& pi, const Segment& d) {
  int k = 0;
  for (auto cur = derive(pi, d); cur; cur = derive(*cur, d)) ++k;
  return k;
}

}  // namespace

std::vector<std::string> removal_law(const IrrRep& pi, const std::vector<Segment>& window, const DerivativeFn& derive) {
  std::vector<std::string> bad;
  const Multisegment h = hd(pi);
  for (const auto& d : window) {
    auto after = derive(pi, d);
    if (!after) continue;
    Multisegment r;
    try {
      r = removal(d, h).result;
    } catch (const Inapplicable&) {
      bad.push_back(format(pi) + " " + format(d) + ": derivative defined but removal inapplicable");
      continue;
    }
    for (const auto& dp : window) {
      if (!same_class(d, dp) || seg_precedes(dp, d)) continue;
      int lhs = eps_with(derive, *after, dp);
      int rhs = eps_on_mult(dp, r);
      if (lhs != rhs)
        bad.push_back(format(pi) + " D" + format(d) + " eps" + format(dp) + ": " + std::to_string(lhs) +
                      " vs removal " + std::to_string(rhs));
    }
  }
  return bad;
}

std::vector<std::string> inversion(const IrrRep& pi, const std::vector<Segment>& window) {
  std::vector<std::string> bad;
  for (Side side : {Side::right, Side::left}) {
    const char* tag = side == Side::right ? "R" : "L";
    for (const auto& d : window) {
      if (auto down = derivative(pi, d, side); down && integral(*down, d, side) != pi)
        bad.push_back(format(pi) + " I" + tag + "(D" + tag + format(d) + ") = " + format(integral(*down, d, side)));
      IrrRep up = integral(pi, d, side);
      if (auto back = derivative(up, d, side); back != pi)
        bad.push_back(format(pi) + " D" + tag + "(I" + tag + format(d) + ") = " + show(back));
      if (csupp(up) != multiset_union(csupp(pi), d.points()))
        bad.push_back(format(pi) + " I" + tag + format(d) + " breaks support");
    }
  }
  return bad;
}

std::vector<std::string> derivative_agreement(const IrrRep& pi, const std::vector<Segment>& window) {
  std::vector<std::string> bad;
  for (const auto& d : window) {
    auto engine = derivative(pi, d, Side::right);
    auto search = derivative_by_inversion(pi, d, 64);
    if (engine != search) bad.push_back(format(pi) + " D" + format(d) + ": " + show(engine) + " vs search " + show(search));
    if ((eps(pi, d) > 0) != engine.has_value()) bad.push_back(format(pi) + " eps" + format(d) + " inconsistent");
  }
  return bad;
}

std::vector<std::string> eta_update(const IrrRep& pi, const std::vector<Segment>& window) {
  std::vector<std::string> bad;
  for (const auto& dp : window) {
    auto after = derivative(pi, dp, Side::right);
    if (!after) continue;
    const HalfInt c = dp.a(), d = dp.b();
    for (const auto& frame : window) {
      if (!same_class(frame, dp)) continue;
      const HalfInt a = frame.a(), b = frame.b();
      EtaVector before = eta(pi, frame), now = eta(*after, frame);
      std::string where = format(pi) + " D" + format(dp) + " frame " + format(frame);
      if (c < a && d == b && !(now == before)) bad.push_back(where + ": rule 1");
      if (a <= c && c <= b && d == b && now.abs() != before.abs() - 1) bad.push_back(where + ": rule 2");
      if (a <= c && d < b && now.abs() != before.abs()) bad.push_back(where + ": rule 3");
      if (c < a && d < b && !before.leq(now)) bad.push_back(where + ": rule 4");
    }
  }
  return bad;
}

std::vector<std::string> integral_monotonicity(const IrrRep& pi, const std::vector<Segment>& window) {
  std::vector<std::string> bad;
  for (const auto& dp : window) {
    IrrRep up = integral(pi, dp, Side::left);
    for (const auto& frame : window)
      if (!eta(pi, frame).leq(eta(up, frame)))
        bad.push_back(format(pi) + " I" + format(dp) + " frame " + format(frame));
  }
  return bad;
}

std::vector<std::string> unlinked_commutation(const IrrRep& pi, const std::vector<Segment>& window) {
  std::vector<std::string> bad;
  auto after = [](const std::optional<IrrRep>& x, const Segment& d) -> std::optional<IrrRep> {
    return x ? derivative(*x, d, Side::right) : std::nullopt;
  };
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      const auto &d1 = window[i], &d2 = window[j];
      if (linked(d1, d2)) continue;
      if (after(derivative(pi, d1, Side::right), d2) != after(derivative(pi, d2, Side::right), d1))
        bad.push_back(format(pi) + " D" + format(d1) + " D" + format(d2));
      for (Side side : {Side::left, Side::right})
        if (integral(integral(pi, d1, side), d2, side) != integral(integral(pi, d2, side), d1, side))
          bad.push_back(format(pi) + " I" + format(d1) + " I" + format(d2));
    }
  return bad;
}

std::vector<std::string> strong_implies_plain(const IrrRep& pi, const std::vector<Segment>& window, long* strong_found) {
  std::vector<std::string> bad;
  for (const auto& d : window)
    for (const auto& dp : window) {
      if (!strongly_commutative(d, dp, pi)) continue;
      if (strong_found) ++*strong_found;
      IrrRep one = integral(*derivative(pi, d, Side::right), dp, Side::left);
      auto two = derivative(integral(pi, dp, Side::left), d, Side::right);
      if (two != one) bad.push_back(format(pi) + " D" + format(d) + " I" + format(dp));
    }
  return bad;
}

std::vector<std::string> hd_law(const IrrRep& pi) {
  std::vector<std::string> bad;
  Multisegment h = hd(pi);
  if (derivative_seq(pi, h, Side::right) != highest(pi, Side::right)) bad.push_back(format(pi) + " hd does not realize");
  int points = 0;
  for (const auto& d : pi.zmult()) points += LineTable::size(d.line());
  if (h.abs_length() != points) bad.push_back(format(pi) + " hd length");
  Multisegment searched = hd_by_search(pi, 64);
  if (h != searched) bad.push_back(format(pi) + " hd " + format(h) + " vs search " + format(searched));
  for (const auto& d : pi.zmult()) {
    Segment probe(d.a(), d.b(), d.line());
    int direct = eps(pi, probe);
    if (direct != eps_on_mult(probe, h)) bad.push_back(format(pi) + " eps" + format(probe) + " vs hd count");
  }
  return bad;
}

std::vector<std::string> pieri_sanity(const IrrRep& pi) {
  std::vector<std::string> bad;
  PieriTable table = pieri_table(pi);
  for (const auto& v : table.violations) bad.push_back(format(pi) + " outside truncation patterns: " + v);
  auto row0 = table.rows.find(0);
  if (row0 == table.rows.end() || row0->second != std::vector<Quotient>{{pi, {}}})
    bad.push_back(format(pi) + " row 0");
  const Multisegment h = hd(pi);
  const int top = h.abs_length();
  auto hrow = table.rows.find(top);
  if (hrow == table.rows.end() || hrow->second != std::vector<Quotient>{{highest(pi, Side::right), h}})
    bad.push_back(format(pi) + " hd row");
  if (!table.rows.empty() && table.rows.rbegin()->first != top) bad.push_back(format(pi) + " rows beyond the level");
  const IrrRep minus = highest(pi, Side::right);
  for (const auto& [i, row] : table.rows)
    for (const auto& q : row) {
      Multisegment n = double_derivative_completion(pi, q.witness);
      if (derivative_seq(q.target, n, Side::right) != minus)
        bad.push_back(format(pi) + " completion of " + format(q.witness));
      if (!is_minimal(pi, q.witness, Side::right)) bad.push_back(format(pi) + " non-minimal " + format(q.witness));
    }
  return bad;
}

std::vector<std::string> relevance_symmetry(const IrrRep& pi1, const IrrRep& pi2, bool* relevant_out) {
  std::vector<std::string> bad;
  bool r = relevant(pi1, pi2).relevant;
  if (relevant_out) *relevant_out = r;
  std::string where = format(pi1) + " " + format(pi2);
  if (relevant(pi2, pi1).relevant != r) bad.push_back(where + ": symmetry");
  if (relevant(dual(pi1), dual(pi2)).relevant != r) bad.push_back(where + ": duality");
  return bad;
}

std::vector<std::string> witness_uniqueness(const IrrRep& pi1, const IrrRep& pi2, bool* relevant_out) {
  std::vector<std::string> bad;
  RelevanceResult r = relevant(pi1, pi2, {.exhaustive = true});
  if (relevant_out) *relevant_out = r.relevant;
  if (r.relevant && r.all_witnesses.size() != 1)
    bad.push_back(format(pi1) + " " + format(pi2) + ": " + std::to_string(r.all_witnesses.size()) + " witnesses");
  for (const auto& w : r.all_witnesses) {
    IrrRep shifted = shift(pi1, kHalf);
    if (!is_minimal(shifted, w.m, Side::right) || !is_minimal(pi2, w.n, Side::left))
      bad.push_back(format(pi1) + " " + format(pi2) + ": non-minimal witness");
  }
  return bad;
}

}  // namespace checks

void CheckResult::record(const std::vector<std::string>& found) {
  ++instances;
  violations += static_cast<long>(found.size());
  for (const auto& f : found)
    if (counterexamples.size() < 5) counterexamples.push_back(f);
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

namespace {

IrrRep random_rep(std::mt19937_64& rng, int max_points, HalfInt base, int span) {
  std::uniform_int_distribution<int> count(1, max_points);
  std::uniform_int_distribution<int> offset(0, span);
  PointMultiset s;
  int k = count(rng);
  for (int i = 0; i < k; ++i) s.push_back({LineTable::default_line(), base + HalfInt(offset(rng))});
  std::sort(s.begin(), s.end());
  auto all = multisegments_with_support(s);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return IrrRep(all[pick(rng)]);
}

std::vector<Segment> window_for(const IrrRep& pi) {
  std::vector<Segment> out;
  std::map<std::pair<LineId, int>, std::pair<HalfInt, HalfInt>> ranges;
  for (const auto& p : csupp(pi)) {
    auto key = std::pair(p.line, ((p.exp.twice() % 2) + 2) % 2);
    auto it = ranges.find(key);
    if (it == ranges.end()) {
      ranges.emplace(key, std::pair(p.exp, p.exp));
    } else {
      it->second.first = std::min(it->second.first, p.exp);
      it->second.second = std::max(it->second.second, p.exp);
    }
  }
  for (const auto& [key, r] : ranges) {
    auto w = window_segments(r.first, r.second, key.first);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace

Report consistency_suite(const SuiteConfig& config) {
  Report report;
  report.seed = config.seed;
  report.max_points = config.max_points;
  std::mt19937_64 rng(config.seed);
  const DerivativeFn derive = config.derivative ? config.derivative : engine_derivative();
  const LineId other = LineTable::intern("s");

  CheckResult removal{"removal_law"}, inv{"inversion"}, agree{"derivative_by_inversion"}, eta_rules{"eta_update"},
      mono{"integral_monotonicity"}, unlinked{"unlinked_commutation"}, strong{"strong_implies_plain"}, hdl{"hd_law"},
      pieri{"pieri_upper_bound"}, sym{"relevance_symmetry"}, uniq{"witness_uniqueness"};

  std::bernoulli_distribution cross(0.2);
  for (int k = 0; k < config.samples; ++k) {
    IrrRep pi = random_rep(rng, config.max_points, HalfInt(0), 4);
    if (cross(rng) && pi.rank() < config.max_points) pi = IrrRep(pi.zmult().plus(Segment(HalfInt(1), HalfInt(1), other)));
    auto window = window_for(pi);
    removal.record(checks::removal_law(pi, window, derive));
    inv.record(checks::inversion(pi, window));
    agree.record(checks::derivative_agreement(pi, window));
    eta_rules.record(checks::eta_update(pi, window));
    mono.record(checks::integral_monotonicity(pi, window));
    unlinked.record(checks::unlinked_commutation(pi, window));
    strong.record(checks::strong_implies_plain(pi, window));
    hdl.record(checks::hd_law(pi));
    pieri.record(checks::pieri_sanity(pi));
  }
  const int pair_points = std::max(2, config.max_points);
  for (int k = 0; k < config.samples / 3; ++k) {
    IrrRep pi1 = random_rep(rng, pair_points / 2, HalfInt(0), 3);
    IrrRep pi2 = random_rep(rng, pair_points - pi1.rank(), -kHalf, 4);
    sym.record(checks::relevance_symmetry(pi1, pi2));
    uniq.record(checks::witness_uniqueness(pi1, pi2));
  }
  report.checks = {removal, inv, agree, eta_rules, mono, unlinked, strong, hdl, pieri, sym, uniq};
  return report;
}

}  // namespace branchlaw
