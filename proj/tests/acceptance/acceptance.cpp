// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "branchlaw/enumerate.hpp"
#include "branchlaw/oracle.hpp"
#include "branchlaw/text.hpp"

using namespace branchlaw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += "; over time limit " + std::to_string(limit_s) + "s";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

// Runs f(i) for i in [0, n) on all cores; f must only touch its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  unsigned k = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& t : pool) t.join();
}

struct Tally {
  std::mutex mu;
  long instances = 0;
  long violations = 0;
  std::string first;

  void add(const std::vector<std::string>& bad) {
    std::lock_guard lock(mu);
    ++instances;
    violations += static_cast<long>(bad.size());
    if (first.empty() && !bad.empty()) first = bad.front();
  }
  Outcome outcome(const std::string& what) const {
    std::string d = std::to_string(instances) + " " + what + ", " + std::to_string(violations) + " violations";
    if (!first.empty()) d += "; first: " + first;
    return {violations == 0, d};
  }
};

std::vector<Segment> window_of(const IrrRep& pi) {
  auto s = csupp(pi);
  if (s.empty()) return {};
  return window_segments(s.front().exp, s.back().exp);
}

IrrRep Z(const std::string& s) { return parse_rep(s); }

}  // namespace

int main() {
  const HalfInt lo(0), hi(5);
  const int corpus_points = 7;
  std::vector<IrrRep> reps = corpus(corpus_points, lo, hi);

  report(1, "eta fixture (1,0) -> (1,1) and non-branching Steinberg pair", 1.0, [] {
    IrrRep pi = Z("Z{[-3/2],[-1/2],[1/2],[3/2],[5/2]}");
    Segment d1 = parse_segment("[-3/2,-1/2]"), d2 = parse_segment("[-1/2]");
    EtaVector before = eta(pi, d1), after = eta(integral(pi, d2, Side::left), d1);
    IrrRep st = parse_rep("St{[-2,2]}");
    IrrRep pip = parse_rep("St{[1/2,5/2],[-1/2]}");
    bool verdict = branch(st, pip).relevant;
    bool ok = before.comps == std::vector<int>{1, 0} && after.comps == std::vector<int>{1, 1} && !verdict &&
              !strongly_commutative(d1, d2, pi);
    return Outcome{ok, "eta " + std::to_string(before.comps[0]) + "," + std::to_string(before.comps[1]) + " -> " +
                           std::to_string(after.comps[0]) + "," + std::to_string(after.comps[1]) +
                           ", branch " + (verdict ? "true" : "false")};
  });

  report(2, "non-tempered pair branches with i*=3 and matching derivatives", 1.0, [] {
    IrrRep pi = Z("Z{[0],[0],[-1,1]}"), pip = Z("Z{[-1/2,1/2],[-1/2],[1/2]}");
    RelevanceResult r = branch(pi, pip);
    auto lhs = derivative_seq(shift(pi, kHalf), parse_multisegment("{[1/2],[1/2],[3/2]}"), Side::right);
    auto rhs = derivative_seq(pip, parse_multisegment("{[-1/2,1/2]}"), Side::left);
    bool ok = r.relevant && r.i_star == 3 && lhs && rhs && *lhs == *rhs && r.target == *lhs;
    return Outcome{ok, std::string("relevant ") + (r.relevant ? "true" : "false") + ", i*=" +
                           (r.i_star ? std::to_string(*r.i_star) : "none") + ", common derivative " +
                           (lhs ? format(*lhs) : "null")};
  });

  report(3, "distinguished pair branches at n=2 and n=3", 1.0, [] {
    std::string detail;
    bool ok = true;
    for (int n : {2, 3}) {
      IrrRep pi(Multisegment{Segment(HalfInt::from_twice(-(n - 2)), HalfInt::from_twice(n)),
                             Segment(HalfInt::from_twice(n + 2), HalfInt::from_twice(n + 2))});
      IrrRep trivial(Multisegment{Segment(HalfInt::from_twice(-(n - 1)), HalfInt::from_twice(n - 1))});
      bool v = branch(pi, trivial).relevant;
      ok = ok && v;
      detail += "n=" + std::to_string(n) + " " + format(pi) + " -> " + (v ? "true" : "false") + "; ";
    }
    return Outcome{ok, detail};
  });

  report(4, "zero relative rank: verdict iff both generic, i* = rank", 10.0, [] {
    std::mt19937_64 rng(4);
    LineId other = LineTable::intern("s");
    int generic_pairs = 0, agree = 0;
    std::string first;
    auto random_rep = [&](int rank, HalfInt base, LineId line, bool want_generic) {
      std::uniform_int_distribution<int> off(0, 3);
      PointMultiset s;
      for (int i = 0; i < rank; ++i) s.push_back({line, base + HalfInt(off(rng))});
      std::sort(s.begin(), s.end());
      auto all = multisegments_with_support(s);
      std::vector<Multisegment> pool;
      for (const auto& m : all)
        if (!want_generic || is_generic(IrrRep(m))) pool.push_back(m);
      if (pool.empty()) pool = all;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      return IrrRep(pool[pick(rng)]);
    };
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 50; ++k) {
      std::uniform_int_distribution<int> rk(1, 4);
      int r2 = rk(rng);
      IrrRep pi2 = coin(rng) ? random_rep(r2, HalfInt(0), other, coin(rng))
                             : random_rep(r2, HalfInt(-1), LineTable::default_line(), coin(rng));
      IrrRep pi1 = random_rep(r2 + 1, HalfInt(0), LineTable::default_line(), coin(rng));
      if (!zero_relative_rank(pi1, pi2)) throw std::logic_error("generator produced related supports");
      RelevanceResult r = branch(pi1, pi2);
      bool expect = is_generic(pi1) && is_generic(pi2);
      generic_pairs += expect;
      bool ok = r.relevant == expect && (!r.relevant || r.i_star == pi1.rank());
      agree += ok;
      if (!ok && first.empty()) first = format(pi1) + " " + format(pi2);
    }
    return Outcome{agree == 50, std::to_string(agree) + "/50 agree, " + std::to_string(generic_pairs) +
                                    " generic pairs" + (first.empty() ? "" : "; first: " + first)};
  });

  // Pairs for the symmetry sweep: pi1 on integer exponents in [0,3], pi2 on half-integers in [-1/2,7/2].
  std::vector<std::pair<IrrRep, IrrRep>> pairs;
  {
    auto left = corpus(6, HalfInt(0), HalfInt(3));
    auto right = corpus(6, -kHalf, HalfInt::from_twice(7));
    for (const auto& a : left)
      for (const auto& b : right)
        if (a.rank() + b.rank() <= 6) pairs.emplace_back(a, b);
  }
  std::vector<char> relevant_flags(pairs.size(), 0);

  report(5, "symmetry and duality of relevance, combined support <= 6", 120.0, [&] {
    Tally t;
    parallel_for(pairs.size(), [&](std::size_t i) {
      bool r = false;
      t.add(checks::relevance_symmetry(pairs[i].first, pairs[i].second, &r));
      relevant_flags[i] = r;
    });
    long rel = std::count(relevant_flags.begin(), relevant_flags.end(), 1);
    Outcome o = t.outcome("pairs");
    o.detail += ", " + std::to_string(rel) + " relevant";
    return o;
  });

  report(6, "removal law on all reps with <= 7 points in [0,5]", 60.0, [&] {
    Tally t;
    DerivativeFn d = engine_derivative();
    parallel_for(reps.size(), [&](std::size_t i) { t.add(checks::removal_law(reps[i], window_of(reps[i]), d)); });
    return t.outcome("reps");
  });

  report(7, "inversion of derivatives and integrals", 60.0, [&] {
    Tally t;
    parallel_for(reps.size(), [&](std::size_t i) { t.add(checks::inversion(reps[i], window_of(reps[i]))); });
    return t.outcome("reps");
  });

  report(8, "eta update rules and strong implies plain commutation", 120.0, [&] {
    Tally t;
    std::atomic<long> strong{0};
    parallel_for(reps.size(), [&](std::size_t i) {
      auto w = window_of(reps[i]);
      auto bad = checks::eta_update(reps[i], w);
      long found = 0;
      auto more = checks::strong_implies_plain(reps[i], w, &found);
      strong += found;
      bad.insert(bad.end(), more.begin(), more.end());
      t.add(bad);
    });
    Outcome o = t.outcome("reps");
    o.detail += ", " + std::to_string(strong.load()) + " strong triples";
    return o;
  });

  report(9, "witness uniqueness on the relevant pairs of criterion 5", 120.0, [&] {
    Tally t;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (relevant_flags[i]) idx.push_back(i);
    parallel_for(idx.size(), [&](std::size_t k) {
      const auto& [a, b] = pairs[idx[k]];
      t.add(checks::witness_uniqueness(a, b));
    });
    return t.outcome("relevant pairs");
  });

  report(10, "Pieri truncation patterns, closed-form rows, double derivative closure", 60.0, [&] {
    Tally t;
    parallel_for(reps.size(), [&](std::size_t i) { t.add(checks::pieri_sanity(reps[i])); });
    return t.outcome("reps");
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
