#include "support.hpp"

using namespace bltest;

namespace {

PointMultiset points(std::initializer_list<int> es) {
  PointMultiset s;
  for (int e : es) s.push_back({LineTable::default_line(), HalfInt(e)});
  return s;
}

// Point derivatives peel the free segment with the smallest a-end instead of the largest.
DerivativeFn corrupted_derivative() {
  DerivativeFn engine = engine_derivative();
  return [engine](const IrrRep& pi, const Segment& d) -> std::optional<IrrRep> {
    if (d.rel_length() != 1) return engine(pi, d);
    auto m = point_derivative(pi.zmult(), d.a_point(), PeelRule::smallest_a);
    if (!m) return std::nullopt;
    return IrrRep(*m);
  };
}

}  // namespace

TEST_CASE("enumerate multisegments") {
  auto a = enumerate_multisegments(points({0, 1}));
  CHECK(std::set<Multisegment>(a.begin(), a.end()) == std::set<Multisegment>{M("{[0],[1]}"), M("{[0,1]}")});
  CHECK(enumerate_multisegments(points({0, 0})) == std::vector<Multisegment>{M("{[0],[0]}")});
  CHECK(enumerate_multisegments(points({})) == std::vector<Multisegment>{M("{}")});
  CHECK(enumerate_multisegments(points({0, 1, 2})).size() == 4);
  CHECK_THROWS_AS(enumerate_multisegments(points({0, 1, 2, 3, 4, 5, 6, 7, 8})), LimitExceeded);
  CHECK(enumerate_multisegments(points({0, 1, 2, 3}), 4).size() == 8);
  for (const auto& m : enumerate_multisegments(points({0, 1, 1, 2, 3}))) CHECK(csupp(m) == points({0, 1, 1, 2, 3}));
}

TEST_CASE("derivative by inversion") {
  CHECK(derivative_by_inversion(Z("Z{[0],[1]}"), S("[0]")) == Z("Z{[1]}"));
  CHECK_FALSE(derivative_by_inversion(Z("Z{[0],[1]}"), S("[1]")).has_value());
  CHECK(derivative_by_inversion(Z("Z{[0,1]}"), S("[1]")) == Z("Z{[0]}"));
  CHECK_FALSE(derivative_by_inversion(Z("Z{[0,1]}"), S("[2]")).has_value());
  CHECK(derivative_by_inversion(Z("Z{[0,3]}"), S("[3]")) == Z("Z{[0,2]}"));
}

TEST_CASE("search oracles") {
  CHECK(hd_by_search(Z("Z{[0],[1],[2]}")) == M("{[0,2]}"));
  CHECK(hd_by_search(Z("Z{[0,1],[1]}")) == M("{[1],[1]}"));
  CHECK(is_minimal_exhaustive(Z("Z{[0],[1]}"), M("{[0,1]}"), Side::right));
  CHECK_FALSE(is_minimal_exhaustive(Z("Z{[0],[1]}"), M("{[0],[1]}"), Side::right));
}

TEST_CASE("corpora") {
  CHECK(corpus(2, HalfInt(0), HalfInt(1)).size() == 7);
  CHECK(corpus(0, HalfInt(0), HalfInt(3)) == std::vector<IrrRep>{Z("Z{}")});
  CHECK(window_segments(HalfInt(0), HalfInt(2)).size() == 6);
  CHECK(window_segments(kHalf, HalfInt::from_twice(3)).size() == 3);
  auto reps = corpus(4, HalfInt(0), HalfInt(2));
  CHECK(std::set<IrrRep>(reps.begin(), reps.end()).size() == reps.size());
  for (const auto& pi : reps) CHECK(pi.rank() <= 4);
}

TEST_CASE("individual checks pass on samples") {
  std::vector<IrrRep> samples{Z("Z{[0],[1],[2]}"), Z("Z{[0,2],[1]}"), Z("Z{[0,1],[1,2],[2]}"), Z("Z{[0],[0],[1,2]}")};
  for (const auto& pi : samples) {
    auto w = window_of(pi);
    CHECK(checks::removal_law(pi, w, engine_derivative()).empty());
    CHECK(checks::inversion(pi, w).empty());
    CHECK(checks::derivative_agreement(pi, w).empty());
    CHECK(checks::eta_update(pi, w).empty());
    CHECK(checks::integral_monotonicity(pi, w).empty());
    CHECK(checks::unlinked_commutation(pi, w).empty());
    long strong = 0;
    CHECK(checks::strong_implies_plain(pi, w, &strong).empty());
    CHECK(strong > 0);
    CHECK(checks::hd_law(pi).empty());
    CHECK(checks::pieri_sanity(pi).empty());
  }
  bool rel = false;
  CHECK(checks::relevance_symmetry(Z("Z{[0],[0],[-1,1]}"), Z("Z{[-1/2,1/2],[-1/2],[1/2]}"), &rel).empty());
  CHECK(rel);
  CHECK(checks::witness_uniqueness(Z("Z{[0],[0],[-1,1]}"), Z("Z{[-1/2,1/2],[-1/2],[1/2]}"), &rel).empty());
  CHECK(rel);
}

TEST_CASE("consistency suite") {
  for (std::uint64_t seed : {1u, 2u}) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.max_points = 6;
    Report r = consistency_suite(cfg);
    CHECK(r.seed == seed);
    CHECK(r.max_points == 6);
    CHECK(r.checks.size() >= 8);
    for (const auto& c : r.checks) {
      CHECK_MESSAGE(c.pass(), c.name, ": ", c.counterexamples.empty() ? "" : c.counterexamples.front());
      CHECK(c.instances > 0);
    }
    CHECK(r.pass());
  }
}

TEST_CASE("a corrupted peel rule is caught") {
  DerivativeFn bad = corrupted_derivative();
  long caught = 0;
  std::string example;
  for (const auto& pi : corpus(5, HalfInt(0), HalfInt(3))) {
    auto found = checks::removal_law(pi, window_of(pi), bad);
    caught += static_cast<long>(found.size());
    if (example.empty() && !found.empty()) example = found.front();
  }
  CHECK(caught > 0);
  CHECK_FALSE(example.empty());

  SuiteConfig cfg;
  cfg.seed = 1;
  cfg.derivative = bad;
  Report r = consistency_suite(cfg);
  CHECK_FALSE(r.pass());
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return !c.pass(); });
  REQUIRE(it != r.checks.end());
  CHECK_FALSE(it->counterexamples.empty());
}
