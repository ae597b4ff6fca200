#include "support.hpp"

using namespace bltest;

TEST_CASE("half integers") {
  CHECK(HalfInt(1) + kHalf == HalfInt::from_twice(3));
  CHECK((-kHalf).twice() == -1);
  CHECK(HalfInt::from_twice(3).str() == "3/2");
  CHECK(HalfInt(-2).str() == "-2");
  CHECK_FALSE(kHalf.is_integer());
  CHECK(HalfInt(0) < kHalf);
}

TEST_CASE("line table") {
  CHECK(LineTable::name(LineTable::default_line()) == "r");
  CHECK(LineTable::size(LineTable::default_line()) == 1);
  CHECK(LineTable::dual(LineTable::default_line()) == LineTable::default_line());
  LineId c = LineTable::intern("core_c3", 3);
  CHECK(LineTable::intern("core_c3") == c);
  CHECK(LineTable::size(c) == 3);
  CHECK(LineTable::find("core_c3") == c);
  CHECK_FALSE(LineTable::find("core_missing").has_value());
}

TEST_CASE("segments") {
  CHECK_THROWS_AS(Segment(HalfInt(1), HalfInt(0)), InvalidSegment);
  CHECK_THROWS_AS(Segment(HalfInt(0), kHalf), InvalidSegment);
  CHECK_FALSE(make_segment(HalfInt(2), HalfInt(1), LineTable::default_line()).has_value());
  Segment d = S("[-1/2,3/2]");
  CHECK(d.rel_length() == 3);
  CHECK(d.abs_length() == 3);
  CHECK(d.points().size() == 3);
  CHECK(S("[0,1]@core_c3").abs_length() == 6);
  CHECK(d.contains(S("[1/2]")));
  CHECK_FALSE(d.contains(S("[1]")));
}

TEST_CASE("linked") {
  CHECK(linked(S("[0,2]"), S("[1,3]")));
  CHECK_FALSE(linked(S("[0,2]"), S("[1,2]")));
  CHECK_FALSE(linked(S("[0,1]"), S("[3,4]")));
  CHECK(linked(S("[0,1]"), S("[2,3]")));
  CHECK_FALSE(linked(S("[0]"), S("[1/2]")));
  CHECK_FALSE(linked(S("[0]"), S("[1]@core_s")));
}

TEST_CASE("precedes") {
  CHECK(seg_precedes(S("[0,1]"), S("[1,2]")));
  CHECK_FALSE(seg_precedes(S("[1,2]"), S("[0,1]")));
  CHECK_FALSE(seg_precedes(S("[0,1]"), S("[1/2,3/2]")));
}

TEST_CASE("union and intersection") {
  CHECK(seg_union(S("[0,1]"), S("[2,3]")) == S("[0,3]"));
  CHECK_FALSE(seg_union(S("[0,1]"), S("[3,4]")).has_value());
  CHECK(seg_intersection(S("[0,2]"), S("[1,3]")) == S("[1,2]"));
  CHECK_FALSE(seg_intersection(S("[0,1]"), S("[2,3]")).has_value());
}

TEST_CASE("intersection-union") {
  CHECK(intersection_union(M("{[0,2],[1,3]}"), S("[0,2]"), S("[1,3]")) == M("{[0,3],[1,2]}"));
  CHECK(intersection_union(M("{[0,1],[2,3]}"), S("[0,1]"), S("[2,3]")) == M("{[0,3]}"));
  CHECK_THROWS_AS(intersection_union(M("{[0,2],[1,2]}"), S("[0,2]"), S("[1,2]")), NotLinked);
}

TEST_CASE("leq_Z examples") {
  CHECK(leq_Z(M("{[0,3],[1,2]}"), M("{[0,2],[1,3]}")));
  CHECK(leq_Z(M("{[0,3]}"), M("{[0,1],[2,3]}")));
  CHECK_FALSE(leq_Z(M("{[0,2],[1,3]}"), M("{[0,3],[1,2]}")));
  CHECK(leq_Z(M("{[0],[1]}"), M("{[0],[1]}")));
}

TEST_CASE("leq_Z agrees with move search and is antisymmetric") {
  for (auto pts : {std::vector<int>{0, 1, 2, 3}, {0, 1, 1, 2, 3}, {0, 0, 1, 2, 2, 3}, {0, 1, 2, 3, 4, 5}}) {
    PointMultiset s;
    for (int p : pts) s.push_back({LineTable::default_line(), HalfInt(p)});
    auto all = multisegments_with_support(s);
    for (const auto& a : all)
      for (const auto& b : all) {
        bool ab = leq_Z(a, b);
        CHECK(ab == leq_by_search(a, b));
        if (ab && leq_Z(b, a)) CHECK(a == b);
      }
  }
}

TEST_CASE("intersection-union preserves support") {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    Multisegment m = random_mult(rng, 4, 0, 4);
    for (const auto& low : intersection_union_moves(m)) {
      CHECK(csupp(low) == csupp(m));
      CHECK(leq_Z(low, m));
      CHECK(low != m);
    }
  }
}

TEST_CASE("multiset support") {
  CHECK(csupp(M("{[0,1],[1]}")).size() == 3);
  PointMultiset x = csupp(M("{[0,2]}")), y = csupp(M("{[1]}"));
  CHECK(multiset_difference(x, y) == csupp(M("{[0],[2]}")));
  CHECK_FALSE(multiset_difference(y, x).has_value());
  CHECK(multiset_union(x, y) == csupp(M("{[0,2],[1]}")));
}

TEST_CASE("multisegment edits") {
  Multisegment m = M("{[0],[0],[1,2]}");
  CHECK(m.count(S("[0]")) == 2);
  CHECK(m.minus(S("[0]")) == M("{[0],[1,2]}"));
  CHECK(m.plus(S("[3]")).size() == 4);
  CHECK_THROWS_AS(m.erase_one(S("[5]")), NotPresent);
  CHECK(m.abs_length() == 4);
  CHECK(M("{[1,2],[0]}") == M("{[0],[1,2]}"));
  CHECK(M("{[1,2],[0]}").hash() == M("{[0],[1,2]}").hash());
}

TEST_CASE("slices") {
  auto [a, b] = slices(M("{[0,2],[0,0],[1,3]}"), {LineTable::default_line(), HalfInt(0)});
  CHECK(a == M("{[0,2],[0]}"));
  CHECK(b == M("{[0]}"));
  auto [e1, e2] = slices(M("{}"), {LineTable::default_line(), HalfInt(0)});
  CHECK(e1.empty());
  CHECK(e2.empty());
  auto [c1, c2] = slices(M("{[1/2,3/2]}"), {LineTable::default_line(), HalfInt(1)});
  CHECK(c1.empty());
  CHECK(c2.empty());
}

TEST_CASE("ascending order") {
  CHECK(order(M("{[1,2],[0,1]}"), OrderMode::ascending) == std::vector<Segment>{S("[0,1]"), S("[1,2]")});
  CHECK(order(M("{[0],[2]}"), OrderMode::ascending) == std::vector<Segment>{S("[0]"), S("[2]")});
  CHECK(order(M("{}"), OrderMode::ascending).empty());
  std::mt19937 rng(5);
  for (int k = 0; k < 300; ++k) {
    Multisegment m = random_mult(rng, 5, -2, 3);
    auto up = order(m, OrderMode::ascending);
    CHECK(is_ascending(up));
    // no later segment precedes an earlier one
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) CHECK_FALSE(seg_precedes(up[j], up[i]));
    auto down = order(m, OrderMode::descending);
    CHECK(is_descending(down));
    std::vector<Segment> rev(up.rbegin(), up.rend());
    CHECK(is_descending(rev));
  }
}

TEST_CASE("transforms") {
  CHECK(shift(M("{[0],[0],[-1,1]}"), kHalf) == M("{[1/2],[1/2],[-1/2,3/2]}"));
  CHECK(dual(M("{[0,1]}")) == M("{[-1,0]}"));
  CHECK(transform(M("{[0,0],[1,2]}"), Transform::trunc_right()) == M("{[1,1]}"));
  CHECK(transform(M("{[0,0],[1,2]}"), Transform::trunc_left()) == M("{[2]}"));
  CHECK(transform(M("{[0],[2]}"), Transform::ext_left()) == M("{[-1,0],[1,2]}"));
  CHECK(transform(M("{[0],[2]}"), Transform::ext_right()) == M("{[0,1],[2,3]}"));
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    IrrRep pi(random_mult(rng, 4, -3, 3));
    CHECK(dual(dual(pi)) == pi);
    CHECK(shift(shift(pi, HalfInt::from_twice(3)), HalfInt::from_twice(-3)) == pi);
    CHECK(csupp(dual(pi)).size() == csupp(pi).size());
  }
}

TEST_CASE("dual partner lines") {
  LineId a = LineTable::intern("core_a"), b = LineTable::intern("core_b");
  LineTable::set_dual(a, b);
  CHECK(LineTable::dual(a) == b);
  CHECK(LineTable::dual(b) == a);
  CHECK(dual(S("[0,1]@core_a")) == S("[-1,0]@core_b"));
}
