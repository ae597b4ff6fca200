#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "branchlaw/enumerate.hpp"
#include "branchlaw/oracle.hpp"
#include "branchlaw/text.hpp"

namespace bltest {

using namespace branchlaw;

inline IrrRep Z(const std::string& s) { return parse_rep(s); }
inline Segment S(const std::string& s) { return parse_segment(s); }
inline Multisegment M(const std::string& s) { return parse_multisegment(s); }

// Every segment [a,b] with a, b in [lo, hi] on the default line.
inline std::vector<Segment> segments_in(int lo, int hi) {
  std::vector<Segment> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) out.emplace_back(HalfInt(a), HalfInt(b));
  return out;
}

inline std::vector<Segment> window_of(const IrrRep& pi) {
  auto s = csupp(pi);
  if (s.empty()) return {};
  return window_segments(s.front().exp, s.back().exp);
}

// A random multisegment with n segments on the default line, endpoints in [lo, hi].
inline Multisegment random_mult(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi);
  std::vector<Segment> segs;
  for (int i = 0; i < n; ++i) {
    int a = e(rng), b = e(rng);
    if (a > b) std::swap(a, b);
    segs.emplace_back(HalfInt(a), HalfInt(b));
  }
  return Multisegment(segs);
}

// Reference <=_Z by breadth-first search over intersection-union moves.
inline bool leq_by_search(const Multisegment& m1, const Multisegment& m2) {
  std::set<Multisegment> seen{m2};
  std::vector<Multisegment> frontier{m2};
  while (!frontier.empty()) {
    std::vector<Multisegment> next;
    for (const auto& m : frontier) {
      if (m == m1) return true;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          if (i != j && linked(m[i], m[j])) {
            auto low = intersection_union(m, m[i], m[j]);
            if (seen.insert(low).second) next.push_back(low);
          }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace bltest
