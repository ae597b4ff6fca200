#include "branchlaw/relevance.hpp"

#include <algorithm>
#include <map>

#include "branchlaw/enumerate.hpp"

namespace branchlaw {

namespace {

struct Target {
  int size;
  IrrRep rep;
  Multisegment n;
};

// Ld-minimal multisegments of pi2 with their targets, ordered by l_a.
std::vector<Target> left_targets(const IrrRep& pi2) {
  std::vector<Target> out;
  std::map<IrrRep, std::size_t> seen;
  for_each_submultiset(csupp(pi2), [&](const PointMultiset& s) {
    for (const auto& n : multisegments_with_support(s)) {
      auto t = derivative_seq(pi2, n, Side::left);
      if (!t || seen.count(*t)) continue;
      seen.emplace(*t, out.size());
      out.push_back({abs_size(s), *t, minimize(pi2, n, Side::left)});
    }
  });
  return out;
}

std::optional<Multisegment> right_solution(const IrrRep& pi, const IrrRep& target) {
  auto rest = multiset_difference(csupp(pi), csupp(target));
  if (!rest) return std::nullopt;
  for (const auto& m : multisegments_with_support(*rest))
    if (derivative_seq(pi, m, Side::right) == target) return minimize(pi, m, Side::right);
  return std::nullopt;
}

}  // namespace

RelevanceResult relevant(const IrrRep& pi1, const IrrRep& pi2, RelevanceOptions opts) {
  const IrrRep shifted = shift(pi1, kHalf);
  RelevanceResult res;
  for (const auto& t : left_targets(pi2)) {
    auto m = right_solution(shifted, t.rep);
    if (!m) continue;
    if (!strongly_commutative_multi(*m, t.n, shifted).verdict) continue;
    if (!res.relevant) {
      res.relevant = true;
      res.i_star = m->abs_length();
      res.witness_m = *m;
      res.witness_n = t.n;
      res.target = t.rep;
    }
    if (!opts.exhaustive) break;
    res.all_witnesses.push_back({*m, t.n, t.rep});
  }
  return res;
}

RelevanceResult branch(const IrrRep& pi, const IrrRep& pip) {
  if (pi.rank() != pip.rank() + 1)
    throw RankMismatch("rank " + std::to_string(pi.rank()) + " vs " + std::to_string(pip.rank()) + " + 1");
  return relevant(pi, pip);
}

int smallest_derivative_index(const Multisegment& m, const Multisegment& n, const IrrRep& pi) {
  if (!strongly_commutative_multi(m, n, pi).verdict) throw NotCommutative("triple is not strongly RdLi-commutative");
  return m.abs_length();
}

bool dual_check(const IrrRep& pi1, const IrrRep& pi2) {
  bool r = relevant(pi1, pi2).relevant;
  if (relevant(dual(pi1), dual(pi2)).relevant != r) throw DualityViolation("relevance changes under duality");
  return r;
}

bool symmetry_check(const IrrRep& pi1, const IrrRep& pi2) {
  bool r = relevant(pi1, pi2).relevant;
  if (relevant(pi2, pi1).relevant != r) throw SymmetryViolation("relevance is not symmetric");
  if (relevant(dual(pi1), dual(pi2)).relevant != r) throw DualityViolation("relevance changes under duality");
  return r;
}

bool is_generic(const IrrRep& pi) {
  Multisegment l = langlands_to_zelevinsky(pi.zmult());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (linked(l[i], l[j])) return false;
  return true;
}

bool zero_relative_rank(const IrrRep& pi1, const IrrRep& pi2) {
  for (const auto& p : csupp(pi1))
    for (const auto& q : csupp(pi2))
      if (p.line == q.line && !(p.exp - q.exp).is_integer()) return false;
  return true;
}

}  // namespace branchlaw
