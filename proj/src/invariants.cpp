#include "branchlaw/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace branchlaw {

int EtaVector::abs() const { return std::accumulate(comps.begin(), comps.end(), 0); }

bool EtaVector::leq(const EtaVector& o) const {
  if (comps.size() != o.comps.size()) return false;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i] > o.comps[i]) return false;
  return true;
}

int eps_on_mult(const Segment& d, const Multisegment& h) {
  int n = 0;
  for (const auto& x : h)
    if (same_class(x, d) && x.a() == d.a() && x.b() >= d.b()) ++n;
  return n;
}

int eps(const IrrRep& pi, const Segment& d, Side side) {
  int k = 0;
  auto cur = derivative(pi, d, side);
  while (cur) {
    ++k;
    cur = derivative(*cur, d, side);
  }
  return k;
}

EtaVector eta(const IrrRep& pi, const Segment& frame, Side side) {
  EtaVector v{frame, {}};
  for (int k = 0; k < frame.rel_length(); ++k) {
    Segment sub = side == Side::right ? Segment(frame.a() + HalfInt(k), frame.b(), frame.line())
                                      : Segment(frame.a(), frame.b() - HalfInt(k), frame.line());
    v.comps.push_back(eps(pi, sub, side));
  }
  return v;
}

namespace {

Multisegment right_hd(const IrrRep& pi) {
  thread_local std::unordered_map<Multisegment, Multisegment> memo;
  if (auto it = memo.find(pi.zmult()); it != memo.end()) return it->second;

  std::vector<Segment> start;
  for (const auto& d : pi.zmult()) start.push_back(Segment::point(d.b_point()));
  Multisegment h(std::move(start));
  const IrrRep target = highest(pi, Side::right);
  if (derivative_seq(pi, h, Side::right) != target)
    throw VanishingDerivative("singleton chain does not realize the highest derivative");
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& next : intersection_union_moves(h)) {
      if (derivative_seq(pi, next, Side::right) == target) {
        h = next;
        moved = true;
        break;
      }
    }
  }
  if (memo.size() > (1u << 16)) memo.clear();
  memo.emplace(pi.zmult(), h);
  return h;
}

}  // namespace

Multisegment hd(const IrrRep& pi, Side side) {
  if (side == Side::right) return right_hd(pi);
  return dual(right_hd(dual(pi)));
}

Multisegment mx(const IrrRep& pi, const Segment& d, Side side) {
  std::vector<Segment> out;
  EtaVector v = eta(pi, d, side);
  for (int k = 0; k < d.rel_length(); ++k) {
    Segment sub = side == Side::right ? Segment(d.a() + HalfInt(k), d.b(), d.line())
                                      : Segment(d.a(), d.b() - HalfInt(k), d.line());
    for (int c = 0; c < v.comps[static_cast<std::size_t>(k)]; ++c) out.push_back(sub);
  }
  return Multisegment(std::move(out));
}

Multisegment mxpt(const IrrRep& pi, const CuspidalPoint& rho) {
  std::vector<Segment> out;
  std::optional<HalfInt> lowest;
  for (const auto& p : csupp(pi))
    if (comparable(p, rho) && p.exp <= rho.exp && (!lowest || p.exp < *lowest)) lowest = p.exp;
  if (!lowest) return {};
  for (HalfInt a = rho.exp; a >= *lowest; a = a - kOne) {
    Segment d(a, rho.exp, rho.line);
    int k = eps(pi, d);
    for (int c = 0; c < k; ++c) out.push_back(d);
  }
  return Multisegment(std::move(out));
}

RemovalResult removal(const Segment& d, const Multisegment& h) {
  const HalfInt top = d.b();
  std::vector<Segment> pool(h.begin(), h.end());
  std::vector<Segment> seq;

  auto take = [&pool](std::size_t i) {
    Segment s = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    return s;
  };

  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& x = pool[i];
    if (!same_class(x, d) || x.a() != d.a() || x.b() < top) continue;
    if (!first || x.b() < pool[*first].b()) first = i;
  }
  if (!first) throw Inapplicable("no segment [" + d.a().str() + ", b'] with b' >= " + top.str());
  seq.push_back(take(*first));

  while (true) {
    const Segment& prev = seq.back();
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& x = pool[i];
      if (!same_class(x, d)) continue;
      if (!(prev.a() < x.a() && x.b() < prev.b())) continue;
      if (x.b() < top || x.a() > top + kOne) continue;
      if (!pick || std::pair(x.a(), x.b()) < std::pair(pool[*pick].a(), pool[*pick].b())) pick = i;
    }
    if (!pick) break;
    seq.push_back(take(*pick));
  }

  Multisegment result(std::move(pool));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    HalfInt a = i + 1 < seq.size() ? seq[i + 1].a() : top + kOne;
    if (auto t = make_segment(a, seq[i].b(), seq[i].line())) result.insert(*t);
  }
  return {std::move(result), std::move(seq)};
}

Multisegment removal(const Multisegment& m, const Multisegment& h) {
  Multisegment cur = h;
  for (const auto& d : order(m, OrderMode::ascending)) cur = removal(d, cur).result;
  return cur;
}

}  // namespace branchlaw
