#include "branchlaw/calculus.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

#include "branchlaw/invariants.hpp"

namespace branchlaw {

namespace {

struct Bracket {
  std::vector<std::size_t> free_close;  // increasing a-end
  std::vector<std::size_t> free_open;   // increasing a-end
};

// ")" for segments ending at rho, "(" for segments ending one step below; a ")" is matched
// by the nearest unmatched "(" with smaller a-end.
Bracket bracket(const Multisegment& m, const CuspidalPoint& rho) {
  struct Item {
    HalfInt a;
    int open;
    std::size_t index;
  };
  std::vector<Item> items;
  const HalfInt below = rho.exp - kOne;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& d = m[i];
    if (d.line() != rho.line) continue;
    if (d.b() == rho.exp)
      items.push_back({d.a(), 0, i});
    else if (d.b() == below)
      items.push_back({d.a(), 1, i});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return std::tie(x.a, x.open, x.index) < std::tie(y.a, y.open, y.index); });
  Bracket br;
  for (const auto& it : items) {
    if (it.open) {
      br.free_open.push_back(it.index);
    } else if (!br.free_open.empty()) {
      br.free_open.pop_back();
    } else {
      br.free_close.push_back(it.index);
    }
  }
  return br;
}

struct SegKey {
  Multisegment m;
  Segment d;
  bool operator==(const SegKey&) const = default;
};

struct SegKeyHash {
  std::size_t operator()(const SegKey& k) const noexcept { return k.m.hash() * 31u ^ std::hash<Segment>{}(k.d); }
};

template <class V>
using Memo = std::unordered_map<SegKey, V, SegKeyHash>;

constexpr std::size_t kMemoLimit = 1 << 18;

Memo<Multisegment>& integral_memo() {
  thread_local Memo<Multisegment> memo;
  return memo;
}

Memo<std::optional<Multisegment>>& derivative_memo() {
  thread_local Memo<std::optional<Multisegment>> memo;
  return memo;
}

Multisegment right_integral(const Multisegment& m, const Segment& d);

std::optional<Multisegment> right_derivative(const Multisegment& m, const Segment& d) {
  auto& memo = derivative_memo();
  SegKey key{m, d};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const CuspidalPoint a = d.a_point();
  std::optional<Multisegment> result;
  int e = point_eps(m, a);
  if (e > 0) {
    Multisegment w = m;
    for (int i = 0; i < e; ++i) w = *point_derivative(w, a);
    std::optional<Multisegment> rest = w;
    if (d.a() < d.b()) rest = right_derivative(w, Segment(d.a() + kOne, d.b(), d.line()));
    if (rest) {
      Multisegment sigma = *rest;
      for (int i = 0; i < e - 1; ++i) sigma = point_integral(sigma, a);
      if (right_integral(sigma, d) == m) result = std::move(sigma);
    }
  }
  if (memo.size() > kMemoLimit) memo.clear();
  memo.emplace(std::move(key), result);
  return result;
}

Multisegment right_integral(const Multisegment& m, const Segment& d) {
  const CuspidalPoint a = d.a_point();
  if (d.a() == d.b()) return point_integral(m, a);
  auto& memo = integral_memo();
  SegKey key{m, d};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int k = point_eps(m, a);
  Multisegment w = m;
  for (int i = 0; i < k; ++i) w = *point_derivative(w, a);
  w = right_integral(w, Segment(d.a() + kOne, d.b(), d.line()));
  for (int i = 0; i <= k; ++i) w = point_integral(w, a);

  if (memo.size() > kMemoLimit) memo.clear();
  memo.emplace(std::move(key), w);
  return w;
}

}  // namespace

int point_eps(const Multisegment& m, const CuspidalPoint& rho) {
  return static_cast<int>(bracket(m, rho).free_close.size());
}

std::optional<Multisegment> point_derivative(const Multisegment& m, const CuspidalPoint& rho, PeelRule rule) {
  auto br = bracket(m, rho);
  if (br.free_close.empty()) return std::nullopt;
  std::size_t i = rule == PeelRule::largest_a ? br.free_close.back() : br.free_close.front();
  Multisegment out = m;
  out.replace_at(i, make_segment(m[i].a(), m[i].b() - kOne, m[i].line()));
  return out;
}

Multisegment point_integral(const Multisegment& m, const CuspidalPoint& rho) {
  auto br = bracket(m, rho);
  Multisegment out = m;
  if (br.free_open.empty()) {
    out.insert(Segment::point(rho));
  } else {
    std::size_t i = br.free_open.front();
    out.replace_at(i, Segment(m[i].a(), rho.exp, m[i].line()));
  }
  return out;
}

IrrRep integral(const IrrRep& pi, const Segment& d, Side side) {
  if (side == Side::right) return IrrRep(right_integral(pi.zmult(), d));
  return dual(IrrRep(right_integral(dual(pi.zmult()), dual(d))));
}

std::optional<IrrRep> derivative(const IrrRep& pi, const Segment& d, Side side) {
  if (side == Side::right) {
    auto r = right_derivative(pi.zmult(), d);
    if (!r) return std::nullopt;
    return IrrRep(std::move(*r));
  }
  auto r = right_derivative(dual(pi.zmult()), dual(d));
  if (!r) return std::nullopt;
  return dual(IrrRep(std::move(*r)));
}

std::optional<IrrRep> derivative_seq(const IrrRep& pi, const Multisegment& m, Side side) {
  if (side == Side::left) {
    auto r = derivative_seq(dual(pi), dual(m), Side::right);
    if (!r) return std::nullopt;
    return dual(*r);
  }
  Multisegment cur = pi.zmult();
  for (const auto& d : order(m, OrderMode::ascending)) {
    auto next = right_derivative(cur, d);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return IrrRep(std::move(cur));
}

IrrRep integral_seq(const IrrRep& pi, const Multisegment& m, Side side) {
  if (side == Side::right) return dual(integral_seq(dual(pi), dual(m), Side::left));
  IrrRep cur = pi;
  for (const auto& d : order(m, OrderMode::ascending)) cur = integral(cur, d, Side::left);
  return cur;
}

IrrRep highest(const IrrRep& pi, Side side, bool shifted) {
  if (side == Side::right) {
    IrrRep r = transform(pi, Transform::trunc_right());
    return shifted ? shift(r, kHalf) : r;
  }
  IrrRep r = transform(pi, Transform::trunc_left());
  return shifted ? shift(r, -kHalf) : r;
}

Multisegment double_derivative_completion(const IrrRep& pi, const Multisegment& m) {
  if (!derivative_seq(pi, m, Side::right)) throw VanishingDerivative("D_m(pi) = 0");
  return removal(m, hd(pi, Side::right));
}

Multisegment double_integral_completion(const IrrRep& pi, const Multisegment& m) {
  IrrRep tau = integral_seq(pi, m, Side::left);
  IrrRep tau_plus = transform(tau, Transform::ext_right());
  Multisegment h = hd(tau_plus, Side::right);
  IrrRep lifted = integral_seq(tau, h, Side::right);
  // Left double derivative completion of (lifted, m), read through duality.
  Multisegment n = dual(removal(dual(m), hd(dual(lifted), Side::right)));
  return shift(n, -kOne);
}

IrrRep thicken(const IrrRep& pi) { return transform(pi, Transform::ext_left()); }

bool is_thickened(const IrrRep& pi) {
  return std::all_of(pi.zmult().begin(), pi.zmult().end(), [](const Segment& d) { return d.rel_length() >= 2; });
}

Multisegment langlands_to_zelevinsky(const Multisegment& m) {
  // Groups of mutually comparable segments evolve independently.
  std::map<std::pair<LineId, int>, std::vector<Segment>> groups;
  for (const auto& d : m) {
    int parity = ((d.a().twice() % 2) + 2) % 2;
    groups[{d.line(), parity}].push_back(d);
  }
  std::vector<Segment> out;
  for (auto& [key, segs] : groups) {
    std::vector<Segment> rest = std::move(segs);
    while (!rest.empty()) {
      HalfInt e = rest.front().b();
      for (const auto& d : rest) e = std::max(e, d.b());
      std::vector<std::size_t> chain;
      std::optional<HalfInt> prev_a;
      for (HalfInt end = e;; end = end - kOne) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < rest.size(); ++i) {
          const auto& d = rest[i];
          if (d.b() != end) continue;
          if (prev_a && !(d.a() < *prev_a)) continue;
          if (!pick || rest[*pick].a() < d.a()) pick = i;
        }
        if (!pick) break;
        chain.push_back(*pick);
        prev_a = rest[*pick].a();
      }
      const auto k = static_cast<int>(chain.size());
      out.emplace_back(e - HalfInt(k - 1), e, key.first);
      std::vector<Segment> next;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (std::find(chain.begin(), chain.end(), i) == chain.end()) {
          next.push_back(rest[i]);
        } else if (auto t = make_segment(rest[i].a(), rest[i].b() - kOne, rest[i].line())) {
          next.push_back(*t);
        }
      }
      rest = std::move(next);
    }
  }
  return Multisegment(std::move(out));
}

void clear_calculus_caches() {
  integral_memo().clear();
  derivative_memo().clear();
}

}  // namespace branchlaw
