#include "branchlaw/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace branchlaw {

namespace {

struct PointsHash {
  std::size_t operator()(const PointMultiset& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& p : s) {
      h ^= (static_cast<std::size_t>(p.line.value) << 20) ^ static_cast<std::size_t>(static_cast<unsigned>(p.exp.twice()));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// One coset of one line: counts[k] points at exponent base + k.
void fill_class(std::vector<int>& counts, std::size_t from, HalfInt base, LineId line, std::vector<Segment>& cur,
                std::vector<std::vector<Segment>>& out) {
  while (from < counts.size() && counts[from] == 0) ++from;
  if (from == counts.size()) {
    out.push_back(cur);
    return;
  }
  HalfInt a = base + HalfInt(static_cast<int>(from));
  HalfInt min_b = a;
  if (!cur.empty() && cur.back().a() == a) min_b = cur.back().b();
  for (std::size_t end = from; end < counts.size() && counts[end] > 0; ++end) {
    HalfInt b = base + HalfInt(static_cast<int>(end));
    for (std::size_t k = from; k <= end; ++k) --counts[k];
    if (b >= min_b) {
      cur.emplace_back(a, b, line);
      fill_class(counts, from, base, line, cur, out);
      cur.pop_back();
    }
    for (std::size_t k = from; k <= end; ++k) ++counts[k];
  }
}

std::vector<Multisegment> build(const PointMultiset& s) {
  std::map<std::pair<LineId, int>, std::vector<HalfInt>> classes;
  for (const auto& p : s) classes[{p.line, ((p.exp.twice() % 2) + 2) % 2}].push_back(p.exp);
  std::vector<std::vector<Segment>> acc{{}};
  for (auto& [key, exps] : classes) {
    HalfInt lo = *std::min_element(exps.begin(), exps.end());
    HalfInt hi = *std::max_element(exps.begin(), exps.end());
    std::vector<int> counts(static_cast<std::size_t>((hi - lo).twice() / 2 + 1), 0);
    for (auto e : exps) ++counts[static_cast<std::size_t>((e - lo).twice() / 2)];
    std::vector<std::vector<Segment>> parts;
    std::vector<Segment> cur;
    fill_class(counts, 0, lo, key.first, cur, parts);
    std::vector<std::vector<Segment>> next;
    for (const auto& x : acc)
      for (const auto& y : parts) {
        auto z = x;
        z.insert(z.end(), y.begin(), y.end());
        next.push_back(std::move(z));
      }
    acc = std::move(next);
  }
  std::vector<Multisegment> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Multisegment> multisegments_with_support(const PointMultiset& s) {
  thread_local std::unordered_map<PointMultiset, std::vector<Multisegment>, PointsHash> memo;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  if (memo.size() > (1u << 14)) memo.clear();
  return memo.emplace(s, build(s)).first->second;
}

int abs_size(const PointMultiset& s) {
  int n = 0;
  for (const auto& p : s) n += LineTable::size(p.line);
  return n;
}

void for_each_submultiset(const PointMultiset& s, const std::function<void(const PointMultiset&)>& f) {
  std::vector<CuspidalPoint> distinct;
  std::vector<int> mult;
  for (const auto& p : s) {
    if (!distinct.empty() && distinct.back() == p) {
      ++mult.back();
    } else {
      distinct.push_back(p);
      mult.push_back(1);
    }
  }
  std::vector<PointMultiset> all;
  std::vector<int> pick(distinct.size(), 0);
  while (true) {
    PointMultiset sub;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      for (int k = 0; k < pick[i]; ++k) sub.push_back(distinct[i]);
    all.push_back(std::move(sub));
    std::size_t i = 0;
    while (i < pick.size() && pick[i] == mult[i]) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  std::stable_sort(all.begin(), all.end(), [](const PointMultiset& x, const PointMultiset& y) {
    int ax = abs_size(x), ay = abs_size(y);
    if (ax != ay) return ax < ay;
    return x < y;
  });
  for (const auto& sub : all) f(sub);
}

}  // namespace branchlaw
