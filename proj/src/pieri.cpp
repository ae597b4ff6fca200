#include "branchlaw/pieri.hpp"

#include <algorithm>
#include <map>

#include "branchlaw/enumerate.hpp"
#include "branchlaw/text.hpp"

namespace branchlaw {

namespace {

std::map<int, QuotientSet> collect(const IrrRep& pi, std::optional<int> only) {
  std::map<int, std::map<IrrRep, Multisegment>> found;
  std::map<int, QuotientSet> out;
  for_each_submultiset(csupp(pi), [&](const PointMultiset& s) {
    const int i = abs_size(s);
    if (only && *only != i) return;
    auto& row = found[i];
    for (const auto& m : multisegments_with_support(s)) {
      auto t = derivative_seq(pi, m, Side::right);
      if (!t) continue;
      auto it = row.find(*t);
      if (it == row.end()) {
        row.emplace(*t, minimize(pi, m, Side::right));
      } else if (m != it->second && is_minimal(pi, m, Side::right)) {
        out[i].collisions.push_back(format(*t) + ": " + format(it->second) + " and " + format(m));
      }
    }
  });
  for (auto& [i, row] : found)
    for (auto& [t, m] : row) out[i].quotients.push_back({t, m});
  return out;
}

}  // namespace

QuotientSet simple_quotients(const IrrRep& pi, int i) {
  if (i < 0 || i > pi.rank()) throw OutOfRange("index " + std::to_string(i) + " outside [0, " + std::to_string(pi.rank()) + "]");
  auto all = collect(pi, i);
  return std::move(all[i]);
}

bool in_truncation_patterns(const IrrRep& pi, int i, const IrrRep& tau) {
  const auto& segs = pi.zmult().segments();
  std::vector<Segment> distinct;
  std::vector<int> mult;
  for (const auto& d : segs) {
    if (!distinct.empty() && distinct.back() == d) {
      ++mult.back();
    } else {
      distinct.push_back(d);
      mult.push_back(1);
    }
  }
  std::vector<int> pick(distinct.size(), 0);
  while (true) {
    int total = 0;
    for (std::size_t k = 0; k < distinct.size(); ++k) total += pick[k] * LineTable::size(distinct[k].line());
    if (total == i) {
      Multisegment cand;
      for (std::size_t k = 0; k < distinct.size(); ++k) {
        for (int c = 0; c < mult[k] - pick[k]; ++c) cand.insert(distinct[k]);
        if (auto t = transform(distinct[k], Transform::trunc_right()))
          for (int c = 0; c < pick[k]; ++c) cand.insert(*t);
      }
      if (cand == tau.zmult()) return true;
    }
    std::size_t k = 0;
    while (k < pick.size() && pick[k] == mult[k]) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
  }
  return false;
}

PieriTable pieri_table(const IrrRep& pi) {
  PieriTable table;
  for (auto& [i, row] : collect(pi, std::nullopt)) {
    for (auto& c : row.collisions) table.collisions.push_back("i=" + std::to_string(i) + " " + c);
    for (const auto& q : row.quotients)
      if (!in_truncation_patterns(pi, i, q.target))
        table.violations.push_back("i=" + std::to_string(i) + " " + format(q.target));
    if (!row.quotients.empty()) table.rows.emplace(i, std::move(row.quotients));
  }
  return table;
}

}  // namespace branchlaw
