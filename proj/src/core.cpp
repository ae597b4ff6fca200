#include "branchlaw/core.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace branchlaw {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

struct LineEntry {
  std::string name;
  int size;
  std::uint32_t dual;
};

struct LineRegistry {
  std::shared_mutex mu;
  std::deque<LineEntry> entries{{"r", 1, 0}};
  std::unordered_map<std::string, std::uint32_t> index{{"r", 0}};
};

LineRegistry& registry() {
  static LineRegistry r;
  return r;
}

const LineEntry& entry(LineRegistry& reg, LineId id) {
  if (id.value >= reg.entries.size()) throw OutOfRange("unknown line id " + std::to_string(id.value));
  return reg.entries[id.value];
}

}  // namespace

LineId LineTable::intern(std::string_view name, std::optional<int> size) {
  if (size && *size < 1) throw InvalidSegment("line size must be positive");
  auto& reg = registry();
  std::unique_lock lock(reg.mu);
  auto it = reg.index.find(std::string(name));
  if (it != reg.index.end()) {
    auto& e = reg.entries[it->second];
    if (size && *size != e.size)
      throw InvalidSegment("line " + e.name + " already has size " + std::to_string(e.size));
    return LineId{it->second};
  }
  auto id = static_cast<std::uint32_t>(reg.entries.size());
  reg.entries.push_back({std::string(name), size.value_or(1), id});
  reg.index.emplace(std::string(name), id);
  return LineId{id};
}

std::optional<LineId> LineTable::find(std::string_view name) {
  auto& reg = registry();
  std::shared_lock lock(reg.mu);
  auto it = reg.index.find(std::string(name));
  if (it == reg.index.end()) return std::nullopt;
  return LineId{it->second};
}

std::string LineTable::name(LineId id) {
  auto& reg = registry();
  std::shared_lock lock(reg.mu);
  return entry(reg, id).name;
}

int LineTable::size(LineId id) {
  if (id.value == 0) return 1;
  auto& reg = registry();
  std::shared_lock lock(reg.mu);
  return entry(reg, id).size;
}

LineId LineTable::dual(LineId id) {
  if (id.value == 0) return id;
  auto& reg = registry();
  std::shared_lock lock(reg.mu);
  return LineId{entry(reg, id).dual};
}

void LineTable::set_dual(LineId a, LineId b) {
  auto& reg = registry();
  std::unique_lock lock(reg.mu);
  auto& ea = reg.entries.at(a.value);
  auto& eb = reg.entries.at(b.value);
  if (ea.size != eb.size) throw InvalidSegment("dual lines must have equal size");
  reg.entries[ea.dual].dual = ea.dual;
  reg.entries[eb.dual].dual = eb.dual;
  ea.dual = b.value;
  eb.dual = a.value;
}

bool comparable(const CuspidalPoint& p, const CuspidalPoint& q) {
  return p.line == q.line && (p.exp - q.exp).is_integer();
}

Segment::Segment(HalfInt a, HalfInt b, LineId line) : line_(line), a_(a), b_(b) {
  if (!(b - a).is_integer()) throw InvalidSegment("endpoints " + a.str() + ", " + b.str() + " differ by a half-integer");
  if (b < a) throw InvalidSegment("empty segment [" + a.str() + "," + b.str() + "]");
}

int Segment::abs_length() const { return rel_length() * LineTable::size(line_); }

bool Segment::contains(const CuspidalPoint& p) const {
  return p.line == line_ && (p.exp - a_).is_integer() && a_ <= p.exp && p.exp <= b_;
}

bool Segment::contains(const Segment& d) const {
  return same_class(*this, d) && a_ <= d.a_ && d.b_ <= b_;
}

PointMultiset Segment::points() const {
  PointMultiset out;
  for (HalfInt e = a_; e <= b_; e += kOne) out.push_back({line_, e});
  return out;
}

std::optional<Segment> make_segment(HalfInt a, HalfInt b, LineId line) {
  if (b < a) return std::nullopt;
  return Segment(a, b, line);
}

bool same_class(const Segment& d1, const Segment& d2) {
  return d1.line() == d2.line() && (d1.a() - d2.a()).is_integer();
}

bool linked(const Segment& d1, const Segment& d2) {
  if (!same_class(d1, d2)) return false;
  if (d1.contains(d2) || d2.contains(d1)) return false;
  return std::max(d1.a(), d2.a()) <= std::min(d1.b(), d2.b()) + kOne;
}

bool seg_precedes(const Segment& d1, const Segment& d2) { return linked(d1, d2) && d1.b() < d2.b(); }

std::optional<Segment> seg_union(const Segment& d1, const Segment& d2) {
  if (!same_class(d1, d2)) return std::nullopt;
  if (std::max(d1.a(), d2.a()) > std::min(d1.b(), d2.b()) + kOne) return std::nullopt;
  return Segment(std::min(d1.a(), d2.a()), std::max(d1.b(), d2.b()), d1.line());
}

std::optional<Segment> seg_intersection(const Segment& d1, const Segment& d2) {
  if (!same_class(d1, d2)) return std::nullopt;
  return make_segment(std::max(d1.a(), d2.a()), std::min(d1.b(), d2.b()), d1.line());
}

Multisegment::Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {
  std::sort(segs_.begin(), segs_.end());
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

std::size_t Multisegment::count(const Segment& d) const {
  auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), d);
  return static_cast<std::size_t>(hi - lo);
}

void Multisegment::insert(const Segment& d) { segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), d), d); }

void Multisegment::erase_one(const Segment& d) {
  auto it = std::lower_bound(segs_.begin(), segs_.end(), d);
  if (it == segs_.end() || *it != d) throw NotPresent("segment not in multisegment");
  segs_.erase(it);
}

void Multisegment::replace_at(std::size_t i, std::optional<Segment> d) {
  segs_.erase(segs_.begin() + static_cast<std::ptrdiff_t>(i));
  if (d) insert(*d);
}

Multisegment Multisegment::plus(const Segment& d) const {
  Multisegment m = *this;
  m.insert(d);
  return m;
}

Multisegment Multisegment::minus(const Segment& d) const {
  Multisegment m = *this;
  m.erase_one(d);
  return m;
}

Multisegment Multisegment::operator+(const Multisegment& o) const {
  std::vector<Segment> v;
  v.reserve(segs_.size() + o.segs_.size());
  std::merge(segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end(), std::back_inserter(v));
  Multisegment m;
  m.segs_ = std::move(v);
  return m;
}

int Multisegment::abs_length() const {
  int n = 0;
  for (const auto& d : segs_) n += d.abs_length();
  return n;
}

std::size_t Multisegment::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& d : segs_) {
    h ^= std::hash<Segment>{}(d);
    h *= 1099511628211ull;
  }
  return h;
}

PointMultiset csupp(const Multisegment& m) {
  PointMultiset out;
  for (const auto& d : m)
    for (HalfInt e = d.a(); e <= d.b(); e += kOne) out.push_back({d.line(), e});
  std::sort(out.begin(), out.end());
  return out;
}

PointMultiset multiset_union(const PointMultiset& x, const PointMultiset& y) {
  PointMultiset out;
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

std::optional<PointMultiset> multiset_difference(const PointMultiset& x, const PointMultiset& y) {
  PointMultiset out;
  std::size_t j = 0;
  for (const auto& p : x) {
    if (j < y.size() && y[j] == p) {
      ++j;
    } else {
      if (j < y.size() && y[j] < p) return std::nullopt;
      out.push_back(p);
    }
  }
  if (j != y.size()) return std::nullopt;
  return out;
}

Multisegment intersection_union(const Multisegment& m, const Segment& d1, const Segment& d2) {
  if (!linked(d1, d2)) throw NotLinked("segments are not linked");
  Multisegment out = m;
  out.erase_one(d1);
  out.erase_one(d2);
  out.insert(*seg_union(d1, d2));
  if (auto i = seg_intersection(d1, d2)) out.insert(*i);
  return out;
}

std::vector<Multisegment> intersection_union_moves(const Multisegment& m) {
  std::vector<Multisegment> out;
  const auto& s = m.segments();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] == s[i - 1]) continue;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] == s[j - 1] && j - 1 != i) continue;
      if (!linked(s[i], s[j])) continue;
      out.push_back(intersection_union(m, s[i], s[j]));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Multisegment> down_closure(const Multisegment& m) {
  std::unordered_set<Multisegment> seen{m};
  std::vector<Multisegment> frontier{m}, all{m};
  while (!frontier.empty()) {
    std::vector<Multisegment> next;
    for (const auto& x : frontier)
      for (auto& y : intersection_union_moves(x))
        if (seen.insert(y).second) {
          all.push_back(y);
          next.push_back(std::move(y));
        }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool leq_Z(const Multisegment& m1, const Multisegment& m2) {
  if (m1 == m2) return true;
  if (csupp(m1) != csupp(m2)) return false;
  if (m1.size() > m2.size()) return false;
  thread_local std::unordered_map<Multisegment, std::vector<Multisegment>> memo;
  if (memo.size() > 4096) memo.clear();
  auto it = memo.find(m2);
  if (it == memo.end()) it = memo.emplace(m2, down_closure(m2)).first;
  return std::binary_search(it->second.begin(), it->second.end(), m1);
}

std::pair<Multisegment, Multisegment> slices(const Multisegment& m, const CuspidalPoint& rho) {
  std::vector<Segment> as, bs;
  for (const auto& d : m) {
    if (d.a_point() == rho) as.push_back(d);
    if (d.b_point() == rho) bs.push_back(d);
  }
  return {Multisegment(std::move(as)), Multisegment(std::move(bs))};
}

std::vector<Segment> order(const Multisegment& m, OrderMode mode) {
  std::vector<Segment> seq(m.begin(), m.end());
  std::stable_sort(seq.begin(), seq.end(), [](const Segment& x, const Segment& y) {
    if (x.line() != y.line()) return x.line() < y.line();
    if (x.b() != y.b()) return x.b() < y.b();
    return x.a() < y.a();
  });
  if (mode == OrderMode::descending) std::reverse(seq.begin(), seq.end());
  return seq;
}

bool is_ascending(const std::vector<Segment>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seg_precedes(seq[j], seq[i])) return false;
  return true;
}

bool is_descending(const std::vector<Segment>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seg_precedes(seq[i], seq[j])) return false;
  return true;
}

std::optional<Segment> transform(const Segment& d, const Transform& t) {
  switch (t.kind) {
    case Transform::Kind::shift:
      return Segment(d.a() + t.q, d.b() + t.q, d.line());
    case Transform::Kind::dual:
      return Segment(-d.b(), -d.a(), LineTable::dual(d.line()));
    case Transform::Kind::trunc_right:
      return make_segment(d.a(), d.b() - kOne, d.line());
    case Transform::Kind::trunc_left:
      return make_segment(d.a() + kOne, d.b(), d.line());
    case Transform::Kind::ext_right:
      return Segment(d.a(), d.b() + kOne, d.line());
    case Transform::Kind::ext_left:
      return Segment(d.a() - kOne, d.b(), d.line());
  }
  return std::nullopt;
}

Multisegment transform(const Multisegment& m, const Transform& t) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& d : m)
    if (auto e = transform(d, t)) out.push_back(*e);
  return Multisegment(std::move(out));
}

IrrRep transform(const IrrRep& pi, const Transform& t) { return IrrRep(transform(pi.zmult(), t)); }

}  // namespace branchlaw
