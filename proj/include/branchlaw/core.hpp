#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "branchlaw/errors.hpp"

namespace branchlaw {

// Exact half-integer, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int n) : twice_(2 * n) {}
  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const;

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kOne = HalfInt(1);
inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

struct LineId {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const LineId&) const = default;
};

// Process-wide registry of cuspidal lines. Line "r" (size 1, self-dual) always has id 0.
class LineTable {
 public:
  static LineId intern(std::string_view name, std::optional<int> size = std::nullopt);
  static std::optional<LineId> find(std::string_view name);
  static LineId default_line() { return LineId{0}; }
  static std::string name(LineId id);
  static int size(LineId id);
  static LineId dual(LineId id);
  // Declares a and b to be dual partners (a == b makes the line self-dual).
  static void set_dual(LineId a, LineId b);
};

struct CuspidalPoint {
  LineId line;
  HalfInt exp;
  constexpr auto operator<=>(const CuspidalPoint&) const = default;
};

using PointMultiset = std::vector<CuspidalPoint>;  // kept sorted

// Same line and integer exponent difference.
bool comparable(const CuspidalPoint& p, const CuspidalPoint& q);

class Segment {
 public:
  Segment(HalfInt a, HalfInt b, LineId line = LineTable::default_line());
  static Segment point(const CuspidalPoint& p) { return Segment(p.exp, p.exp, p.line); }

  LineId line() const { return line_; }
  HalfInt a() const { return a_; }
  HalfInt b() const { return b_; }
  CuspidalPoint a_point() const { return {line_, a_}; }
  CuspidalPoint b_point() const { return {line_, b_}; }
  int rel_length() const { return (b_.twice() - a_.twice()) / 2 + 1; }
  int abs_length() const;
  bool contains(const CuspidalPoint& p) const;
  bool contains(const Segment& d) const;
  PointMultiset points() const;

  auto operator<=>(const Segment&) const = default;

 private:
  LineId line_;
  HalfInt a_;
  HalfInt b_;
};

// Builds [a,b] if nonempty.
std::optional<Segment> make_segment(HalfInt a, HalfInt b, LineId line);

bool same_class(const Segment& d1, const Segment& d2);
bool linked(const Segment& d1, const Segment& d2);
bool seg_precedes(const Segment& d1, const Segment& d2);
std::optional<Segment> seg_union(const Segment& d1, const Segment& d2);
std::optional<Segment> seg_intersection(const Segment& d1, const Segment& d2);

class Multisegment {
 public:
  using const_iterator = std::vector<Segment>::const_iterator;

  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }
  const_iterator begin() const { return segs_.begin(); }
  const_iterator end() const { return segs_.end(); }
  const Segment& operator[](std::size_t i) const { return segs_[i]; }

  std::size_t count(const Segment& d) const;
  bool contains(const Segment& d) const { return count(d) > 0; }

  void insert(const Segment& d);
  // Throws NotPresent.
  void erase_one(const Segment& d);
  void replace_at(std::size_t i, std::optional<Segment> d);

  Multisegment plus(const Segment& d) const;
  Multisegment minus(const Segment& d) const;
  Multisegment operator+(const Multisegment& o) const;

  int abs_length() const;
  std::size_t hash() const;

  bool operator==(const Multisegment&) const = default;
  auto operator<=>(const Multisegment&) const = default;

 private:
  std::vector<Segment> segs_;
};

class IrrRep {
 public:
  IrrRep() = default;
  explicit IrrRep(Multisegment zmult) : zmult_(std::move(zmult)) {}

  const Multisegment& zmult() const { return zmult_; }
  int rank() const { return zmult_.abs_length(); }
  int level() const { return static_cast<int>(zmult_.size()); }

  bool operator==(const IrrRep&) const = default;
  auto operator<=>(const IrrRep&) const = default;

 private:
  Multisegment zmult_;
};

PointMultiset csupp(const Multisegment& m);
inline PointMultiset csupp(const IrrRep& pi) { return csupp(pi.zmult()); }
PointMultiset multiset_union(const PointMultiset& x, const PointMultiset& y);
// x - y, or nullopt when y is not a sub-multiset of x.
std::optional<PointMultiset> multiset_difference(const PointMultiset& x, const PointMultiset& y);

Multisegment intersection_union(const Multisegment& m, const Segment& d1, const Segment& d2);
// Every multisegment one intersection-union step below m, deduplicated.
std::vector<Multisegment> intersection_union_moves(const Multisegment& m);
bool leq_Z(const Multisegment& m1, const Multisegment& m2);
// Exhaustive downward closure of m under intersection-union (m included).
std::vector<Multisegment> down_closure(const Multisegment& m);

std::pair<Multisegment, Multisegment> slices(const Multisegment& m, const CuspidalPoint& rho);

enum class OrderMode { ascending, descending };
std::vector<Segment> order(const Multisegment& m, OrderMode mode);
bool is_ascending(const std::vector<Segment>& seq);
bool is_descending(const std::vector<Segment>& seq);

struct Transform {
  enum class Kind { shift, dual, trunc_right, trunc_left, ext_right, ext_left };
  Kind kind = Kind::shift;
  HalfInt q;

  static Transform shift(HalfInt q) { return {Kind::shift, q}; }
  static Transform dual() { return {Kind::dual, {}}; }
  static Transform trunc_right() { return {Kind::trunc_right, {}}; }
  static Transform trunc_left() { return {Kind::trunc_left, {}}; }
  static Transform ext_right() { return {Kind::ext_right, {}}; }
  static Transform ext_left() { return {Kind::ext_left, {}}; }
};

std::optional<Segment> transform(const Segment& d, const Transform& t);
Multisegment transform(const Multisegment& m, const Transform& t);
IrrRep transform(const IrrRep& pi, const Transform& t);

inline Segment shift(const Segment& d, HalfInt q) { return *transform(d, Transform::shift(q)); }
inline Multisegment shift(const Multisegment& m, HalfInt q) { return transform(m, Transform::shift(q)); }
inline IrrRep shift(const IrrRep& pi, HalfInt q) { return transform(pi, Transform::shift(q)); }
inline Segment dual(const Segment& d) { return *transform(d, Transform::dual()); }
inline Multisegment dual(const Multisegment& m) { return transform(m, Transform::dual()); }
inline IrrRep dual(const IrrRep& pi) { return transform(pi, Transform::dual()); }

}  // namespace branchlaw

template <>
struct std::hash<branchlaw::Multisegment> {
  std::size_t operator()(const branchlaw::Multisegment& m) const noexcept { return m.hash(); }
};

template <>
struct std::hash<branchlaw::IrrRep> {
  std::size_t operator()(const branchlaw::IrrRep& pi) const noexcept { return pi.zmult().hash(); }
};

template <>
struct std::hash<branchlaw::Segment> {
  std::size_t operator()(const branchlaw::Segment& d) const noexcept {
    return (static_cast<std::size_t>(d.line().value) * 1000003u) ^
           (static_cast<std::size_t>(static_cast<unsigned>(d.a().twice())) * 8191u) ^
           static_cast<std::size_t>(static_cast<unsigned>(d.b().twice()));
  }
};
