#include "branchlaw/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "branchlaw/calculus.hpp"

namespace branchlaw {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "end of input");
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "integer");
    int v = 0;
    const char* first = s_.data() + start + (s_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) throw ParseError(start, "integer", "out of range");
    return v;
  }

  HalfInt halfint() {
    std::size_t start = (skip_ws(), pos_);
    int n = integer();
    if (peek('/')) {
      ++pos_;
      skip_ws();
      std::size_t dpos = pos_;
      if (integer() != 2) throw ParseError(dpos, "'2'");
      if (n % 2 == 0) throw ParseError(start, "odd numerator over 2");
      return HalfInt::from_twice(n);
    }
    return HalfInt(n);
  }

  LineId line_suffix() {
    if (!peek('@')) return LineTable::default_line();
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) throw ParseError(start, "line id");
    std::string name(s_.substr(start, pos_ - start));
    std::optional<int> size;
    if (pos_ < s_.size() && s_[pos_] == ':') {
      ++pos_;
      std::size_t kpos = pos_;
      size = integer();
      if (*size < 1) throw ParseError(kpos, "positive line size");
    }
    try {
      return LineTable::intern(name, size);
    } catch (const InvalidSegment& e) {
      throw ParseError(start, "consistent line size", e.what());
    }
  }

  CuspidalPoint point() {
    HalfInt e = halfint();
    return {line_suffix(), e};
  }

  Segment segment() {
    skip_ws();
    std::size_t start = pos_;
    expect('[');
    HalfInt a = halfint();
    HalfInt b = a;
    if (peek(',')) {
      ++pos_;
      b = halfint();
    }
    expect(']');
    LineId line = line_suffix();
    if (!(b - a).is_integer()) throw ParseError(start, "segment", "endpoints differ by a half-integer");
    if (b < a) throw ParseError(start, "segment", "b < a");
    return Segment(a, b, line);
  }

  Multisegment multisegment() {
    expect('{');
    std::vector<Segment> segs;
    if (!peek('}')) {
      segs.push_back(segment());
      while (peek(',')) {
        ++pos_;
        segs.push_back(segment());
      }
    }
    expect('}');
    return Multisegment(std::move(segs));
  }

  IrrRep rep(bool langlands) {
    skip_ws();
    if (s_.substr(pos_, 2) == "St") {
      pos_ += 2;
      return IrrRep(langlands_to_zelevinsky(multisegment()));
    }
    if (s_.substr(pos_, 1) == "Z") {
      ++pos_;
      return IrrRep(multisegment());
    }
    if (peek('{')) {
      Multisegment m = multisegment();
      return IrrRep(langlands ? langlands_to_zelevinsky(m) : m);
    }
    throw ParseError(pos_, "'Z' or 'St'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_whole(std::string_view text, F f) {
  Parser p(text);
  auto v = f(p);
  p.expect_end();
  return v;
}

}  // namespace

HalfInt parse_halfint(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.halfint(); });
}

CuspidalPoint parse_point(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.point(); });
}

Segment parse_segment(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.segment(); });
}

Multisegment parse_multisegment(std::string_view text) {
  return parse_whole(text, [](Parser& p) { return p.multisegment(); });
}

IrrRep parse_rep(std::string_view text, bool langlands) {
  return parse_whole(text, [langlands](Parser& p) { return p.rep(langlands); });
}

Value parse_value(std::string_view text, bool langlands) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw ParseError(text.size(), "value");
  if (*first == '[') return parse_segment(text);
  if (*first == '{' && !langlands) return parse_multisegment(text);
  return parse_rep(text, langlands);
}

std::string format(HalfInt x) { return x.str(); }

namespace {

std::string line_suffix(LineId line) {
  if (line == LineTable::default_line()) return {};
  std::string s = "@" + LineTable::name(line);
  if (int k = LineTable::size(line); k != 1) s += ":" + std::to_string(k);
  return s;
}

}  // namespace

std::string format(const CuspidalPoint& p) { return p.exp.str() + line_suffix(p.line); }

std::string format(const Segment& d) {
  std::string s = "[" + d.a().str();
  if (d.b() != d.a()) s += "," + d.b().str();
  return s + "]" + line_suffix(d.line());
}

std::string format(const Multisegment& m) {
  std::vector<std::pair<std::string, const Segment*>> keyed;
  for (const auto& d : m) keyed.emplace_back(LineTable::name(d.line()), &d);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return *x.second < *y.second;
  });
  std::string s = "{";
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i) s += ",";
    s += format(*keyed[i].second);
  }
  return s + "}";
}

std::string format(const IrrRep& pi) { return "Z" + format(pi.zmult()); }

std::string format(const Value& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

std::string format_langlands(const IrrRep& pi) { return "St" + format(langlands_to_zelevinsky(pi.zmult())); }

}  // namespace branchlaw
