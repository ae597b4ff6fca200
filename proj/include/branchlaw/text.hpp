#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "branchlaw/core.hpp"

namespace branchlaw {

// Grammar:
//   point := INT | INT "/" "2"
//   seg   := "[" point ("," point)? "]" ("@" LINEID (":" INT)?)?
//   mult  := "{" (seg ("," seg)*)? "}"
//   rep   := "Z" mult | "St" mult
// A bare mult read as a rep is a Zelevinsky parameter unless langlands is set.

HalfInt parse_halfint(std::string_view text);
CuspidalPoint parse_point(std::string_view text);
Segment parse_segment(std::string_view text);
Multisegment parse_multisegment(std::string_view text);
IrrRep parse_rep(std::string_view text, bool langlands = false);

using Value = std::variant<Segment, Multisegment, IrrRep>;
Value parse_value(std::string_view text, bool langlands = false);

std::string format(HalfInt x);
std::string format(const CuspidalPoint& p);
std::string format(const Segment& d);
std::string format(const Multisegment& m);
std::string format(const IrrRep& pi);
std::string format(const Value& v);
// The Langlands parameter of pi, written as St{...}.
std::string format_langlands(const IrrRep& pi);

}  // namespace branchlaw
