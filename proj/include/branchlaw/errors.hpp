#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace branchlaw {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define BRANCHLAW_ERROR(Name)                                              \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(#Name, what) {}        \
  }

BRANCHLAW_ERROR(InvalidSegment);
BRANCHLAW_ERROR(NotLinked);
BRANCHLAW_ERROR(NotPresent);
BRANCHLAW_ERROR(Inapplicable);
BRANCHLAW_ERROR(VanishingDerivative);
BRANCHLAW_ERROR(NotCommutative);
BRANCHLAW_ERROR(RankMismatch);
BRANCHLAW_ERROR(OutOfRange);
BRANCHLAW_ERROR(LimitExceeded);
BRANCHLAW_ERROR(NonUnique);
BRANCHLAW_ERROR(SymmetryViolation);
BRANCHLAW_ERROR(DualityViolation);
BRANCHLAW_ERROR(UsageError);

#undef BRANCHLAW_ERROR

// Carries the byte offset into the parsed text and the token that was expected there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& detail = {})
      : Error("ParseError", build(position, expected, detail)),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string build(std::size_t pos, const std::string& expected, const std::string& detail) {
    std::string s = "at position " + std::to_string(pos) + ": expected " + expected;
    if (!detail.empty()) s += " (" + detail + ")";
    return s;
  }
  std::size_t position_;
  std::string expected_;
};

}  // namespace branchlaw
