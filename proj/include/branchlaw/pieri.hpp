#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchlaw/commutation.hpp"

namespace branchlaw {

struct Quotient {
  IrrRep target;
  Multisegment witness;
  bool operator==(const Quotient&) const = default;
};

struct QuotientSet {
  std::vector<Quotient> quotients;  // sorted by target
  // Distinct minimal witnesses reaching an already recorded target.
  std::vector<std::string> collisions;
};

// Throws OutOfRange unless 0 <= i <= rank(pi).
QuotientSet simple_quotients(const IrrRep& pi, int i);

// Whether tau is <n> for some n obtained from zmult(pi) by right truncating segments of total
// absolute length i.
bool in_truncation_patterns(const IrrRep& pi, int i, const IrrRep& tau);

struct PieriTable {
  std::map<int, std::vector<Quotient>> rows;  // nonempty rows only
  std::vector<std::string> collisions;
  std::vector<std::string> violations;  // targets outside the truncation patterns
};

PieriTable pieri_table(const IrrRep& pi);

}  // namespace branchlaw
