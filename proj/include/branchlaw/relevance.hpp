#pragma once

#include <optional>
#include <vector>

#include "branchlaw/commutation.hpp"

namespace branchlaw {

struct Witness {
  Multisegment m;
  Multisegment n;
  IrrRep target;
  bool operator==(const Witness&) const = default;
};

struct RelevanceResult {
  bool relevant = false;
  std::optional<int> i_star;
  Multisegment witness_m;
  Multisegment witness_n;
  std::optional<IrrRep> target;
  // Filled only when the search runs to completion.
  std::vector<Witness> all_witnesses;
};

struct RelevanceOptions {
  // Keep searching after the first witness and collect every one.
  bool exhaustive = false;
};

RelevanceResult relevant(const IrrRep& pi1, const IrrRep& pi2, RelevanceOptions opts = {});
// Throws RankMismatch unless rank(pi) == rank(pip) + 1.
RelevanceResult branch(const IrrRep& pi, const IrrRep& pip);
// Throws NotCommutative.
int smallest_derivative_index(const Multisegment& m, const Multisegment& n, const IrrRep& pi);

bool symmetry_check(const IrrRep& pi1, const IrrRep& pi2);
bool dual_check(const IrrRep& pi1, const IrrRep& pi2);

bool is_generic(const IrrRep& pi);
// No cuspidal of pi1 is a nu^{1/2 + Z} shift of a cuspidal of pi2.
bool zero_relative_rank(const IrrRep& pi1, const IrrRep& pi2);

}  // namespace branchlaw
