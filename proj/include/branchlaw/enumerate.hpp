#pragma once

#include <functional>
#include <vector>

#include "branchlaw/core.hpp"

namespace branchlaw {

// All multisegments whose points are exactly the multiset s (no size limit; memoized).
std::vector<Multisegment> multisegments_with_support(const PointMultiset& s);

// Calls f on every sub-multiset of s, in order of increasing absolute size.
void for_each_submultiset(const PointMultiset& s, const std::function<void(const PointMultiset&)>& f);

int abs_size(const PointMultiset& s);

}  // namespace branchlaw
