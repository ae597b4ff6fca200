#pragma once

#include <vector>

#include "branchlaw/calculus.hpp"
#include "branchlaw/core.hpp"

namespace branchlaw {

struct EtaVector {
  Segment frame;
  std::vector<int> comps;

  int abs() const;
  bool operator==(const EtaVector&) const = default;
  // Componentwise <=.
  bool leq(const EtaVector& o) const;
};

int eps_on_mult(const Segment& d, const Multisegment& h);
int eps(const IrrRep& pi, const Segment& d, Side side = Side::right);
EtaVector eta(const IrrRep& pi, const Segment& frame, Side side = Side::right);
inline int abs_eta(const IrrRep& pi, const Segment& frame, Side side = Side::right) {
  return eta(pi, frame, side).abs();
}

Multisegment hd(const IrrRep& pi, Side side = Side::right);
Multisegment mx(const IrrRep& pi, const Segment& d, Side side = Side::right);
Multisegment mxpt(const IrrRep& pi, const CuspidalPoint& rho);

struct RemovalResult {
  Multisegment result;
  std::vector<Segment> sequence;
};

// Throws Inapplicable when h has no segment [a(d), b'] with b' >= b(d).
RemovalResult removal(const Segment& d, const Multisegment& h);
// Folds the single-segment process over order(m, ascending).
Multisegment removal(const Multisegment& m, const Multisegment& h);

}  // namespace branchlaw
