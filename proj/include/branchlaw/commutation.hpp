#pragma once

#include <vector>

#include "branchlaw/calculus.hpp"
#include "branchlaw/invariants.hpp"

namespace branchlaw {

struct CommTraceRow {
  Segment d;       // derivative segment
  Segment dp;      // integral segment
  IrrRep state;    // representation the pair acts on
  EtaVector before;
  EtaVector after;  // after the left integral
  bool derivative_defined;
  bool ok;
};

struct CommTriple {
  Multisegment m;
  Multisegment n;
  IrrRep pi;
  bool verdict = true;
  std::vector<CommTraceRow> trace;
};

bool strongly_commutative(const Segment& d, const Segment& dp, const IrrRep& pi);
// Throws VanishingDerivative when derivative_seq(pi, m, right) is null.
CommTriple strongly_commutative_multi(const Multisegment& m, const Multisegment& n, const IrrRep& pi);
// (n, m, tau) with left derivatives along n and right integrals along m.
bool ldri_commutative(const Multisegment& n, const Multisegment& m, const IrrRep& tau);

bool is_minimal(const IrrRep& pi, const Multisegment& m, Side side);
Multisegment minimize(const IrrRep& pi, const Multisegment& m, Side side);

struct LdRiTriple {
  Multisegment n;
  Multisegment m;
  IrrRep tau;
};
// Throws NotCommutative if (m, n, pi) is not strongly RdLi-commutative.
LdRiTriple dual_transport(const Multisegment& m, const Multisegment& n, const IrrRep& pi);

}  // namespace branchlaw
