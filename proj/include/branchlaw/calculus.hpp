#pragma once

#include <optional>

#include "branchlaw/core.hpp"

namespace branchlaw {

enum class Side { left, right };

// Which free segment a point derivative truncates; smallest_a exists only for mutation tests.
enum class PeelRule { largest_a, smallest_a };

// Single cuspidal point operators on the right.
int point_eps(const Multisegment& m, const CuspidalPoint& rho);
std::optional<Multisegment> point_derivative(const Multisegment& m, const CuspidalPoint& rho,
                                             PeelRule rule = PeelRule::largest_a);
Multisegment point_integral(const Multisegment& m, const CuspidalPoint& rho);

IrrRep integral(const IrrRep& pi, const Segment& d, Side side);
std::optional<IrrRep> derivative(const IrrRep& pi, const Segment& d, Side side);

// Folds over order(m, ascending) for right derivatives and left integrals; the other
// two are their images under duality.
std::optional<IrrRep> derivative_seq(const IrrRep& pi, const Multisegment& m, Side side);
IrrRep integral_seq(const IrrRep& pi, const Multisegment& m, Side side);

inline int level(const IrrRep& pi) { return pi.level(); }
// Highest derivative; shifted applies nu^{1/2} (right) or nu^{-1/2} (left).
IrrRep highest(const IrrRep& pi, Side side, bool shifted = false);

Multisegment double_derivative_completion(const IrrRep& pi, const Multisegment& m);
// n with highest_left(integral_seq(integral_seq(pi, m, left), n, left)) == pi, level preserved.
Multisegment double_integral_completion(const IrrRep& pi, const Multisegment& m);

IrrRep thicken(const IrrRep& pi);
bool is_thickened(const IrrRep& pi);

inline IrrRep dual_rep(const IrrRep& pi) { return dual(pi); }
inline IrrRep theta(const IrrRep& pi) { return dual(pi); }

// Zelevinsky parameter of St(m); an involution on multisegments.
Multisegment langlands_to_zelevinsky(const Multisegment& m);

void clear_calculus_caches();

}  // namespace branchlaw
