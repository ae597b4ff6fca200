#include "branchlaw/commutation.hpp"

namespace branchlaw {

bool strongly_commutative(const Segment& d, const Segment& dp, const IrrRep& pi) {
  if (!derivative(pi, d, Side::right)) return false;
  return eta(integral(pi, dp, Side::left), d) == eta(pi, d);
}

CommTriple strongly_commutative_multi(const Multisegment& m, const Multisegment& n, const IrrRep& pi) {
  CommTriple t{m, n, pi, true, {}};
  const auto ms = order(m, OrderMode::ascending);
  const auto ns = order(n, OrderMode::ascending);
  IrrRep row_start = pi;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    IrrRep state = row_start;
    for (std::size_t j = 0; j < ns.size(); ++j) {
      bool defined = derivative(state, ms[i], Side::right).has_value();
      EtaVector before = eta(state, ms[i]);
      EtaVector after = eta(integral(state, ns[j], Side::left), ms[i]);
      bool ok = defined && before == after;
      t.verdict = t.verdict && ok;
      t.trace.push_back({ms[i], ns[j], state, std::move(before), std::move(after), defined, ok});
      state = integral(state, ns[j], Side::left);
    }
    auto next = derivative(row_start, ms[i], Side::right);
    if (!next) throw VanishingDerivative("D_m(pi) = 0");
    row_start = std::move(*next);
  }
  return t;
}

bool ldri_commutative(const Multisegment& n, const Multisegment& m, const IrrRep& tau) {
  if (!derivative_seq(tau, n, Side::left)) return false;
  return strongly_commutative_multi(dual(n), dual(m), dual(tau)).verdict;
}

bool is_minimal(const IrrRep& pi, const Multisegment& m, Side side) {
  auto target = derivative_seq(pi, m, side);
  if (!target) throw VanishingDerivative("derivative along m vanishes");
  for (const auto& next : intersection_union_moves(m))
    if (derivative_seq(pi, next, side) == target) return false;
  return true;
}

Multisegment minimize(const IrrRep& pi, const Multisegment& m, Side side) {
  auto target = derivative_seq(pi, m, side);
  if (!target) throw VanishingDerivative("derivative along m vanishes");
  Multisegment cur = m;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& next : intersection_union_moves(cur)) {
      if (derivative_seq(pi, next, side) == target) {
        cur = next;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

LdRiTriple dual_transport(const Multisegment& m, const Multisegment& n, const IrrRep& pi) {
  if (!strongly_commutative_multi(m, n, pi).verdict) throw NotCommutative("triple is not strongly RdLi-commutative");
  IrrRep tau = integral_seq(*derivative_seq(pi, m, Side::right), n, Side::left);
  if (!ldri_commutative(n, m, tau)) throw NotCommutative("transported triple is not strongly LdRi-commutative");
  return {n, m, std::move(tau)};
}

}  // namespace branchlaw
