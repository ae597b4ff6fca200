#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchlaw/pieri.hpp"
#include "branchlaw/relevance.hpp"

namespace branchlaw {

inline constexpr int kDefaultPointLimit = 8;

using DerivativeFn = std::function<std::optional<IrrRep>(const IrrRep&, const Segment&)>;

// The engine's right derivative.
DerivativeFn engine_derivative();

// Throws LimitExceeded when |s| > limit.
std::vector<Multisegment> enumerate_multisegments(const PointMultiset& s, int limit = kDefaultPointLimit);

// Searches every sigma with the forced support for integral(sigma, d, right) == pi.
// Throws NonUnique if more than one sigma qualifies.
std::optional<IrrRep> derivative_by_inversion(const IrrRep& pi, const Segment& d, int limit = kDefaultPointLimit);

// The unique <=_Z-minimal multisegment realizing the highest right derivative, by exhaustive search.
Multisegment hd_by_search(const IrrRep& pi, int limit = kDefaultPointLimit);

// True iff nothing strictly <=_Z-below m gives the same derivative.
bool is_minimal_exhaustive(const IrrRep& pi, const Multisegment& m, Side side);

// Every rep on one line with at most max_points points, all exponents in [lo, hi].
std::vector<IrrRep> corpus(int max_points, HalfInt lo, HalfInt hi, LineId line = LineTable::default_line());
// Every segment inside [lo, hi] on the given line.
std::vector<Segment> window_segments(HalfInt lo, HalfInt hi, LineId line = LineTable::default_line());

// Each check returns one message per violation.
namespace checks {

std::vector<std::string> removal_law(const IrrRep& pi, const std::vector<Segment>& window, const DerivativeFn& derive);
std::vector<std::string> inversion(const IrrRep& pi, const std::vector<Segment>& window);
std::vector<std::string> derivative_agreement(const IrrRep& pi, const std::vector<Segment>& window);
std::vector<std::string> eta_update(const IrrRep& pi, const std::vector<Segment>& window);
std::vector<std::string> integral_monotonicity(const IrrRep& pi, const std::vector<Segment>& window);
std::vector<std::string> unlinked_commutation(const IrrRep& pi, const std::vector<Segment>& window);
// strong_found counts the strongly commutative triples seen.
std::vector<std::string> strong_implies_plain(const IrrRep& pi, const std::vector<Segment>& window, long* strong_found = nullptr);
std::vector<std::string> hd_law(const IrrRep& pi);
std::vector<std::string> pieri_sanity(const IrrRep& pi);
// relevant_out reports the verdict of (pi1, pi2).
std::vector<std::string> relevance_symmetry(const IrrRep& pi1, const IrrRep& pi2, bool* relevant_out = nullptr);
std::vector<std::string> witness_uniqueness(const IrrRep& pi1, const IrrRep& pi2, bool* relevant_out = nullptr);

}  // namespace checks

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long instances = 0;
  long violations = 0;
  std::vector<std::string> counterexamples;  // first few only

  void record(const std::vector<std::string>& found);
  bool pass() const { return violations == 0; }
};

struct Report {
  std::uint64_t seed = 0;
  int max_points = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int max_points = 6;
  int samples = 150;
  // Replaces the engine derivative in the removal-law check.
  DerivativeFn derivative;
};

Report consistency_suite(const SuiteConfig& config);

}  // namespace branchlaw
