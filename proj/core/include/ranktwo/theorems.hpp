#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ranktwo/bounds.hpp"
#include "ranktwo/bundle.hpp"
#include "ranktwo/exact.hpp"

namespace ranktwo {

// Identifiers for the individual non-vanishing / splitting criteria this
// engine can fire. Reports carry them so every forced twist can be traced
// to the clause that produced it.
enum class ClauseId {
  T31_i,
  T31_ii,
  T31_iii,
  T31_iv,
  T31_v,
  T31_vi,
  T37_i,
  T37_ii,
  T37_iii,
  T37_iv,
  P315_a,
  P315_b,
  P315_c,
  L313,
  L314,
};

const char* clause_name(ClauseId id);

// A twist with h1(E(n)) != 0 forced, with every clause that forces it.
struct ForcedTwist {
  Int n;
  std::vector<ClauseId> clauses;  // ascending by enum order, no duplicates
};

// A conditional statement about where h1 may vanish on the stable side:
// not a forced value, but a constraint any actual cohomology must satisfy.
struct VanishingConstraint {
  ClauseId id;
  Int alpha;
  Int bar_alpha_value;
  Int window_lo;                 // hypothesis range of twists
  std::optional<Int> window_hi;  // absent = unbounded above
  bool satisfiable;              // can the hypothesis hold at all
  Int conclusion;                // the twist / threshold it pins down
  std::string text;
};

// A clause that could not be evaluated, with the reason (typically a
// missing alpha, or a radicand pushed negative by exploratory input).
struct ConditionalClause {
  ClauseId id;
  std::string reason;
};

enum class Verdict { Better, Equal, Worse };

const char* verdict_name(Verdict v);

// Comparison of this engine's forced-non-vanishing reach against an
// externally supplied bound gamma (which guarantees h1(E(n)) != 0 for
// gamma - 2 at the highest).
struct GammaComparison {
  Int gamma_bound;  // gamma - 2
  Int our_bound;    // max forced twist
  Verdict verdict;
};

struct NonVanishingReport {
  std::vector<ForcedTwist> forced;  // ascending, distinct, contiguous
  Int forced_lo = Int(-1);
  Int forced_hi = Int(-1);
  std::vector<VanishingConstraint> vanishing_constraints;
  std::vector<ConditionalClause> conditional;
  std::vector<std::string> notes;
  std::optional<GammaComparison> comparison;

  Int max_forced() const { return forced_hi; }
  bool is_forced(Int n) const;
  const ForcedTwist* find(Int n) const;
};

// Aggregates every applicable non-vanishing criterion for the profile.
// Stable or unknown alpha (requires c2 > 0): twists below zeta, up to
// bar_alpha - 1 depending on whether zeta is an integer, plus the
// alpha-conditional clauses. Known alpha <= 0: the non-stable family, from
// the instability range up to the eta thresholds. A profile with known
// alpha and delta = 0 is a split bundle and is refused.
NonVanishingReport forced_nonvanishing(const BundleProfile& profile);

// The stable-side vanishing constraints (where h1 is allowed to vanish),
// requires alpha > 0 and c2 > 0.
std::vector<VanishingConstraint> vanishing_constraints_stable(
    const ChernClasses& c, Int alpha);

GammaComparison gamma_bound_comparison(const NonVanishingReport& report,
                                       Int gamma);

struct SplitVerdict {
  enum class Kind { Split, NonSplit, Undetermined } kind;
  std::vector<ClauseId> criteria;
  bool exception_applied = false;
  std::string detail;
};

const char* split_kind_name(SplitVerdict::Kind k);

// Split / non-split decision from low-twist h1 values.
//   c1 =  0: splits iff h1(E(-1)) = 0.
//   c1 = -1: splits iff h1(E(-1)) = 0 or h1(E(0)) = 0; h1(E(1)) = 0 also
//            forces a split except possibly when the bundle could be stable
//            with c2 = 2, which stays Undetermined.
// Absent values that the decision would need produce Undetermined.
SplitVerdict split_decision(int c1, std::optional<Int> c2,
                            StabilityClass stability, std::optional<Int> h1_m1,
                            std::optional<Int> h1_0, std::optional<Int> h1_p1);

// One vanishing h1 below alpha - 1 pulls every h1 to its left down to zero.
struct LeftVanishingResult {
  std::optional<Int> witness;   // largest such twist found in the window
  std::vector<Int> implied;     // window twists n <= witness with h1 forced 0
  std::vector<Int> violations;  // window twists n <= witness with h1 > 0
};

struct CohomologyTable;

LeftVanishingResult propagate_left_vanishing(const CohomologyTable& table,
                                             Int alpha);

}  // namespace ranktwo
