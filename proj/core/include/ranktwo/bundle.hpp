#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ranktwo/exact.hpp"

namespace ranktwo {

// Chern data of a normalized rank-2 bundle on projective 3-space:
// c1 is 0 or -1, nothing else. With c1 = -1 an odd c2 cannot occur for an
// actual bundle; construction still succeeds so that exploratory inputs can
// be examined, but the anomaly is reported via parity_anomaly().
struct ChernClasses {
  ChernClasses(int c1_, Int c2_) : c1(c1_), c2(c2_) {
    if (c1_ != 0 && c1_ != -1)
      throw std::domain_error("ChernClasses: c1 must be 0 or -1 (normalized)");
  }

  int c1;
  Int c2;

  bool parity_anomaly() const { return c1 == -1 && c2.is_odd(); }

  friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
};

// Chern pair of a twist E(n), which is in general not normalized.
struct GeneralChernPair {
  Int c1, c2;
  friend bool operator==(const GeneralChernPair&, const GeneralChernPair&) = default;
};

enum class StabilityClass { Stable, StrictlySemistable, NonStable, Unknown };

const char* stability_name(StabilityClass s);

// alpha is the least twist with sections: h0(E(alpha)) > 0, h0(E(n)) = 0
// below it. Stability of the bundle is equivalent to alpha > 0; with c1 = 0,
// alpha = 0 is the strictly semistable borderline.
StabilityClass classify_stability(int c1, std::optional<Int> alpha);

// Stable means neither NonStable nor StrictlySemistable; both of the latter
// share the non-vanishing machinery for alpha <= 0.
bool non_stable_side(StabilityClass s);

GeneralChernPair twist_chern(const ChernClasses& c, Int n);

// delta = c2 + c1*alpha + alpha^2 = c2(E(alpha)), the second Chern class of
// the section twist. Zero exactly when the bundle splits.
Int delta(const ChernClasses& c, Int alpha);

// Twist paired with n under Serre duality: h^i(E(n)) = h^{3-i}(E(m)).
Int serre_dual_twist(int c1, Int n);

bool split_by_delta(Int delta_value);

// max(0, -alpha - c1): how far the bundle sits from the stable range.
Int instability_order(int c1, Int alpha);

// A bundle as described to this library: Chern data plus the optional
// cohomological invariants alpha (least section twist), beta (least twist
// with h0(E_H(beta)) > 0 on a general plane H; carried through but feeding
// no formula here) and gamma (an externally supplied non-vanishing bound).
struct BundleProfile {
  ChernClasses chern;
  std::optional<Int> alpha;
  std::optional<Int> beta;
  std::optional<Int> gamma;
  std::optional<Int> delta_value;  // derived from alpha when present
  StabilityClass stability = StabilityClass::Unknown;
  std::vector<std::string> warnings;
};

BundleProfile make_profile(const ChernClasses& chern,
                           std::optional<Int> alpha = std::nullopt,
                           std::optional<Int> gamma = std::nullopt,
                           std::optional<Int> beta = std::nullopt);

}  // namespace ranktwo
