#include "ranktwo/bundle.hpp"

namespace ranktwo {

const char* stability_name(StabilityClass s) {
  switch (s) {
    case StabilityClass::Stable: return "stable";
    case StabilityClass::StrictlySemistable: return "strictly-semistable";
    case StabilityClass::NonStable: return "non-stable";
    case StabilityClass::Unknown: return "unknown";
  }
  return "unknown";
}

StabilityClass classify_stability(int c1, std::optional<Int> alpha) {
  if (!alpha) return StabilityClass::Unknown;
  if (*alpha > Int(0)) return StabilityClass::Stable;
  if (c1 == 0 && *alpha == Int(0)) return StabilityClass::StrictlySemistable;
  return StabilityClass::NonStable;
}

bool non_stable_side(StabilityClass s) {
  return s == StabilityClass::NonStable || s == StabilityClass::StrictlySemistable;
}

GeneralChernPair twist_chern(const ChernClasses& c, Int n) {
  Int c1 = Int(c.c1);
  return GeneralChernPair{c1 + Int(2) * n, c.c2 + c1 * n + n * n};
}

Int delta(const ChernClasses& c, Int alpha) {
  return twist_chern(c, alpha).c2;
}

Int serre_dual_twist(int c1, Int n) { return -n - Int(c1) - Int(4); }

bool split_by_delta(Int delta_value) { return delta_value == Int(0); }

Int instability_order(int c1, Int alpha) {
  Int k = -alpha - Int(c1);
  return k > Int(0) ? k : Int(0);
}

BundleProfile make_profile(const ChernClasses& chern, std::optional<Int> alpha,
                           std::optional<Int> gamma, std::optional<Int> beta) {
  BundleProfile p{chern, alpha, beta, gamma, std::nullopt,
                  classify_stability(chern.c1, alpha), {}};
  if (alpha) p.delta_value = delta(chern, *alpha);
  if (alpha && gamma && *gamma < *alpha)
    throw std::domain_error(
        "BundleProfile: gamma < alpha contradicts gamma being a "
        "non-vanishing bound at or above the first section twist");
  if (chern.parity_anomaly())
    p.warnings.push_back(
        "c2 is odd with c1 = -1; no rank-2 bundle on projective 3-space has "
        "this parity, results are formal");
  return p;
}

}  // namespace ranktwo
