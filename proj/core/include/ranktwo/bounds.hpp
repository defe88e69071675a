#pragma once

#include "ranktwo/bundle.hpp"
#include "ranktwo/exact.hpp"

namespace ranktwo {

enum class BoundKind { Zeta, Tau, EtaDelta, EtaAlphaDelta };

const char* bound_name(BoundKind k);

// zeta: positive root of the Hilbert cubic's quadratic bracket, i.e. the
// threshold below which chi(E(n)) < 0 on the stable side. Exact value
// (sqrt(12*c2 + 4 - 3*c1^2) - (4 + c1)) / 2; requires c2 >= 0.
QuadraticValue zeta(const ChernClasses& c);

// Least integer strictly above zeta: floor(zeta) + 1. Upper bound for the
// first section twist of a stable bundle.
Int bar_alpha(const ChernClasses& c);

// Non-vanishing threshold for the strictly semistable case (alpha = 0):
//   c1 =  0:  sqrt(6*c2 + 1) - 2
//   c1 = -1: (sqrt(24*c2 + 10) - 3) / 2
// Requires c2 >= 0.
QuadraticValue tau(const ChernClasses& c);

// tau evaluated at delta = c2(E(alpha)) instead of c2; the threshold that
// drives non-vanishing below the first section twist. Requires delta >= 0.
QuadraticValue eta_delta(int c1, Int delta_value);

// Sharper threshold available above the instability order when alpha < 0:
//   c1 =  0: (sqrt(24*delta + 4 - 3*alpha^2) - (4 + 3*alpha)) / 2
//   c1 = -1: (sqrt(96*delta + 13 + 12*alpha - 12*alpha^2) - (3 + 6*alpha)) / 4
// Requires alpha <= 0 and a non-negative radicand.
QuadraticValue eta_alpha_delta(int c1, Int alpha, Int delta_value);

}  // namespace ranktwo
