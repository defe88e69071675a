#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ranktwo/bundle.hpp"
#include "ranktwo/exact.hpp"

namespace ranktwo {

// Hilbert polynomial of a rank-2 bundle with Chern pair (c1, c2) on
// projective 3-space, as an exact cubic a3*t^3 + a2*t^2 + a1*t + a0.
struct HilbertCubic {
  Rational a3, a2, a1, a0;

  Rational eval(Int t) const;

  friend bool operator==(const HilbertCubic&, const HilbertCubic&) = default;
};

HilbertCubic hilbert_coeffs(const ChernClasses& c);

// chi(E(n)) on projective 3-space. Evaluated twice, through the expanded
// coefficients and through the factored form
//   (1/3) * u * (u^2 - 1 + 3*c1^2/4 - 3*c2),  u = n + 2 + c1/2;
// a disagreement or a non-integer value would be an internal bug and throws
// std::logic_error.
Int chi_p3(const ChernClasses& c, Int n);

// chi of the restriction to a plane: (n+1)(n+2+c1) - c2.
Int chi_p2(const ChernClasses& c, Int n);

// C(m, 3), zero whenever m < 3.
Int binom3(Int m);

enum class RootStructure { ThreeReal, OneReal };

// The Hilbert cubic has three real roots exactly when c2 >= 0; with c2 < 0
// the factored form's quadratic bracket has no real zero.
RootStructure cubic_root_structure(const ChernClasses& c);

// Closed form for h0(E(n)) - h3(E(n)) when the bundle is on the non-stable
// side (first section twist alpha <= 0), valid for
// alpha - 3 <= n <= -alpha - c1. The top twist loses one section to the
// dual side, hence the -1 there.
Int h0_minus_h3_nonstable(int c1, Int alpha, Int n);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  // First (n, alpha) where the identity failed; alpha is 0 for the
  // single-variable identities.
  std::optional<std::pair<Int, Int>> counterexample;
  std::string detail;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Exhaustively re-checks the algebraic identities the closed forms rest on,
// over n in [n_lo, n_hi] and alpha in [alpha_lo, alpha_hi]. Identities whose
// domain is alpha <= 0 are checked on the intersection.
IdentityReport verify_lemma_identities(Int n_lo, Int n_hi, Int alpha_lo,
                                       Int alpha_hi);

}  // namespace ranktwo
