#include "ranktwo/euler.hpp"

namespace ranktwo {

Rational HilbertCubic::eval(Int t) const {
  Rational rt(t);
  return ((a3 * rt + a2) * rt + a1) * rt + a0;
}

HilbertCubic hilbert_coeffs(const ChernClasses& c) {
  Rational c1(c.c1), c2(c.c2);
  HilbertCubic h;
  h.a3 = Rational(1, 3);
  h.a2 = c1 / Rational(2) + Rational(2);
  h.a1 = c1 * c1 / Rational(2) + Rational(2) * c1 - c2 + Rational(11, 3);
  h.a0 = c1 * c1 * c1 / Rational(6) - c1 * c2 / Rational(2) + c1 * c1 +
         Rational(11, 6) * c1 - Rational(2) * c2 + Rational(2);
  return h;
}

namespace {

// The factored evaluation shared by chi_p3 and the root structure:
// u * (u^2 - 1 + 3*c1^2/4 - 3*c2) / 3 with u = n + 2 + c1/2.
Rational chi_factored(const ChernClasses& c, Int n) {
  Rational u = Rational(n) + Rational(2) + Rational(c.c1, 2);
  Rational bracket = u * u - Rational(1) + Rational(3 * c.c1 * c.c1, 4) -
                     Rational(3) * Rational(c.c2);
  return u * bracket / Rational(3);
}

}  // namespace

Int chi_p3(const ChernClasses& c, Int n) {
  Rational factored = chi_factored(c, n);
  Rational expanded = hilbert_coeffs(c).eval(n);
  if (factored != expanded)
    throw std::logic_error("chi_p3: factored and expanded forms disagree");
  if (!factored.is_integer())
    throw std::logic_error("chi_p3: non-integer Euler characteristic");
  return factored.as_integer();
}

Int chi_p2(const ChernClasses& c, Int n) {
  return (n + Int(1)) * (n + Int(2) + Int(c.c1)) - c.c2;
}

Int binom3(Int m) {
  if (m < Int(3)) return Int(0);
  return m * (m - Int(1)) * (m - Int(2)) / Int(6);
}

RootStructure cubic_root_structure(const ChernClasses& c) {
  return c.c2 >= Int(0) ? RootStructure::ThreeReal : RootStructure::OneReal;
}

Int h0_minus_h3_nonstable(int c1, Int alpha, Int n) {
  if (c1 != 0 && c1 != -1)
    throw std::domain_error("h0_minus_h3_nonstable: c1 must be 0 or -1");
  if (alpha > Int(0))
    throw std::domain_error(
        "h0_minus_h3_nonstable: requires alpha <= 0 (non-stable side)");
  Int lo = alpha - Int(3);
  Int hi = -alpha - Int(c1);
  if (n < lo || n > hi)
    throw std::domain_error("h0_minus_h3_nonstable: n=" + to_string(n) +
                            " outside validity range [" + to_string(lo) + ", " +
                            to_string(hi) + "]");

  // u * (u^2 - 1 + 3*c1^2/4 + 3*(alpha^2 + c1*alpha)) / 3, u = n + 2 + c1/2:
  // the Euler characteristic of the split comparison bundle
  // O(alpha) + O(-alpha-c1) twisted by n.
  Rational u = Rational(n) + Rational(2) + Rational(c1, 2);
  Rational aterm = Rational(3) * Rational(alpha * alpha + Int(c1) * alpha);
  Rational bracket = u * u - Rational(1) + Rational(3 * c1 * c1, 4) + aterm;
  Rational base = u * bracket / Rational(3);
  if (n == hi) base = base - Rational(1);
  return base.as_integer();
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void fail(IdentityCheck& chk, Int n, Int alpha, const std::string& detail) {
  if (!chk.pass) return;
  chk.pass = false;
  chk.counterexample = {n, alpha};
  chk.detail = detail;
}

}  // namespace

IdentityReport verify_lemma_identities(Int n_lo, Int n_hi, Int alpha_lo,
                                       Int alpha_hi) {
  if (n_lo > n_hi || alpha_lo > alpha_hi)
    throw std::domain_error("verify_lemma_identities: empty range");

  IdentityCheck square_shift{"square-shift"};
  IdentityCheck half_square_shift{"half-square-shift"};
  IdentityCheck cubic_product{"cubic-product"};
  IdentityCheck cubic_product_half{"cubic-product-half"};
  IdentityCheck binomial_expansion{"binomial-expansion"};
  IdentityCheck section_dual{"section-dual-difference"};

  const Rational half(1, 2);
  for (Int n = n_lo; n <= n_hi; ++n) {
    // (n+3)(n+1) = (n+2)^2 - 1
    if ((n + Int(3)) * (n + Int(1)) != (n + Int(2)) * (n + Int(2)) - Int(1))
      fail(square_shift, n, Int(0), "integer square shift failed");

    // (n+2)(n+1) = (n+3/2)^2 - 1/4
    Rational nh = Rational(n) + Rational(3, 2);
    if (Rational((n + Int(2)) * (n + Int(1))) != nh * nh - Rational(1, 4))
      fail(half_square_shift, n, Int(0), "half-integer square shift failed");

    // (n+3)(n+2)(n+1)/6 = (n+2)[(n+2)^2 - 1]/6
    Rational prod = Rational((n + Int(3)) * (n + Int(2)) * (n + Int(1)), 6);
    Rational n2(n + Int(2));
    if (prod != n2 * (n2 * n2 - Rational(1)) / Rational(6))
      fail(cubic_product, n, Int(0), "cubic product form failed");

    // (n+3)(n+2)(n+1)/6 = (n+3/2)[(n+3/2)^2 + 2]/6 + (4n^2 + 6n - 1)/16
    Rational rhs = nh * (nh * nh + Rational(2)) / Rational(6) +
                   Rational(Int(4) * n * n + Int(6) * n - Int(1), 16);
    if (prod != rhs)
      fail(cubic_product_half, n, Int(0), "half-integer cubic form failed");

    for (Int a = alpha_lo; a <= alpha_hi; ++a) {
      // C(n - alpha + 3, 3) expanded around the alpha-free cubic, valid for
      // n >= alpha - 3.
      if (n >= a - Int(3)) {
        Rational linear = Rational(a) * Rational(n * n, 2) -
                          Rational(a * a) * Rational(n, 2) +
                          Rational(Int(2) * a * n);
        Rational constant = Rational(a * a * a, 6) - Rational(a * a) +
                            Rational(Int(11) * a, 6);
        Rational expect = prod - linear - constant;
        if (Rational(binom3(n - a + Int(3))) != expect)
          fail(binomial_expansion, n, a, "binomial expansion failed");
      }

      // Closed form for h0 - h3 against the direct difference of section
      // counts, both twist directions, alpha <= 0 only.
      if (a <= Int(0)) {
        for (int c1 : {0, -1}) {
          if (n < a - Int(3) || n > -a - Int(c1)) continue;
          Int dual_count = (c1 == 0) ? -n - a - Int(1) : -n - a;
          Int direct = binom3(n - a + Int(3)) - binom3(dual_count);
          if (h0_minus_h3_nonstable(c1, a, n) != direct)
            fail(section_dual, n, a,
                 std::string("closed form disagrees with binomial difference "
                             "at c1=") +
                     std::to_string(c1));
        }
      }
    }
  }

  IdentityReport report;
  report.checks = {square_shift,       half_square_shift,  cubic_product,
                   cubic_product_half, binomial_expansion, section_dual};
  return report;
}

}  // namespace ranktwo
