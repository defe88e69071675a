#include "ranktwo/bounds.hpp"

namespace ranktwo {

const char* bound_name(BoundKind k) {
  switch (k) {
    case BoundKind::Zeta: return "zeta";
    case BoundKind::Tau: return "tau";
    case BoundKind::EtaDelta: return "eta_delta";
    case BoundKind::EtaAlphaDelta: return "eta_alpha_delta";
  }
  return "?";
}

QuadraticValue zeta(const ChernClasses& c) {
  if (c.c2 < Int(0))
    throw std::domain_error("zeta undefined for negative c2");
  Int r = Int(12) * c.c2 + Int(4) - Int(3 * c.c1 * c.c1);
  return QuadraticValue(r, Int(4 + c.c1), Int(2));
}

Int bar_alpha(const ChernClasses& c) { return qv_floor(zeta(c)) + Int(1); }

QuadraticValue tau(const ChernClasses& c) {
  if (c.c2 < Int(0))
    throw std::domain_error("tau undefined for negative c2");
  if (c.c1 == 0)
    return QuadraticValue(Int(6) * c.c2 + Int(1), Int(2), Int(1));
  return QuadraticValue(Int(24) * c.c2 + Int(10), Int(3), Int(2));
}

QuadraticValue eta_delta(int c1, Int delta_value) {
  if (c1 != 0 && c1 != -1)
    throw std::domain_error("eta_delta: c1 must be 0 or -1");
  if (delta_value < Int(0))
    throw std::domain_error("eta undefined for negative delta");
  if (c1 == 0)
    return QuadraticValue(Int(6) * delta_value + Int(1), Int(2), Int(1));
  return QuadraticValue(Int(24) * delta_value + Int(10), Int(3), Int(2));
}

QuadraticValue eta_alpha_delta(int c1, Int alpha, Int delta_value) {
  if (c1 != 0 && c1 != -1)
    throw std::domain_error("eta_alpha_delta: c1 must be 0 or -1");
  if (alpha > Int(0))
    throw std::domain_error("eta_alpha_delta: requires alpha <= 0");
  if (c1 == 0) {
    Int r = Int(24) * delta_value + Int(4) - Int(3) * alpha * alpha;
    if (r < Int(0))
      throw std::domain_error(
          "eta_alpha_delta: negative radicand (delta too small against "
          "alpha^2)");
    return QuadraticValue(r, Int(4) + Int(3) * alpha, Int(2));
  }
  Int r = Int(96) * delta_value + Int(13) + Int(12) * alpha -
          Int(12) * alpha * alpha;
  if (r < Int(0))
    throw std::domain_error(
        "eta_alpha_delta: negative radicand (delta too small against "
        "alpha^2)");
  return QuadraticValue(r, Int(3) + Int(6) * alpha, Int(4));
}

}  // namespace ranktwo
