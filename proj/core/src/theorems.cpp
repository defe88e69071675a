#include "ranktwo/theorems.hpp"

#include <map>

#include "ranktwo/tables.hpp"

namespace ranktwo {

const char* clause_name(ClauseId id) {
  switch (id) {
    case ClauseId::T31_i: return "T31_i";
    case ClauseId::T31_ii: return "T31_ii";
    case ClauseId::T31_iii: return "T31_iii";
    case ClauseId::T31_iv: return "T31_iv";
    case ClauseId::T31_v: return "T31_v";
    case ClauseId::T31_vi: return "T31_vi";
    case ClauseId::T37_i: return "T37_i";
    case ClauseId::T37_ii: return "T37_ii";
    case ClauseId::T37_iii: return "T37_iii";
    case ClauseId::T37_iv: return "T37_iv";
    case ClauseId::P315_a: return "P315_a";
    case ClauseId::P315_b: return "P315_b";
    case ClauseId::P315_c: return "P315_c";
    case ClauseId::L313: return "L313";
    case ClauseId::L314: return "L314";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Better: return "better";
    case Verdict::Equal: return "equal";
    case Verdict::Worse: return "worse";
  }
  return "?";
}

const char* split_kind_name(SplitVerdict::Kind k) {
  switch (k) {
    case SplitVerdict::Kind::Split: return "split";
    case SplitVerdict::Kind::NonSplit: return "non-split";
    case SplitVerdict::Kind::Undetermined: return "undetermined";
  }
  return "?";
}

bool NonVanishingReport::is_forced(Int n) const { return find(n) != nullptr; }

const ForcedTwist* NonVanishingReport::find(Int n) const {
  for (const auto& f : forced)
    if (f.n == n) return &f;
  return nullptr;
}

namespace {

using Ordering = std::strong_ordering;

class Tagger {
 public:
  void tag(Int n, ClauseId id) {
    auto& v = tags_[n];
    for (ClauseId c : v)
      if (c == id) return;
    v.push_back(id);
  }
  void tag_range(Int lo, Int hi, ClauseId id) {
    for (Int n = lo; n <= hi; ++n) tag(n, id);
  }
  std::vector<ForcedTwist> take() const {
    std::vector<ForcedTwist> out;
    out.reserve(tags_.size());
    for (const auto& [n, ids] : tags_) out.push_back({n, ids});
    return out;
  }

 private:
  std::map<Int, std::vector<ClauseId>> tags_;
};

}  // namespace

std::vector<VanishingConstraint> vanishing_constraints_stable(
    const ChernClasses& c, Int alpha) {
  if (alpha <= Int(0))
    throw std::domain_error(
        "vanishing_constraints_stable: requires alpha > 0 (stable)");
  if (c.c2 <= Int(0))
    throw std::domain_error(
        "theorem inapplicable: requires c2 > 0 or non-stability");
  QuadraticValue z = zeta(c);
  Int abar = qv_floor(z) + Int(1);
  bool z_int = qv_is_integer(z);

  VanishingConstraint v;
  v.id = ClauseId::T31_v;
  v.alpha = alpha;
  v.bar_alpha_value = abar;
  v.window_lo = Int(-1);
  v.window_hi = alpha - Int(1);
  v.satisfiable = z_int && alpha == abar;
  v.conclusion = alpha - Int(1);
  v.text = "h1(E(n)) = 0 with -1 <= n <= " + to_string(alpha - Int(1)) +
           " needs n = " + to_string(alpha - Int(1)) +
           ", alpha = bar_alpha and zeta integral";
  if (v.satisfiable)
    v.text += " (all hold here: alpha = bar_alpha = " + to_string(abar) + ")";
  else
    v.text += " (not all hold here: h1 != 0 on the whole range)";

  VanishingConstraint vi;
  vi.id = ClauseId::T31_vi;
  vi.alpha = alpha;
  vi.bar_alpha_value = abar;
  vi.window_lo = alpha;
  vi.window_hi = std::nullopt;
  vi.satisfiable = true;
  vi.conclusion = abar;
  vi.text = "h1(E(n)) = 0 with n >= " + to_string(alpha) +
            " forces n >= " + to_string(abar);

  return {v, vi};
}

NonVanishingReport forced_nonvanishing(const BundleProfile& profile) {
  const ChernClasses& c = profile.chern;
  if (profile.alpha && profile.delta_value &&
      split_by_delta(*profile.delta_value))
    throw std::domain_error(
        "split bundle (delta = 0): forced non-vanishing applies to non-split "
        "bundles only");

  NonVanishingReport rep;
  Tagger tagger;
  const bool nonstable = profile.alpha && *profile.alpha <= Int(0);

  if (!nonstable) {
    // Stable, or alpha unknown: the zeta-driven clauses need c2 > 0.
    if (c.c2 <= Int(0))
      throw std::domain_error(
          "theorem inapplicable: requires c2 > 0 or non-stability");
    QuadraticValue z = zeta(c);
    Int abar = qv_floor(z) + Int(1);
    bool z_int = qv_is_integer(z);

    for (Int n = -1; qv_cmp(z, Rational(n)) == Ordering::greater; ++n)
      tagger.tag(n, ClauseId::T31_i);

    Int hi2 = z_int ? abar - Int(2) : abar - Int(1);
    tagger.tag_range(Int(-1), hi2, ClauseId::T31_ii);

    if (z_int) {
      if (!profile.alpha)
        rep.conditional.push_back(
            {ClauseId::T31_iii,
             "needs alpha: fires at n = bar_alpha - 1 when alpha < bar_alpha"});
      else if (*profile.alpha < abar)
        tagger.tag(abar - Int(1), ClauseId::T31_iii);
    }

    if (!profile.alpha) {
      rep.conditional.push_back(
          {ClauseId::T31_iv,
           "needs alpha: fires at n = bar_alpha - 1 when alpha <= 0"});
      rep.conditional.push_back({ClauseId::T31_v, "needs alpha"});
      rep.conditional.push_back({ClauseId::T31_vi, "needs alpha"});
      const char* reason = "needs alpha: applies when alpha <= 0";
      rep.conditional.push_back({ClauseId::T37_i, reason});
      rep.conditional.push_back({ClauseId::T37_ii, reason});
      rep.conditional.push_back({ClauseId::T37_iii, reason});
      rep.conditional.push_back({ClauseId::T37_iv, reason});
      rep.notes.push_back("alpha unknown: results assume a non-split bundle");
    } else {
      rep.vanishing_constraints =
          vanishing_constraints_stable(c, *profile.alpha);
    }
  } else {
    const Int alpha = *profile.alpha;
    const Int dv = *profile.delta_value;
    const Int c1 = Int(c.c1);

    tagger.tag_range(Int(-1), -alpha - c1, ClauseId::T37_i);

    if (alpha == Int(0)) {
      if (c.c2 < Int(0)) {
        rep.conditional.push_back(
            {ClauseId::T37_ii,
             "tau undefined for negative c2 (no actual bundle has this "
             "data)"});
      } else {
        QuadraticValue t = tau(c);
        if (c.c1 == 0) {
          for (Int n = 0; qv_cmp(t, Rational(n)) == Ordering::greater; ++n)
            tagger.tag(n, ClauseId::T37_ii);
        } else {
          for (Int n = 1; qv_cmp(t, Rational(n)) != Ordering::less; ++n)
            tagger.tag(n, ClauseId::T37_ii);
        }
      }
    }

    if (alpha < Int(0)) {
      if (dv < Int(0)) {
        rep.conditional.push_back(
            {ClauseId::T37_iii,
             "eta undefined for negative delta (no actual bundle has this "
             "data)"});
      } else {
        QuadraticValue e = eta_delta(c.c1, dv);
        for (Int n = -1; qv_cmp(e, Rational(n)) != Ordering::less; ++n)
          tagger.tag(n, ClauseId::T37_iii);
        if (qv_is_integer(e))
          rep.notes.push_back(
              "eta(delta) = " + to_display_string(e) +
              " is an integer; the boundary twist is included as stated, "
              "though the underlying argument only needs n < eta");
      }

      if (c.c2 < Int(0)) {
        rep.conditional.push_back(
            {ClauseId::T37_iv, "requires c2 >= 0"});
      } else {
        try {
          QuadraticValue e2 = eta_alpha_delta(c.c1, alpha, dv);
          Int start = -alpha - c1;
          if (c.c1 == 0) {
            for (Int n = start; qv_cmp(e2, Rational(n)) == Ordering::greater;
                 ++n)
              tagger.tag(n, ClauseId::T37_iv);
          } else {
            for (Int n = start; qv_cmp(e2, Rational(n)) != Ordering::less; ++n)
              tagger.tag(n, ClauseId::T37_iv);
          }
        } catch (const std::domain_error& e) {
          rep.conditional.push_back({ClauseId::T37_iv, e.what()});
        }
      }
    }
  }

  rep.forced = tagger.take();
  if (rep.forced.empty())
    throw std::logic_error("forced_nonvanishing: empty forced set");
  rep.forced_lo = rep.forced.front().n;
  rep.forced_hi = rep.forced.back().n;

  // The clause ranges all start at -1 or overlap the previous one; a gap
  // would mean the aggregation itself is broken.
  Int expect = rep.forced_lo;
  for (const auto& f : rep.forced) {
    if (f.n != expect)
      throw std::logic_error("forced_nonvanishing: non-contiguous forced set");
    ++expect;
  }

  if (profile.gamma)
    rep.comparison = gamma_bound_comparison(rep, *profile.gamma);
  return rep;
}

GammaComparison gamma_bound_comparison(const NonVanishingReport& report,
                                       Int gamma) {
  GammaComparison g;
  g.gamma_bound = gamma - Int(2);
  g.our_bound = report.max_forced();
  if (g.our_bound > g.gamma_bound)
    g.verdict = Verdict::Better;
  else if (g.our_bound == g.gamma_bound)
    g.verdict = Verdict::Equal;
  else
    g.verdict = Verdict::Worse;
  return g;
}

SplitVerdict split_decision(int c1, std::optional<Int> c2,
                            StabilityClass stability, std::optional<Int> h1_m1,
                            std::optional<Int> h1_0, std::optional<Int> h1_p1) {
  if (c1 != 0 && c1 != -1)
    throw std::domain_error("split_decision: c1 must be 0 or -1");
  for (const auto& h : {h1_m1, h1_0, h1_p1})
    if (h && *h < Int(0))
      throw std::domain_error("split_decision: negative h1 value");

  using Kind = SplitVerdict::Kind;
  if (c1 == 0) {
    if (!h1_m1)
      return {Kind::Undetermined, {}, false, "h1(E(-1)) not supplied"};
    if (*h1_m1 == Int(0))
      return {Kind::Split, {ClauseId::P315_a}, false, "h1(E(-1)) = 0"};
    return {Kind::NonSplit,
            {ClauseId::P315_a},
            false,
            "h1(E(-1)) = " + to_string(*h1_m1) + " != 0"};
  }

  if (h1_m1 && *h1_m1 == Int(0))
    return {Kind::Split, {ClauseId::P315_b}, false, "h1(E(-1)) = 0"};
  if (h1_0 && *h1_0 == Int(0))
    return {Kind::Split, {ClauseId::P315_b}, false, "h1(E(0)) = 0"};
  if (h1_p1 && *h1_p1 == Int(0)) {
    bool maybe_stable = stability == StabilityClass::Stable ||
                        stability == StabilityClass::Unknown;
    bool maybe_c2_2 = !c2 || *c2 == Int(2);
    if (maybe_stable && maybe_c2_2)
      return {Kind::Undetermined,
              {ClauseId::P315_c},
              true,
              "h1(E(1)) = 0, but a stable bundle with c1 = -1, c2 = 2 "
              "satisfies this without splitting"};
    return {Kind::Split, {ClauseId::P315_c}, false, "h1(E(1)) = 0"};
  }
  if (h1_m1 && h1_0)
    return {Kind::NonSplit,
            {ClauseId::P315_b},
            false,
            "h1(E(-1)) and h1(E(0)) both nonzero"};
  return {Kind::Undetermined,
          {},
          false,
          "need h1(E(-1)) and h1(E(0)), or a vanishing among the decisive "
          "twists"};
}

LeftVanishingResult propagate_left_vanishing(const CohomologyTable& table,
                                             Int alpha) {
  LeftVanishingResult r;
  Int cutoff = alpha - Int(2);
  Int hi = table.n_max < cutoff ? table.n_max : cutoff;
  for (Int n = hi; n >= table.n_min; --n) {
    if (table.row(n).h1 == Int(0)) {
      r.witness = n;
      break;
    }
  }
  if (!r.witness) return r;
  for (Int n = table.n_min; n <= *r.witness; ++n) {
    r.implied.push_back(n);
    if (table.row(n).h1 > Int(0)) r.violations.push_back(n);
  }
  return r;
}

}  // namespace ranktwo
