#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ranktwo/bounds.hpp"
#include "ranktwo/bundle.hpp"
#include "ranktwo/euler.hpp"
#include "ranktwo/exact.hpp"
#include "ranktwo/fixtures.hpp"
#include "ranktwo/tables.hpp"
#include "ranktwo/theorems.hpp"

using namespace ranktwo;

namespace {

std::string approx4(const QuadraticValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4Lf", qv_approx(v));
  return buf;
}

// "1 (integer)", "sqrt(13)-2 ~1.6056" in plain mode; bare exact form in
// records mode, where a decimal approximation never appears.
std::string bound_text(const QuadraticValue& v, bool records) {
  std::string s = to_display_string(v);
  if (records) return s;
  Int s0 = isqrt(v.radicand);
  if (s0 * s0 == v.radicand)
    return s + (qv_is_integer(v) ? " (integer)" : " (rational)");
  return s + " ~" + approx4(v);
}

void emit_profile(std::ostream& os, const BundleProfile& p) {
  os << "c1=" << p.chern.c1 << "\n";
  os << "c2=" << p.chern.c2 << "\n";
  if (p.alpha) os << "alpha=" << *p.alpha << "\n";
  if (p.beta) os << "beta=" << *p.beta << "\n";
  if (p.gamma) os << "gamma=" << *p.gamma << "\n";
  os << "stability=" << stability_name(p.stability) << "\n";
  if (p.delta_value) os << "delta=" << *p.delta_value << "\n";
  for (const auto& w : p.warnings) os << "warning=" << w << "\n";
}

void emit_engine_report(std::ostream& os, const NonVanishingReport& rep) {
  os << "forced=" << rep.forced_lo << ".." << rep.forced_hi << "\n";
  os << "forced_max=" << rep.max_forced() << "\n";
  for (const auto& f : rep.forced) {
    os << "forced[" << f.n << "]=";
    bool first = true;
    for (ClauseId id : f.clauses) {
      if (!first) os << ",";
      os << clause_name(id);
      first = false;
    }
    os << "\n";
  }
  for (const auto& vc : rep.vanishing_constraints)
    os << "constraint[" << clause_name(vc.id) << "]=" << vc.text << "\n";
  for (const auto& c : rep.conditional)
    os << "conditional[" << clause_name(c.id) << "]=" << c.reason << "\n";
  for (const auto& n : rep.notes) os << "note=" << n << "\n";
  if (rep.comparison) {
    os << "gamma_bound=" << rep.comparison->gamma_bound << "\n";
    os << "our_bound=" << rep.comparison->our_bound << "\n";
    os << "verdict=" << verdict_name(rep.comparison->verdict) << "\n";
  }
}

int cmd_report(long long c1, long long c2, std::optional<long long> alpha,
               std::optional<long long> gamma, bool records) {
  std::optional<Int> a, g;
  if (alpha) a = Int(*alpha);
  if (gamma) g = Int(*gamma);
  BundleProfile profile =
      make_profile(ChernClasses(static_cast<int>(c1), Int(c2)), a, g);

  // Run the engine before printing anything, so a refused profile produces
  // only the error message and exit code 1.
  NonVanishingReport rep = forced_nonvanishing(profile);

  std::ostringstream os;
  emit_profile(os, profile);
  if (profile.chern.c2 >= Int(0)) {
    QuadraticValue z = zeta(profile.chern);
    os << "zeta=" << bound_text(z, records) << "\n";
    if (records) {
      os << "zeta_floor=" << qv_floor(z) << "\n";
      os << "zeta_integer=" << (qv_is_integer(z) ? 1 : 0) << "\n";
    }
    os << "bar_alpha=" << bar_alpha(profile.chern) << "\n";
  } else {
    os << "zeta=na\n";
  }
  if (profile.alpha && *profile.alpha == Int(0) && profile.chern.c2 >= Int(0)) {
    QuadraticValue t = tau(profile.chern);
    os << "tau=" << bound_text(t, records) << "\n";
    if (records) os << "tau_floor=" << qv_floor(t) << "\n";
  }
  if (profile.alpha && *profile.alpha < Int(0)) {
    Int dv = *profile.delta_value;
    if (dv >= Int(0)) {
      QuadraticValue e = eta_delta(profile.chern.c1, dv);
      os << "eta_delta=" << bound_text(e, records) << "\n";
      if (records) os << "eta_delta_floor=" << qv_floor(e) << "\n";
      try {
        QuadraticValue e2 =
            eta_alpha_delta(profile.chern.c1, *profile.alpha, dv);
        os << "eta_alpha_delta=" << bound_text(e2, records) << "\n";
        if (records) os << "eta_alpha_delta_floor=" << qv_floor(e2) << "\n";
      } catch (const std::domain_error&) {
        os << "eta_alpha_delta=na\n";
      }
    } else {
      os << "eta_delta=na\n";
      os << "eta_alpha_delta=na\n";
    }
  }
  emit_engine_report(os, rep);
  std::cout << os.str();
  return 0;
}

int cmd_verify(const std::string& path, std::optional<long long> alpha,
               std::optional<long long> gamma, bool records) {
  CohomologyTable table = parse_table_file(path);
  std::optional<Int> a = table.alpha, g = table.gamma;
  if (alpha) {
    if (table.alpha && *table.alpha != Int(*alpha))
      std::cerr << "warning: --alpha " << *alpha
                << " overrides table header alpha=" << *table.alpha << "\n";
    a = Int(*alpha);
  }
  if (gamma) {
    if (table.gamma && *table.gamma != Int(*gamma))
      std::cerr << "warning: --gamma " << *gamma
                << " overrides table header gamma=" << *table.gamma << "\n";
    g = Int(*gamma);
  }
  BundleProfile profile = make_profile(table.chern, a, g, table.beta);
  std::vector<CheckResult> results = verify_table(table, profile);

  std::ostringstream os;
  os << "file=" << path << "\n";
  emit_profile(os, profile);
  os << "window=[" << table.n_min << "," << table.n_max << "]\n";
  for (const auto& r : results) {
    if (records) {
      os << "check." << r.name << "=" << check_status_name(r.status) << "\n";
    } else {
      os << "check " << r.name << ": " << check_status_name(r.status);
      if (r.status == CheckResult::Status::Skipped) os << " (" << r.reason << ")";
      if (r.status == CheckResult::Status::Fail && !r.fatal)
        os << " (diagnostic only)";
      os << "\n";
    }
    for (const auto& d : r.details) std::cerr << r.name << ": " << d << "\n";
  }
  bool ok = verification_passed(results);
  os << "result=" << (ok ? "pass" : "fail") << "\n";
  std::cout << os.str();
  return ok ? 0 : 1;
}

int cmd_identities(long long n_min, long long n_max, long long alpha_min,
                   long long alpha_max) {
  IdentityReport rep = verify_lemma_identities(Int(n_min), Int(n_max),
                                               Int(alpha_min), Int(alpha_max));
  for (const auto& c : rep.checks) {
    std::cout << "identity " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass && c.counterexample)
      std::cout << " at n=" << c.counterexample->first
                << " alpha=" << c.counterexample->second << " (" << c.detail
                << ")";
    std::cout << "\n";
  }
  std::cout << "result=" << (rep.all_pass() ? "pass" : "fail") << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_sweep(long long c1, long long c2_min, long long c2_max,
              std::optional<long long> alpha) {
  if (c2_min > c2_max)
    throw std::domain_error("sweep: empty range (--c2-min > --c2-max)");
  std::ostringstream os;
  for (long long c2 = c2_min; c2 <= c2_max; ++c2) {
    ChernClasses c(static_cast<int>(c1), Int(c2));
    os << "c2=" << c2;
    if (c2 >= 0) {
      os << " zeta=" << to_display_string(zeta(c));
      os << " bar_alpha=" << bar_alpha(c);
      os << " tau_floor=" << qv_floor(tau(c));
    } else {
      os << " zeta=na bar_alpha=na tau_floor=na";
    }
    std::optional<Int> a;
    if (alpha) a = Int(*alpha);
    BundleProfile profile = make_profile(c, a);
    if (a) {
      Int dv = *profile.delta_value;
      os << " delta=" << dv;
      if (*a < Int(0) && dv >= Int(0)) {
        os << " eta_delta_floor=" << qv_floor(eta_delta(c.c1, dv));
        try {
          os << " eta_alpha_delta_floor="
             << qv_floor(eta_alpha_delta(c.c1, *a, dv));
        } catch (const std::domain_error&) {
          os << " eta_alpha_delta_floor=na";
        }
      } else {
        os << " eta_delta_floor=na eta_alpha_delta_floor=na";
      }
    }
    try {
      NonVanishingReport rep = forced_nonvanishing(profile);
      os << " forced_max=" << rep.max_forced();
    } catch (const std::domain_error&) {
      os << " forced_max=na";
    }
    os << "\n";
  }
  std::cout << os.str();
  return 0;
}

int cmd_fixtures(bool run) {
  int failures = 0;
  std::ostringstream os;
  for (const Fixture& f : builtin_fixtures()) {
    os << "fixture " << f.name << ": c1=" << f.profile.chern.c1
       << " c2=" << f.profile.chern.c2;
    if (f.profile.alpha) os << " alpha=" << *f.profile.alpha;
    if (f.profile.gamma) os << " gamma=" << *f.profile.gamma;
    os << " table=" << (f.table ? "yes" : "no");
    if (f.table)
      os << " window=[" << f.table->n_min << "," << f.table->n_max << "]";
    if (f.expected_forced_max)
      os << " expected_forced_max=" << *f.expected_forced_max;
    os << "\n";
    for (const auto& a : f.annotations) os << "  note: " << a << "\n";
    if (!run) continue;

    bool ok = true;
    std::string why;
    try {
      NonVanishingReport rep = forced_nonvanishing(f.profile);
      if (f.expected_forced_max && rep.max_forced() != *f.expected_forced_max) {
        ok = false;
        why = "forced_max " + to_string(rep.max_forced()) + " != expected " +
              to_string(*f.expected_forced_max);
      }
      if (ok && f.table) {
        std::vector<CheckResult> results = verify_table(*f.table, f.profile);
        if (!verification_passed(results)) {
          ok = false;
          why = "table verification failed";
          for (const auto& r : results)
            for (const auto& d : r.details)
              std::cerr << f.name << " " << r.name << ": " << d << "\n";
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    os << "  run: " << (ok ? "ok" : "FAIL (" + why + ")") << "\n";
    if (!ok) ++failures;
  }
  if (run) os << "result=" << (failures == 0 ? "pass" : "fail") << "\n";
  std::cout << os.str();
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact non-vanishing, splitting and cohomology-table calculator for "
      "normalized rank-2 bundles on projective 3-space"};
  app.require_subcommand(1);

  std::string format = "plain";

  auto* rep = app.add_subcommand(
      "report", "bounds, forced non-vanishing and gamma comparison");
  long long rc1 = 0, rc2 = 0;
  std::optional<long long> ralpha, rgamma;
  rep->add_option("--c1", rc1, "first Chern class (0 or -1)")->required();
  rep->add_option("--c2", rc2, "second Chern class")->required();
  rep->add_option("--alpha", ralpha, "first twist with sections");
  rep->add_option("--gamma", rgamma, "external non-vanishing bound");
  rep->add_option("--format", format, "plain or records")
      ->check(CLI::IsMember({"plain", "records"}));

  auto* ver =
      app.add_subcommand("verify", "check a cohomology table file");
  std::string vfile;
  std::optional<long long> valpha, vgamma;
  ver->add_option("file", vfile, "table file")->required();
  ver->add_option("--alpha", valpha, "first twist with sections");
  ver->add_option("--gamma", vgamma, "external non-vanishing bound");
  ver->add_option("--format", format, "plain or records")
      ->check(CLI::IsMember({"plain", "records"}));

  auto* ident = app.add_subcommand(
      "identities", "re-check the algebraic identities over integer ranges");
  long long in_min = 0, in_max = 0, ia_min = 0, ia_max = 0;
  ident->add_option("--n-min", in_min, "lowest twist")->required();
  ident->add_option("--n-max", in_max, "highest twist")->required();
  ident->add_option("--alpha-min", ia_min, "lowest alpha")->required();
  ident->add_option("--alpha-max", ia_max, "highest alpha")->required();

  auto* sweep =
      app.add_subcommand("sweep", "bounds across a range of c2 values");
  long long sc1 = 0, sc2_min = 0, sc2_max = 0;
  std::optional<long long> salpha;
  sweep->add_option("--c1", sc1, "first Chern class (0 or -1)")->required();
  sweep->add_option("--c2-min", sc2_min, "lowest c2")->required();
  sweep->add_option("--c2-max", sc2_max, "highest c2")->required();
  sweep->add_option("--alpha", salpha, "first twist with sections");

  auto* fix =
      app.add_subcommand("fixtures", "list (and optionally run) the bundled "
                                     "worked datasets");
  bool frun = false;
  fix->add_flag("--run", frun, "recompute each dataset and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  bool records = format == "records";
  try {
    if (rep->parsed()) return cmd_report(rc1, rc2, ralpha, rgamma, records);
    if (ver->parsed()) return cmd_verify(vfile, valpha, vgamma, records);
    if (ident->parsed()) return cmd_identities(in_min, in_max, ia_min, ia_max);
    if (sweep->parsed()) return cmd_sweep(sc1, sc2_min, sc2_max, salpha);
    if (fix->parsed()) return cmd_fixtures(frun);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
