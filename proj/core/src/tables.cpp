#include "ranktwo/tables.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ranktwo/euler.hpp"
#include "ranktwo/theorems.hpp"

namespace ranktwo {

const TableRow& CohomologyTable::row(Int n) const {
  if (!contains(n))
    throw std::out_of_range("CohomologyTable: twist " + to_string(n) +
                            " outside window");
  return rows[static_cast<size_t>((n - n_min).to_int64())];
}

TableRow& CohomologyTable::row(Int n) {
  return const_cast<TableRow&>(
      static_cast<const CohomologyTable&>(*this).row(n));
}

const char* check_status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "FAIL";
    case CheckResult::Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& tok, int lineno) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw TableParseError(lineno, "malformed integer '" + tok + "'");
  return v;
}

struct PendingRow {
  Int n;
  TableRow row;
  int lineno;
};

}  // namespace

CohomologyTable parse_table(std::istream& in) {
  std::optional<long long> c1, c2, alpha, beta, gamma;
  std::vector<PendingRow> pending;
  std::string line;
  int lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (auto eq = line.find('='); eq != std::string::npos) {
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      long long v = parse_int(value, lineno);
      std::optional<long long>* slot = nullptr;
      if (key == "c1")
        slot = &c1;
      else if (key == "c2")
        slot = &c2;
      else if (key == "alpha")
        slot = &alpha;
      else if (key == "beta")
        slot = &beta;
      else if (key == "gamma")
        slot = &gamma;
      else
        throw TableParseError(lineno, "unknown header '" + key + "'");
      if (*slot)
        throw TableParseError(lineno, "duplicate header '" + key + "'");
      *slot = v;
      continue;
    }

    std::istringstream fields(line);
    std::vector<long long> vals;
    std::string tok;
    while (fields >> tok) vals.push_back(parse_int(tok, lineno));
    if (vals.size() != 3 && vals.size() != 5)
      throw TableParseError(
          lineno, "data line needs '<n> <h0> <h1>' or '<n> <h0> <h1> <h2> <h3>'");
    for (size_t i = 1; i < vals.size(); ++i)
      if (vals[i] < 0) throw TableParseError(lineno, "negative count");
    TableRow row{Int(vals[1]), Int(vals[2]), std::nullopt, std::nullopt};
    if (vals.size() == 5) {
      row.h2 = Int(vals[3]);
      row.h3 = Int(vals[4]);
    }
    pending.push_back({Int(vals[0]), row, lineno});
  }

  if (!c1) throw TableParseError(lineno, "missing required header 'c1='");
  if (!c2) throw TableParseError(lineno, "missing required header 'c2='");
  if (pending.empty()) throw TableParseError(lineno, "no data rows");

  for (size_t i = 1; i < pending.size(); ++i) {
    if (pending[i].n == pending[i - 1].n)
      throw TableParseError(pending[i].lineno,
                            "duplicate twist " + to_string(pending[i].n));
    if (pending[i].n != pending[i - 1].n + Int(1))
      throw TableParseError(pending[i].lineno, "non-contiguous window");
  }

  if (*c1 != 0 && *c1 != -1)
    throw TableParseError(lineno, "c1 must be 0 or -1");
  CohomologyTable table{ChernClasses(static_cast<int>(*c1), Int(*c2))};
  if (alpha) table.alpha = Int(*alpha);
  if (beta) table.beta = Int(*beta);
  if (gamma) table.gamma = Int(*gamma);
  table.n_min = pending.front().n;
  table.n_max = pending.back().n;
  for (const auto& p : pending) table.rows.push_back(p.row);

  if (table.alpha) {
    for (const auto& p : pending) {
      if (p.n < *table.alpha && p.row.h0 != Int(0))
        throw TableParseError(
            p.lineno, "h0 > 0 at twist " + to_string(p.n) +
                          " below the declared alpha=" + to_string(*table.alpha));
      if (p.n == *table.alpha && p.row.h0 == Int(0))
        throw TableParseError(
            p.lineno,
            "h0 = 0 at the declared alpha=" + to_string(*table.alpha));
    }
  }
  return table;
}

CohomologyTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return parse_table(in);
}

CohomologyTable parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  return parse_table(in);
}

std::string serialize(const CohomologyTable& table) {
  std::string out;
  out += "c1=" + std::to_string(table.chern.c1) + "\n";
  out += "c2=" + to_string(table.chern.c2) + "\n";
  if (table.alpha) out += "alpha=" + to_string(*table.alpha) + "\n";
  if (table.beta) out += "beta=" + to_string(*table.beta) + "\n";
  if (table.gamma) out += "gamma=" + to_string(*table.gamma) + "\n";
  for (Int n = table.n_min; n <= table.n_max; ++n) {
    const TableRow& r = table.row(n);
    out += to_string(n) + " " + to_string(r.h0) + " " + to_string(r.h1);
    if (r.h2 && r.h3) out += " " + to_string(*r.h2) + " " + to_string(*r.h3);
    out += "\n";
  }
  return out;
}

DualityFillResult fill_by_duality(const CohomologyTable& table) {
  DualityFillResult res{table, {}, {}};
  for (Int n = table.n_min; n <= table.n_max; ++n) {
    Int d = serre_dual_twist(table.chern.c1, n);
    if (!table.contains(d)) {
      res.skipped.push_back(n);
      continue;
    }
    const TableRow& dual = table.row(d);
    TableRow& r = res.table.row(n);
    Int implied_h2 = dual.h1;
    Int implied_h3 = dual.h0;
    if (!r.h2)
      r.h2 = implied_h2;
    else if (*r.h2 != implied_h2)
      res.conflicts.push_back({n, 2, *r.h2, implied_h2});
    if (!r.h3)
      r.h3 = implied_h3;
    else if (*r.h3 != implied_h3)
      res.conflicts.push_back({n, 3, *r.h3, implied_h3});
  }
  return res;
}

std::vector<CheckResult> verify_table(const CohomologyTable& table,
                                      const BundleProfile& profile) {
  if (!(table.chern == profile.chern))
    throw std::invalid_argument(
        "verify_table: table and profile disagree on Chern data");

  DualityFillResult fill = fill_by_duality(table);
  const CohomologyTable& t = fill.table;
  std::vector<CheckResult> out;

  CheckResult chi{"CHI"};
  int complete = 0;
  for (Int n = t.n_min; n <= t.n_max; ++n) {
    const TableRow& r = t.row(n);
    if (!r.h2 || !r.h3) continue;
    ++complete;
    Int sum = r.h0 - r.h1 + *r.h2 - *r.h3;
    Int expect = chi_p3(t.chern, n);
    if (sum != expect) {
      chi.status = CheckResult::Status::Fail;
      chi.details.push_back("n=" + to_string(n) + ": alternating sum " +
                            to_string(sum) + " != chi " + to_string(expect));
    }
  }
  if (complete == 0) {
    chi.status = CheckResult::Status::Skipped;
    chi.reason = "no twist has complete h0..h3 data (duals outside window)";
  }
  out.push_back(chi);

  CheckResult duality{"DUALITY"};
  for (const auto& c : fill.conflicts) {
    duality.status = CheckResult::Status::Fail;
    duality.details.push_back("n=" + to_string(c.n) + ": recorded h" +
                              std::to_string(c.degree) + " = " +
                              to_string(c.recorded) + ", duality implies " +
                              to_string(c.implied));
  }
  out.push_back(duality);

  CheckResult forced{"FORCED"};
  try {
    NonVanishingReport rep = forced_nonvanishing(profile);
    for (const auto& f : rep.forced) {
      if (!t.contains(f.n)) continue;
      if (t.row(f.n).h1 == Int(0)) {
        forced.status = CheckResult::Status::Fail;
        std::string via;
        for (ClauseId id : f.clauses)
          via += std::string(via.empty() ? "" : ",") + clause_name(id);
        forced.details.push_back("n=" + to_string(f.n) +
                                 ": h1 = 0 but forced nonzero by " + via);
      }
    }
  } catch (const std::domain_error& e) {
    forced.status = CheckResult::Status::Skipped;
    forced.reason = e.what();
  }
  out.push_back(forced);

  CheckResult leftvanish{"LEFTVANISH"};
  if (!profile.alpha) {
    leftvanish.status = CheckResult::Status::Skipped;
    leftvanish.reason = "alpha not supplied";
  } else {
    LeftVanishingResult lv = propagate_left_vanishing(t, *profile.alpha);
    for (Int n : lv.violations) {
      leftvanish.status = CheckResult::Status::Fail;
      leftvanish.details.push_back(
          "n=" + to_string(n) + ": h1 = " + to_string(t.row(n).h1) +
          " but h1(E(" + to_string(*lv.witness) + ")) = 0 forces 0 here");
    }
  }
  out.push_back(leftvanish);

  CheckResult alpha_check{"ALPHA"};
  if (!profile.alpha) {
    alpha_check.status = CheckResult::Status::Skipped;
    alpha_check.reason = "alpha not supplied";
  } else {
    Int a = *profile.alpha;
    if (a > t.n_max) {
      for (Int n = t.n_min; n <= t.n_max; ++n)
        if (t.row(n).h0 != Int(0)) {
          alpha_check.status = CheckResult::Status::Fail;
          alpha_check.details.push_back("n=" + to_string(n) +
                                        ": h0 > 0 although alpha = " +
                                        to_string(a) + " lies above the window");
        }
    } else if (a < t.n_min) {
      // Sections only grow with the twist, so the whole window must have
      // some.
      for (Int n = t.n_min; n <= t.n_max; ++n)
        if (t.row(n).h0 == Int(0)) {
          alpha_check.status = CheckResult::Status::Fail;
          alpha_check.details.push_back("n=" + to_string(n) +
                                        ": h0 = 0 although alpha = " +
                                        to_string(a) + " lies below the window");
        }
    } else {
      for (Int n = t.n_min; n < a; ++n)
        if (t.row(n).h0 != Int(0)) {
          alpha_check.status = CheckResult::Status::Fail;
          alpha_check.details.push_back("n=" + to_string(n) +
                                        ": h0 > 0 below alpha = " + to_string(a));
        }
      if (t.row(a).h0 == Int(0)) {
        alpha_check.status = CheckResult::Status::Fail;
        alpha_check.details.push_back("n=" + to_string(a) +
                                      ": h0 = 0 at alpha = " + to_string(a));
      }
    }
  }
  out.push_back(alpha_check);

  CheckResult nonstable{"NONSTABLE-H0"};
  nonstable.fatal = false;
  if (!profile.alpha || *profile.alpha > Int(0)) {
    nonstable.status = CheckResult::Status::Skipped;
    nonstable.reason = "alpha unknown or positive";
  } else {
    Int a = *profile.alpha;
    Int top = -a - Int(t.chern.c1);
    Int hi = t.n_max < top ? t.n_max : top;
    if (hi < t.n_min) {
      nonstable.status = CheckResult::Status::Skipped;
      nonstable.reason = "window lies above the instability range";
    } else {
      for (Int n = t.n_min; n <= hi; ++n) {
        Int expect = binom3(n - a + Int(3));
        if (t.row(n).h0 != expect) {
          nonstable.status = CheckResult::Status::Fail;
          nonstable.details.push_back(
              "n=" + to_string(n) + ": h0 = " + to_string(t.row(n).h0) +
              " but the section count of the split comparison bundle is " +
              to_string(expect));
        }
      }
    }
  }
  out.push_back(nonstable);

  return out;
}

bool verification_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.fatal && r.status == CheckResult::Status::Fail) return false;
  return true;
}

}  // namespace ranktwo
