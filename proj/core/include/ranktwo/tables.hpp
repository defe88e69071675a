#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ranktwo/bundle.hpp"
#include "ranktwo/exact.hpp"

namespace ranktwo {

struct TableRow {
  Int h0, h1;
  std::optional<Int> h2, h3;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Cohomology of E(n) over a contiguous window of twists. h0 and h1 are
// required per twist; h2 and h3 may be supplied or derived by duality.
struct CohomologyTable {
  ChernClasses chern;
  std::optional<Int> alpha, beta, gamma;
  Int n_min = Int(0), n_max = Int(-1);
  std::vector<TableRow> rows;  // rows[i] belongs to twist n_min + i

  bool contains(Int n) const { return n >= n_min && n <= n_max; }
  const TableRow& row(Int n) const;
  TableRow& row(Int n);

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

// Parse failure, carrying the 1-based line number of the offending input.
class TableParseError : public std::runtime_error {
 public:
  TableParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format, one item per line:
//   # comment (also allowed after content)
//   c1=<0|-1>        required header
//   c2=<int>         required header
//   alpha=<int>      optional header
//   beta=<int>       optional header (stored, never used in a formula)
//   gamma=<int>      optional header
//   <n> <h0> <h1> [<h2> <h3>]
// Twists must form a contiguous ascending range. When an alpha header is
// present the h0 column must vanish below alpha and be positive at alpha.
CohomologyTable parse_table(std::istream& in);
CohomologyTable parse_table(const std::string& text);
CohomologyTable parse_table_file(const std::string& path);

std::string serialize(const CohomologyTable& table);

struct DualityConflict {
  Int n;
  int degree;  // 2 or 3: which cohomology disagreed
  Int recorded, implied;
};

struct DualityFillResult {
  CohomologyTable table;
  std::vector<DualityConflict> conflicts;
  std::vector<Int> skipped;  // twists whose dual lies outside the window
};

// Completes h2/h3 from h1/h0 at the Serre-dual twist where that twist lies
// inside the window. Recorded values are never overwritten; disagreement
// with the implied value is reported as a conflict. Applying the fill twice
// changes nothing.
DualityFillResult fill_by_duality(const CohomologyTable& table);

struct CheckResult {
  std::string name;
  enum class Status { Pass, Fail, Skipped } status = Status::Pass;
  std::string reason;                // why a check was skipped
  std::vector<std::string> details;  // per-twist diagnostics
  bool fatal = true;                 // false: diagnostic only
};

const char* check_status_name(CheckResult::Status s);

// Runs every consistency check of the table against the profile:
//   CHI          alternating sum equals chi at every complete twist
//   DUALITY      no fill conflicts
//   FORCED       forced non-vanishing twists inside the window have h1 > 0
//   LEFTVANISH   a vanishing h1 below alpha-1 pulls everything left to zero
//   ALPHA        first twist with sections matches the declared alpha
//   NONSTABLE-H0 (non-fatal) section counts below the instability order
//                match the split comparison bundle
// The table's Chern data must agree with the profile's.
std::vector<CheckResult> verify_table(const CohomologyTable& table,
                                      const BundleProfile& profile);

// True when no fatal check failed.
bool verification_passed(const std::vector<CheckResult>& results);

}  // namespace ranktwo
