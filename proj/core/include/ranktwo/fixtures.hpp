#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ranktwo/bundle.hpp"
#include "ranktwo/tables.hpp"

namespace ranktwo {

// A worked dataset bundled with the library: a profile, optionally a full
// cohomology table, and the non-vanishing reach the engine is expected to
// compute for it.
struct Fixture {
  std::string name;
  BundleProfile profile;
  std::optional<CohomologyTable> table;
  std::optional<Int> expected_forced_max;
  std::vector<std::string> annotations;
};

const std::vector<Fixture>& builtin_fixtures();

const Fixture& fixture_by_name(const std::string& name);

}  // namespace ranktwo
