#include "ranktwo/fixtures.hpp"

namespace ranktwo {

namespace {

struct RowInit {
  long long h0, h1;
};

CohomologyTable make_table(int c1, long long c2, std::optional<long long> alpha,
                           std::optional<long long> gamma, long long n_min,
                           std::initializer_list<RowInit> rows) {
  CohomologyTable t{ChernClasses(c1, Int(c2))};
  if (alpha) t.alpha = Int(*alpha);
  if (gamma) t.gamma = Int(*gamma);
  t.n_min = Int(n_min);
  t.n_max = Int(n_min + static_cast<long long>(rows.size()) - 1);
  for (const RowInit& r : rows)
    t.rows.push_back({Int(r.h0), Int(r.h1), std::nullopt, std::nullopt});
  return t;
}

Fixture profile_fixture(std::string name, int c1, long long c2,
                        std::optional<long long> alpha,
                        std::optional<long long> gamma,
                        long long expected_max) {
  std::optional<Int> a, g;
  if (alpha) a = Int(*alpha);
  if (gamma) g = Int(*gamma);
  return Fixture{std::move(name),
                 make_profile(ChernClasses(c1, Int(c2)), a, g),
                 std::nullopt,
                 Int(expected_max),
                 {}};
}

Fixture table_fixture(std::string name, CohomologyTable table,
                      long long expected_max) {
  BundleProfile p =
      make_profile(table.chern, table.alpha, table.gamma, table.beta);
  return Fixture{std::move(name), std::move(p), std::move(table),
                 Int(expected_max), {}};
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  out.push_back(profile_fixture("4.1", 0, 2, 1, std::nullopt, 0));

  out.push_back(table_fixture("4.2",
                              make_table(-1, 2, 1, 2, -2,
                                         {{0, 0},
                                          {0, 1},
                                          {0, 2},
                                          {1, 1},
                                          {7, 0},
                                          {21, 0}}),
                              1));

  out.push_back(table_fixture("4.3A",
                              make_table(0, 4, 2, 2, -3,
                                         {{0, 0},
                                          {0, 1},
                                          {0, 4},
                                          {0, 6},
                                          {0, 4},
                                          {5, 1},
                                          {20, 0}}),
                              1));

  out.push_back(table_fixture("4.3B",
                              make_table(0, 4, 2, 2, -3,
                                         {{0, 0},
                                          {0, 1},
                                          {0, 4},
                                          {0, 6},
                                          {0, 4},
                                          {6, 2},
                                          {20, 0}}),
                              1));

  out.push_back(table_fixture("4.3C",
                              make_table(0, 4, 1, 2, -3,
                                         {{0, 0},
                                          {0, 1},
                                          {0, 4},
                                          {0, 6},
                                          {1, 5},
                                          {6, 2},
                                          {20, 0}}),
                              1));

  out.push_back(profile_fixture("4.5", 0, 9, -3, 9, 12));
  out.push_back(profile_fixture("4.6", 0, 3, 0, 3, 2));

  Fixture f47 = profile_fixture("4.7", 0, 47, 1, 9, 9);
  f47.annotations.push_back(
      "independent machine computation for this bundle gives h1(E(34)) != 0 "
      "and h1(E(35)) = 0; recorded for context, no formula here reaches it");
  out.push_back(std::move(f47));

  out.push_back(profile_fixture("4.8", 0, 20, 2, 10, 5));
  out.push_back(profile_fixture("4.9", 0, 0, -4, 12, 13));

  out.push_back(table_fixture("4.10",
                              make_table(0, 4, 0, std::nullopt, -3,
                                         {{0, 0},
                                          {0, 2},
                                          {0, 4},
                                          {1, 7},
                                          {4, 8},
                                          {10, 6},
                                          {20, 0}}),
                              2));

  return out;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture& fixture_by_name(const std::string& name) {
  for (const Fixture& f : builtin_fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named '" + name + "'");
}

}  // namespace ranktwo
