#include <gtest/gtest.h>

#include <numeric>

#include <bsswitch/bssp.hpp>

#include "test_support.hpp"

namespace bsswitch {
namespace {

using testing::path3;
using testing::triangle;

constexpr auto kSplit = TransferMode::ConservingSplit;
constexpr auto kLiteral = TransferMode::PaperLiteral;

TEST(TransferShare, Examples) {
  EXPECT_DOUBLE_EQ(transfer_share(0.2, 2, 20, kLiteral), 0.01);
  EXPECT_DOUBLE_EQ(transfer_share(0.2, 2, 20, kSplit), 0.1);
  EXPECT_EQ(transfer_share(0.0, 3, 20, kSplit), 0.0);
  EXPECT_EQ(transfer_share(0.0, 3, 20, kLiteral), 0.0);
}

TEST(TransferShare, NoActiveNeighborIsAContractViolation) {
  EXPECT_THROW(transfer_share(0.2, 0, 20, kSplit), ContractViolation);
}

TEST(EffectiveLoads, PathSplitsMiddleStation) {
  const auto loads = effective_loads(path3(), Solution{1, 0, 1}, {0.2, 0.6, kSplit});
  EXPECT_DOUBLE_EQ(loads[0], 0.3);
  EXPECT_EQ(loads[1], 0.0);
  EXPECT_DOUBLE_EQ(loads[2], 0.3);
}

TEST(EffectiveLoads, AllActiveCarryOwnLoad) {
  const auto t = generate({20, 3.0, 10.0, 5});
  for (double load : effective_loads(t, Solution(20, 1), {0.35, 0.6, kSplit})) EXPECT_EQ(load, 0.35);
}

TEST(EffectiveLoads, TriangleHub) {
  const double rho = 0.15;
  const auto loads = effective_loads(triangle(), Solution{1, 0, 0}, {rho, 0.6, kSplit});
  EXPECT_DOUBLE_EQ(loads[0], 3 * rho);
  EXPECT_EQ(loads[1], 0.0);
  EXPECT_EQ(loads[2], 0.0);
}

TEST(EffectiveLoads, NoCascade) {
  // 0 - 1 - 2 - 3 with only station 0 active: station 2 has no active
  // neighbor and keeps its load to itself even though 1 is served.
  const Topology t(10.0, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}, {{0, 1}, {1, 2}, {2, 3}});
  const auto loads = effective_loads(t, Solution{1, 0, 0, 0}, {0.2, 0.6, kSplit});
  EXPECT_DOUBLE_EQ(loads[0], 0.4);
}

TEST(EffectiveLoads, LengthMismatch) {
  EXPECT_THROW(effective_loads(path3(), Solution{1, 0}, {0.2, 0.6, kSplit}), ContractViolation);
}

TEST(Penalty, IsolatedPairBothOff) {
  const Topology pair(10.0, {{1, 1}, {2, 2}}, {{0, 1}});
  const auto report = penalty(pair, Solution{0, 0}, {0.3, 0.6, kSplit});
  EXPECT_DOUBLE_EQ(report.per_station_penalty[0], 1.3);
  EXPECT_DOUBLE_EQ(report.per_station_penalty[1], 1.3);
  EXPECT_DOUBLE_EQ(report.fitness, 0 + 2 * (1.3 + 1.3));
}

TEST(Penalty, OverloadedActiveStation) {
  // Pair with one end off pushes 0.35 onto the other: load 0.7.
  const Topology pair(10.0, {{1, 1}, {2, 2}}, {{0, 1}});
  const auto report = penalty(pair, Solution{1, 0}, {0.35, 0.6, kSplit});
  EXPECT_DOUBLE_EQ(report.effective_load[0], 0.7);
  EXPECT_DOUBLE_EQ(report.per_station_penalty[0], 1.1);
  EXPECT_EQ(report.per_station_penalty[1], 0.0);
  EXPECT_DOUBLE_EQ(report.fitness, 1 + 2 * 1.1);
}

TEST(Penalty, AllActiveBelowCap) {
  const auto t = generate({20, 3.0, 10.0, 6});
  const auto report = penalty(t, Solution(20, 1), {0.5, 0.6, kSplit});
  for (double p : report.per_station_penalty) EXPECT_EQ(p, 0.0);
  EXPECT_EQ(report.fitness, 20.0);
  EXPECT_TRUE(is_feasible(report, 20));
}

TEST(Penalty, LoadExactlyAtCapIsNotPenalized) {
  const Topology pair(10.0, {{1, 1}, {2, 2}}, {{0, 1}});
  const auto report = penalty(pair, Solution{1, 0}, {0.25, 0.5, kSplit});
  EXPECT_EQ(report.effective_load[0], 0.5);
  EXPECT_EQ(report.per_station_penalty[0], 0.0);
}

TEST(Feasibility, Examples) {
  const auto t = generate({12, 3.0, 10.0, 3});
  EXPECT_TRUE(is_feasible(penalty(t, Solution(12, 1), {0.4, 0.6, kSplit}), 12));

  // Station 1 of the path is off with both neighbors off: scenario 1.
  const LoadParams p{0.2, 0.6, kSplit};
  const auto bad = penalty(path3(), Solution{0, 0, 0}, p);
  EXPECT_FALSE(is_feasible(bad, 3));
  EXPECT_GE(bad.fitness, 3 * (1 + 0.2));

  const auto good = penalty(path3(), Solution{1, 0, 1}, p);
  EXPECT_TRUE(is_feasible(good, 3));
  EXPECT_EQ(good.fitness, 2.0);
}

TEST(Feasibility, LiteralModeUsesStationCount) {
  // rho/|B| per receiver: hub of the triangle gets 0.55 + 2 * 0.55/3 > 0.6.
  const auto report = penalty(triangle(), Solution{1, 0, 0}, {0.55, 0.6, kLiteral});
  EXPECT_DOUBLE_EQ(report.effective_load[0], 0.55 + 2 * 0.55 / 3);
  EXPECT_FALSE(is_feasible(report, 3));
}

TEST(LowerBound, Values) {
  EXPECT_EQ(active_lower_bound(20, {0.3, 0.6, kSplit}), 10u);
  EXPECT_EQ(active_lower_bound(20, {0.05, 0.6, kSplit}), 2u);
  EXPECT_EQ(active_lower_bound(40, {0.55, 0.6, kSplit}), 37u);
}

// ---- properties --------------------------------------------------------

struct Case {
  Topology topology;
  Solution solution;
  LoadParams params;
};

Case random_case(Rng& rng, TransferMode mode) {
  auto t = testing::random_topology(rng, 3, 14);
  const double p_on = 0.2 + 0.7 * rng.uniform();
  auto s = testing::random_solution(rng, t.size(), p_on);
  const double rho = 0.6 * rng.uniform();
  return {std::move(t), std::move(s), {rho, 0.6, mode}};
}

TEST(Properties, PenaltyFeasibilityEquivalence) {
  Rng rng(11);
  for (int c = 0; c < 3000; ++c) {
    const auto mode = c % 2 ? kSplit : kLiteral;
    const auto [t, s, p] = random_case(rng, mode);
    const auto report = penalty(t, s, p);
    const bool feasible = is_feasible(report, t.size());
    ASSERT_EQ(feasible, report.fitness <= static_cast<double>(t.size()));
    ASSERT_EQ(feasible, testing::satisfies_constraints(t, s, p));
    double expected = 0.0;
    for (std::size_t b = 0; b < t.size(); ++b) expected += s[b] + t.size() * report.per_station_penalty[b];
    ASSERT_DOUBLE_EQ(report.fitness, expected);
    for (double pb : report.per_station_penalty) ASSERT_GE(pb, 0.0);
  }
}

TEST(Properties, ExhaustiveEquivalenceOnTwelveStations) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto t = generate({12, 3.0, 10.0, seed});
    for (double rho : {0.1, 0.3, 0.5}) {
      const LoadParams p{rho, 0.6, kSplit};
      for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
        const auto s = testing::from_mask(mask, 12);
        const auto report = penalty(t, s, p);
        ASSERT_EQ(is_feasible(report, 12), testing::satisfies_constraints(t, s, p));
        ASSERT_EQ(is_feasible(report, 12), report.fitness <= 12.0);
      }
    }
  }
}

TEST(Properties, LoadConservation) {
  Rng rng(12);
  int checked = 0;
  while (checked < 1000) {
    auto [t, s, p] = random_case(rng, kSplit);
    bool all_served = true;
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (s[b]) continue;
      bool served = false;
      for (auto nb : t.neighbors(b)) served = served || s[nb];
      all_served = all_served && served;
    }
    if (!all_served) continue;
    const auto loads = effective_loads(t, s, p);
    ASSERT_NEAR(std::accumulate(loads.begin(), loads.end(), 0.0), t.size() * p.rho_s, 1e-12);
    ++checked;
  }
}

TEST(Properties, FeasibleSolutionsRespectLowerBound) {
  Rng rng(13);
  int checked = 0;
  while (checked < 1000) {
    auto [t, s, p] = random_case(rng, kSplit);
    if (!is_feasible(penalty(t, s, p), t.size())) continue;
    ASSERT_GE(count_active(s), active_lower_bound(t.size(), p));
    ++checked;
  }
}

TEST(Properties, ActivatingAStationNeverRaisesOtherLoads) {
  Rng rng(14);
  for (int c = 0; c < 1000; ++c) {
    auto [t, s, p] = random_case(rng, c % 2 ? kSplit : kLiteral);
    std::vector<StationId> off;
    for (StationId b = 0; b < t.size(); ++b)
      if (!s[b]) off.push_back(b);
    if (off.empty()) continue;
    const StationId flip = off[rng.next_u64() % off.size()];
    const auto before = effective_loads(t, s, p);
    s[flip] = 1;
    const auto after = effective_loads(t, s, p);
    for (StationId b = 0; b < t.size(); ++b) {
      if (b == flip || !s[b]) continue;
      ASSERT_LE(after[b], before[b] + 1e-15);
    }
  }
}

TEST(Properties, AllOnIsTheOnlyFeasibleVectorAtHighLoad) {
  Rng rng(15);
  for (int c = 0; c < 40; ++c) {
    const auto t = testing::random_topology(rng, 3, 10);
    ASSERT_LE(t.max_degree(), 10u);
    const LoadParams p{0.55, 0.6, kSplit};
    const std::uint64_t all = (1u << t.size()) - 1;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
      ASSERT_EQ(is_feasible(penalty(t, testing::from_mask(mask, t.size()), p), t.size()), mask == all);
    }
  }
}

TEST(LoadParams, Validation) {
  EXPECT_NO_THROW((LoadParams{0.3, 0.6, kSplit}.validate()));
  EXPECT_THROW((LoadParams{-0.1, 0.6, kSplit}.validate()), ParameterError);
  EXPECT_THROW((LoadParams{1.0, 0.6, kSplit}.validate()), ParameterError);
  EXPECT_THROW((LoadParams{0.3, 0.0, kSplit}.validate()), ParameterError);
  EXPECT_THROW((LoadParams{0.3, 1.5, kSplit}.validate()), ParameterError);
  EXPECT_EQ(parse_transfer_mode("literal"), kLiteral);
  EXPECT_THROW(parse_transfer_mode("split"), ParameterError);
}

}  // namespace
}  // namespace bsswitch
