#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bssp.hpp"
#include "error.hpp"
#include "topology.hpp"

namespace bsswitch {

inline constexpr std::size_t kBruteForceMaxStations = 24;

struct OracleResult {
  std::optional<std::size_t> optimal_active_count;  // nullopt: no feasible vector
  Solution solution;                                // empty when infeasible
  std::uint64_t feasible_count = 0;
};

/// Exhaustive search over all 2^|B| on/off vectors. Vectors are enumerated
/// by integer counting with station 0 as the least significant bit; among
/// minimum-active feasible vectors the lexicographically smallest
/// (compared from station 0 upward) is returned.
inline OracleResult brute_force(const Topology& topology, const LoadParams& params) {
  const std::size_t n = topology.size();
  if (n > kBruteForceMaxStations) {
    throw BudgetError("brute_force: " + std::to_string(n) + " stations exceeds the budget of " +
                      std::to_string(kBruteForceMaxStations));
  }
  OracleResult result;
  Solution candidate(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t b = 0; b < n; ++b) candidate[b] = static_cast<std::uint8_t>((mask >> b) & 1U);
    const auto report = penalty(topology, candidate, params);
    if (!is_feasible(report, n)) continue;
    ++result.feasible_count;
    const std::size_t active = report.active_count;
    const bool better = !result.optimal_active_count || active < *result.optimal_active_count ||
                        (active == *result.optimal_active_count && candidate < result.solution);
    if (better) {
      result.optimal_active_count = active;
      result.solution = candidate;
    }
  }
  return result;
}

struct GreedyResult {
  Solution solution;
  bool feasible = false;
};

/// SWES-like greedy baseline. Starts with every station on and repeatedly
/// switches off the least-loaded station whose removal keeps the solution
/// feasible (ties to the lower index), until no such station remains.
inline GreedyResult greedy_switch_off(const Topology& topology, const LoadParams& params) {
  const std::size_t n = topology.size();
  GreedyResult result{Solution(n, 1), false};
  auto report = penalty(topology, result.solution, params);
  if (!is_feasible(report, n)) return result;
  result.feasible = true;

  for (;;) {
    std::optional<StationId> pick;
    for (StationId b = 0; b < n; ++b) {
      if (!result.solution[b]) continue;
      if (pick && report.effective_load[b] >= report.effective_load[*pick]) continue;
      result.solution[b] = 0;
      const bool keeps_feasible = is_feasible(penalty(topology, result.solution, params), n);
      result.solution[b] = 1;
      if (keeps_feasible) pick = b;
    }
    if (!pick) break;
    result.solution[*pick] = 0;
    report = penalty(topology, result.solution, params);
  }
  return result;
}

}  // namespace bsswitch
