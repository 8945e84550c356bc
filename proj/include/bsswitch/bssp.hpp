#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "topology.hpp"

namespace bsswitch {

/// Binary on/off vector; 1 = active.
using BitVector = std::vector<std::uint8_t>;
using Solution = BitVector;

enum class TransferMode {
  ConservingSplit,  // off-loaded traffic divided equally among active neighbors
  PaperLiteral,     // each active neighbor receives rho / |B|
};

inline std::string_view to_string(TransferMode mode) {
  return mode == TransferMode::ConservingSplit ? "conserving" : "literal";
}

inline TransferMode parse_transfer_mode(std::string_view text) {
  if (text == "conserving") return TransferMode::ConservingSplit;
  if (text == "literal") return TransferMode::PaperLiteral;
  throw ParameterError("unknown transfer mode \"" + std::string(text) + "\" (expected conserving|literal)");
}

struct LoadParams {
  double rho_s = 0.0;    // uniform per-station system load
  double rho_max = 0.6;  // per-station load cap
  TransferMode transfer_mode = TransferMode::ConservingSplit;

  void validate() const {
    if (!(rho_s >= 0.0 && rho_s < 1.0)) throw ParameterError("rho_s must lie in [0, 1)");
    if (!(rho_max > 0.0 && rho_max <= 1.0)) throw ParameterError("rho_max must lie in (0, 1]");
  }
};

/// Load one off station hands to each of its active neighbors.
inline double transfer_share(double rho_b, std::size_t active_neighbor_count, std::size_t station_count,
                             TransferMode mode) {
  if (active_neighbor_count == 0) {
    throw ContractViolation("transfer_share: a station without active neighbors transfers nothing");
  }
  if (mode == TransferMode::PaperLiteral) return rho_b / static_cast<double>(station_count);
  return rho_b / static_cast<double>(active_neighbor_count);
}

namespace detail {

inline void check_length(const Topology& topology, std::span<const std::uint8_t> solution) {
  if (solution.size() != topology.size()) {
    throw ContractViolation("solution length " + std::to_string(solution.size()) +
                            " does not match station count " + std::to_string(topology.size()));
  }
}

inline std::size_t active_neighbors(const Topology& topology, std::span<const std::uint8_t> solution,
                                    StationId b) {
  std::size_t count = 0;
  for (StationId s : topology.neighbors(b)) count += solution[s] ? 1 : 0;
  return count;
}

}  // namespace detail

/// Post-transfer load of every station; off stations read 0. Each off
/// station with at least one active neighbor spreads its load one hop over
/// those neighbors. Stations with no active neighbor transfer nothing.
inline std::vector<double> effective_loads(const Topology& topology, std::span<const std::uint8_t> solution,
                                           const LoadParams& params) {
  detail::check_length(topology, solution);
  const std::size_t n = topology.size();
  std::vector<double> load(n, 0.0);
  for (StationId b = 0; b < n; ++b) {
    if (solution[b]) load[b] += params.rho_s;
  }
  for (StationId s = 0; s < n; ++s) {
    if (solution[s]) continue;
    const std::size_t receivers = detail::active_neighbors(topology, solution, s);
    if (receivers == 0) continue;
    const double share = transfer_share(params.rho_s, receivers, n, params.transfer_mode);
    for (StationId b : topology.neighbors(s)) {
      if (solution[b]) load[b] += share;
    }
  }
  return load;
}

struct PenaltyReport {
  std::vector<double> per_station_penalty;
  std::vector<double> effective_load;
  double fitness = 0.0;
  std::size_t active_count = 0;
};

/// Per-station penalties and the penalty-augmented fitness
/// sum_b (a_b + |B| * P_b).
///
///   off, no active neighbor:   P_b = 1 + rho_s
///   off, some active neighbor: P_b = 0
///   active, load > rho_max:    P_b = 1 + load - rho_max
///   active, load <= rho_max:   P_b = 0
inline PenaltyReport penalty(const Topology& topology, std::span<const std::uint8_t> solution,
                             const LoadParams& params) {
  PenaltyReport report;
  report.effective_load = effective_loads(topology, solution, params);
  const std::size_t n = topology.size();
  report.per_station_penalty.assign(n, 0.0);
  double penalty_sum = 0.0;
  for (StationId b = 0; b < n; ++b) {
    double p = 0.0;
    if (solution[b]) {
      ++report.active_count;
      const double load = report.effective_load[b];
      if (load > params.rho_max) p = 1.0 + load - params.rho_max;
    } else if (detail::active_neighbors(topology, solution, b) == 0) {
      p = 1.0 + params.rho_s;
    }
    report.per_station_penalty[b] = p;
    penalty_sum += p;
  }
  report.fitness = static_cast<double>(report.active_count) + static_cast<double>(n) * penalty_sum;
  return report;
}

inline double fitness(const Topology& topology, std::span<const std::uint8_t> solution,
                      const LoadParams& params) {
  return penalty(topology, solution, params).fitness;
}

/// True iff no station is penalized. For |B| >= 2 this coincides with
/// fitness <= |B|; a single station switched off at zero load is the only
/// case where a penalized fitness can equal |B|.
inline bool is_feasible(const PenaltyReport& report, std::size_t station_count) {
  bool clean = true;
  for (double p : report.per_station_penalty) clean = clean && p == 0.0;
  [[maybe_unused]] const bool under_threshold = report.fitness <= static_cast<double>(station_count);
  assert(clean == under_threshold || station_count == 1);
  return clean;
}

inline std::size_t count_active(std::span<const std::uint8_t> solution) {
  std::size_t count = 0;
  for (auto bit : solution) count += bit ? 1 : 0;
  return count;
}

/// Smallest active count any feasible solution can have under
/// ConservingSplit: ceil(|B| * rho_s / rho_max).
inline std::size_t active_lower_bound(std::size_t station_count, const LoadParams& params) {
  const double bound = static_cast<double>(station_count) * params.rho_s / params.rho_max;
  // Guard the ceil against representation noise such as 20 * 0.3 / 0.6 = 10.000000000000002.
  return static_cast<std::size_t>(std::ceil(bound - 1e-9));
}

}  // namespace bsswitch
