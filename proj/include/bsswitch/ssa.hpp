#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bssp.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace bsswitch::ssa {

/// Intensity of a vibration emitted at a solution with the given fitness
/// (minimization): 1 / (f - c_min).
inline double source_intensity(double fitness_value, double c_min) {
  if (!(fitness_value > c_min)) {
    throw ParameterError("c_min (" + std::to_string(c_min) + ") must lie strictly below every fitness value (got " +
                         std::to_string(fitness_value) + ")");
  }
  return 1.0 / (fitness_value - c_min);
}

/// One iteration of decay.
inline double attenuate_over_time(double intensity, double r_a) { return intensity * r_a; }

/// Intensity sensed at Hamming distance `distance` from the source.
inline double attenuate_over_distance(double source_intensity, double distance, double d_max, double r_a) {
  if (!(distance >= 0.0) || distance > d_max) {
    throw ContractViolation("attenuate_over_distance: distance must lie in [0, d_max]");
  }
  return source_intensity * std::exp(-distance / (d_max * r_a));
}

/// Manhattan distance between binary positions (= Hamming distance).
inline std::size_t hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

/// Binary following move: every dimension where `position` and `target`
/// differ moves to `target` iff round(R) with R ~ U[0,1) rounds away from
/// zero, i.e. with probability 1/2. Draws are consumed only for differing
/// dimensions, in ascending order.
template <UniformSource G>
BitVector follow_move(std::span<const std::uint8_t> position, std::span<const std::uint8_t> target, G& rng) {
  if (position.size() != target.size()) throw ContractViolation("follow_move: length mismatch");
  BitVector out(position.begin(), position.end());
  for (std::size_t d = 0; d < out.size(); ++d) {
    if (position[d] == target[d]) continue;
    const double diff = static_cast<double>(target[d]) - static_cast<double>(position[d]);
    const double step = std::round(diff * rng.uniform());
    out[d] = static_cast<std::uint8_t>(static_cast<double>(position[d]) + step);
  }
  return out;
}

/// Per-dimension bit flip with probability 1/dimension_count. One draw per
/// dimension, ascending.
template <UniformSource G>
BitVector jump_away(std::span<const std::uint8_t> position, G& rng, std::size_t dimension_count) {
  if (dimension_count != position.size()) throw ContractViolation("jump_away: dimension_count mismatch");
  const double rate = 1.0 / static_cast<double>(dimension_count);
  BitVector out(position.size());
  for (std::size_t d = 0; d < position.size(); ++d) {
    const int step = rng.uniform() < rate ? 1 : 0;
    out[d] = static_cast<std::uint8_t>(std::abs(step - static_cast<int>(position[d])));
  }
  return out;
}

/// Index of the strongest sensed vibration, skipping the receiver's own.
/// Ties go to the lowest index; returns sensed.size() when nothing else
/// is on the web.
inline std::size_t strongest_other(std::span<const double> sensed, std::size_t self) {
  std::size_t best = sensed.size();
  for (std::size_t j = 0; j < sensed.size(); ++j) {
    if (j == self) continue;
    if (best == sensed.size() || sensed[j] > sensed[best]) best = j;
  }
  return best;
}

/// A received vibration displaces the stored one only when strictly
/// stronger.
inline bool replaces_stored(double received, double stored) { return received > stored; }

struct Vibration {
  BitVector source_position;
  double intensity = 0.0;
};

struct Spider {
  BitVector position;
  double fitness = std::numeric_limits<double>::infinity();
  Vibration followed;  // v_prev
};

struct SsaParams {
  std::size_t population = 1;
  double r_a = 0.9;
  std::size_t max_iterations = 500;
  double c_min = -1.0;
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (population < 1) throw ParameterError("population must be >= 1");
    if (!(r_a > 0.0 && r_a < 1.0)) throw ParameterError("r_a must lie in (0, 1)");
    if (!std::isfinite(c_min)) throw ParameterError("c_min must be finite");
  }
};

struct RunResult {
  BitVector best_position;
  double best_fitness = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  std::vector<double> history;  // best fitness after each iteration

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Observer hook called once per iteration after movement; used by tests to
/// inspect swarm state. Default does nothing.
struct NoObserver {
  void operator()(std::size_t /*iteration*/, std::span<const Spider> /*swarm*/) const {}
};

/// Binary social spider search minimizing `fitness` over {0,1}^dimension.
///
/// Each iteration:
///   1. evaluate every spider, decay every stored vibration by r_a, and emit
///      a fresh vibration at each spider's position;
///   2. for each spider, take the strongest vibration emitted by the other
///      spiders (distance-attenuated, ties to the lower spider index), keep
///      the stored one instead if it is strictly stronger, follow toward the
///      winner's source, jump away, and store the winner.
///
/// Spider i draws only from stream i of `rng_seed`, so results do not
/// depend on evaluation order.
template <typename Fitness, typename Observer = NoObserver>
  requires std::invocable<Fitness&, const BitVector&>
RunResult run(const SsaParams& params, std::size_t dimension, Fitness&& fitness, Observer&& observer = {}) {
  params.validate();
  if (dimension < 1) throw ParameterError("dimension must be >= 1");

  const std::size_t pop = params.population;
  const double d_max = static_cast<double>(dimension);

  std::vector<Rng> streams;
  streams.reserve(pop);
  for (std::size_t i = 0; i < pop; ++i) streams.push_back(Rng::stream(params.rng_seed, i));

  std::vector<Spider> swarm(pop);
  for (std::size_t i = 0; i < pop; ++i) {
    auto& spider = swarm[i];
    spider.position.resize(dimension);
    for (auto& bit : spider.position) bit = streams[i].uniform() < 0.5 ? 1 : 0;
    spider.followed = {spider.position, 0.0};
  }

  RunResult result;
  result.history.reserve(params.max_iterations);
  std::vector<double> emitted(pop);
  std::vector<BitVector> sources(pop);
  std::vector<double> distance(pop * pop);
  std::vector<double> sensed(pop);

  for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
    for (std::size_t i = 0; i < pop; ++i) {
      auto& spider = swarm[i];
      spider.fitness = static_cast<double>(fitness(std::as_const(spider.position)));
      ++result.evaluations;
      if (spider.fitness < result.best_fitness) {
        result.best_fitness = spider.fitness;
        result.best_position = spider.position;
      }
      spider.followed.intensity = attenuate_over_time(spider.followed.intensity, params.r_a);
      emitted[i] = source_intensity(spider.fitness, params.c_min);
      sources[i] = spider.position;
    }

    for (std::size_t i = 0; i < pop; ++i) {
      distance[i * pop + i] = 0.0;
      for (std::size_t j = i + 1; j < pop; ++j) {
        const auto d = static_cast<double>(hamming(sources[i], sources[j]));
        distance[i * pop + j] = distance[j * pop + i] = d;
      }
    }

    for (std::size_t i = 0; i < pop; ++i) {
      auto& spider = swarm[i];
      for (std::size_t j = 0; j < pop; ++j) {
        sensed[j] = attenuate_over_distance(emitted[j], distance[i * pop + j], d_max, params.r_a);
      }
      const std::size_t strongest = strongest_other(sensed, i);
      Vibration best = spider.followed;
      if (strongest != pop && replaces_stored(sensed[strongest], spider.followed.intensity)) {
        best = {sources[strongest], sensed[strongest]};
      }

      auto moved = follow_move(spider.position, best.source_position, streams[i]);
      spider.position = jump_away(moved, streams[i], dimension);
      spider.followed = std::move(best);
    }

    result.history.push_back(result.best_fitness);
    observer(iter, std::span<const Spider>(swarm));
  }
  return result;
}

/// Population size, iteration budget and attenuation used for the BSSP
/// experiments: population = |B|, r_a = 0.9, 500 iterations, c_min = -1.
inline SsaParams default_params(std::size_t station_count, std::uint64_t seed) {
  SsaParams p;
  p.population = station_count;
  p.r_a = 0.9;
  p.max_iterations = 500;
  p.c_min = -1.0;
  p.rng_seed = seed;
  return p;
}

}  // namespace bsswitch::ssa
