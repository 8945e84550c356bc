#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "rng.hpp"

namespace bsswitch {

using StationId = std::size_t;

struct Point {
  double x = 0.0;  // km
  double y = 0.0;  // km

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

using Link = std::pair<StationId, StationId>;

/// Station positions on a square area plus the symmetric neighbor graph.
///
/// Immutable once built. The constructor enforces: coordinates inside
/// [0, area_side]^2, link endpoints in range, no self-loops and no duplicate
/// links. Links are stored canonically (i < j, sorted).
class Topology {
 public:
  Topology() = default;

  Topology(double area_side, std::vector<Point> stations, std::vector<Link> links)
      : area_side_(area_side), stations_(std::move(stations)) {
    if (!(area_side_ > 0.0) || !std::isfinite(area_side_)) {
      throw ValidationError("area_side must be a positive finite number");
    }
    for (std::size_t i = 0; i < stations_.size(); ++i) {
      const auto& p = stations_[i];
      const bool inside = std::isfinite(p.x) && std::isfinite(p.y) && p.x >= 0.0 && p.y >= 0.0 &&
                          p.x <= area_side_ && p.y <= area_side_;
      if (!inside) {
        std::ostringstream msg;
        msg << "station " << i << " at (" << p.x << ", " << p.y << ") lies outside [0, " << area_side_
            << "]^2";
        throw ValidationError(msg.str());
      }
    }
    for (auto& [i, j] : links) {
      if (i >= stations_.size() || j >= stations_.size()) {
        throw ValidationError("link (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") references a station that does not exist");
      }
      if (i == j) throw ValidationError("self-loop on station " + std::to_string(i));
      if (i > j) std::swap(i, j);
    }
    std::sort(links.begin(), links.end());
    if (auto dup = std::adjacent_find(links.begin(), links.end()); dup != links.end()) {
      throw ValidationError("duplicate link (" + std::to_string(dup->first) + ", " +
                            std::to_string(dup->second) + ")");
    }
    neighbors_.assign(stations_.size(), {});
    for (const auto& [i, j] : links) {
      neighbors_[i].push_back(j);
      neighbors_[j].push_back(i);
    }
    for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
    links_ = std::move(links);
  }

  std::size_t size() const noexcept { return stations_.size(); }
  double area_side() const noexcept { return area_side_; }
  std::span<const Point> stations() const noexcept { return stations_; }
  const Point& station(StationId id) const { return stations_.at(id); }

  /// Sorted ascending.
  std::span<const StationId> neighbors(StationId id) const { return neighbors_.at(id); }
  std::size_t degree(StationId id) const { return neighbors_.at(id).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& adj : neighbors_) best = std::max(best, adj.size());
    return best;
  }

  std::size_t min_degree() const noexcept {
    if (neighbors_.empty()) return 0;
    std::size_t best = neighbors_.front().size();
    for (const auto& adj : neighbors_) best = std::min(best, adj.size());
    return best;
  }

  /// Canonical link list: i < j, lexicographically sorted.
  std::span<const Link> links() const noexcept { return links_; }

  bool linked(StationId a, StationId b) const {
    const auto& adj = neighbors_.at(a);
    return std::binary_search(adj.begin(), adj.end(), b);
  }

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.area_side_ == b.area_side_ && a.stations_ == b.stations_ && a.links_ == b.links_;
  }

 private:
  double area_side_ = 0.0;
  std::vector<Point> stations_;
  std::vector<Link> links_;
  std::vector<std::vector<StationId>> neighbors_;
};

struct GenParams {
  std::size_t n_stations = 0;
  double lambda = 2.0;  // expected neighbor count
  double area_side = 10.0;
  std::uint64_t rng_seed = 0;
};

/// Poisson(lambda - 2) + 2, sampled by sequential search on the CDF with a
/// single uniform draw.
template <UniformSource G>
std::size_t sample_neighbor_count(double lambda, G& rng) {
  if (!(lambda >= 2.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be >= 2 (got " + std::to_string(lambda) + ")");
  }
  const double mean = lambda - 2.0;
  const double u = rng.uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::size_t k = 0;
  // The cdf can stall just below 1 in floating point; stop once mass is exhausted.
  while (u >= cdf && p > 0.0) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k + 2;
}

/// Random instance generator.
///
/// Draw order is fixed: x then y for every station in index order, then one
/// neighbor count per station in index order. Linking visits stations in
/// index order and connects each under-linked station to its nearest
/// not-yet-linked stations (Euclidean distance, ties to the lower index).
inline Topology generate(const GenParams& params) {
  if (params.n_stations < 1) throw ParameterError("n_stations must be >= 1");
  if (!(params.lambda >= 2.0) || !std::isfinite(params.lambda)) {
    throw ParameterError("lambda must be >= 2");
  }
  if (!(params.area_side > 0.0) || !std::isfinite(params.area_side)) {
    throw ParameterError("area_side must be positive");
  }

  const std::size_t n = params.n_stations;
  Rng rng(params.rng_seed);

  std::vector<Point> stations(n);
  for (auto& p : stations) {
    p.x = rng.uniform() * params.area_side;
    p.y = rng.uniform() * params.area_side;
  }
  std::vector<std::size_t> wanted(n);
  for (auto& w : wanted) w = sample_neighbor_count(params.lambda, rng);

  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  std::vector<std::size_t> degree(n, 0);
  std::vector<Link> links;

  std::vector<std::pair<double, StationId>> candidates;
  for (StationId b = 0; b < n; ++b) {
    if (degree[b] >= wanted[b]) continue;
    const std::size_t missing = wanted[b] - degree[b];

    candidates.clear();
    for (StationId other = 0; other < n; ++other) {
      if (other == b || adjacent[b][other]) continue;
      candidates.emplace_back(distance(stations[b], stations[other]), other);
    }
    if (candidates.size() < missing) {
      std::ostringstream msg;
      msg << "station " << b << " needs " << wanted[b] << " neighbors but only " << (n - 1)
          << " other stations exist";
      throw GenerationError(msg.str());
    }
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(missing),
                      candidates.end());
    for (std::size_t k = 0; k < missing; ++k) {
      const StationId other = candidates[k].second;
      adjacent[b][other] = adjacent[other][b] = true;
      ++degree[b];
      ++degree[other];
      links.emplace_back(b, other);
    }
  }
  return Topology(params.area_side, std::move(stations), std::move(links));
}

namespace detail {

inline std::string format_number(double v) { return nlohmann::json(v).dump(); }

}  // namespace detail

/// Canonical JSON text. Identical topologies give identical bytes.
inline std::string to_json(const Topology& topology) {
  std::ostringstream out;
  out << "{\n  \"area_side\": " << detail::format_number(topology.area_side()) << ",\n  \"stations\": [";
  const auto stations = topology.stations();
  for (std::size_t i = 0; i < stations.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [") << detail::format_number(stations[i].x) << ", "
        << detail::format_number(stations[i].y) << "]";
  }
  out << (stations.empty() ? "],\n" : "\n  ],\n") << "  \"links\": [";
  const auto links = topology.links();
  for (std::size_t i = 0; i < links.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [") << links[i].first << ", " << links[i].second << "]";
  }
  out << (links.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

inline Topology from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("topology: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("topology: top-level value must be an object");

  auto require = [&](const char* key) -> const nlohmann::json& {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("topology: missing field \"") + key + "\"");
    return *it;
  };

  const auto& area = require("area_side");
  if (!area.is_number()) throw ParseError("topology: field \"area_side\" must be a number");

  const auto& stations_json = require("stations");
  if (!stations_json.is_array()) throw ParseError("topology: field \"stations\" must be an array");
  std::vector<Point> stations;
  stations.reserve(stations_json.size());
  for (std::size_t i = 0; i < stations_json.size(); ++i) {
    const auto& s = stations_json[i];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
      throw ParseError("topology: stations[" + std::to_string(i) + "] must be an [x, y] number pair");
    }
    stations.push_back({s[0].get<double>(), s[1].get<double>()});
  }

  const auto& links_json = require("links");
  if (!links_json.is_array()) throw ParseError("topology: field \"links\" must be an array");
  std::vector<Link> links;
  links.reserve(links_json.size());
  for (std::size_t k = 0; k < links_json.size(); ++k) {
    const auto& l = links_json[k];
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_unsigned() || !l[1].is_number_unsigned()) {
      throw ParseError("topology: links[" + std::to_string(k) + "] must be a pair of station indices");
    }
    links.emplace_back(l[0].get<StationId>(), l[1].get<StationId>());
  }
  return Topology(area.get<double>(), std::move(stations), std::move(links));
}

inline void save(const Topology& topology, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << to_json(topology);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

inline Topology load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

}  // namespace bsswitch
