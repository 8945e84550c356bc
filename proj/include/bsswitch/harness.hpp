#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "baselines.hpp"
#include "bssp.hpp"
#include "error.hpp"
#include "rng.hpp"
#include "ssa.hpp"
#include "topology.hpp"

namespace bsswitch::harness {

enum class Algorithm { Ssa, Greedy, Oracle };

// "greedy" is a SWES-like stand-in, not SWES itself.
inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Ssa: return "ssa";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Oracle: return "oracle";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view text) {
  if (text == "ssa") return Algorithm::Ssa;
  if (text == "greedy") return Algorithm::Greedy;
  if (text == "oracle") return Algorithm::Oracle;
  throw ParameterError("unknown algorithm \"" + std::string(text) + "\" (expected ssa|greedy|oracle)");
}

// ---------------------------------------------------------------------------
// Number formatting. Shortest round-trip representation, so CSV bytes are a
// pure function of the values.

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

inline double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": \"" + std::string(text) + "\" is not a number");
  }
  return v;
}

inline std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": \"" + std::string(text) + "\" is not an unsigned integer");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Instances

/// Instance names follow "<|B|>.<lambda>.<tag>" (e.g. "20.3.A"). The part
/// before the last '.' is the family; the leading integer is |B|.
struct InstanceSource {
  std::string name;  // empty: derived
  std::variant<std::filesystem::path, GenParams> origin;
};

struct NamedTopology {
  std::string name;
  Topology topology;
};

inline std::string lambda_label(double lambda) {
  return format_double(lambda);
}

/// Names generated instances of one family "N.L.A", "N.L.B", ...
inline std::vector<InstanceSource> family(std::size_t stations, double lambda, const std::vector<std::uint64_t>& seeds,
                                          double area_side = 10.0) {
  std::vector<InstanceSource> out;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    std::string tag = k < 26 ? std::string(1, static_cast<char>('A' + k)) : "s" + std::to_string(seeds[k]);
    out.push_back({std::to_string(stations) + "." + lambda_label(lambda) + "." + tag,
                   GenParams{stations, lambda, area_side, seeds[k]}});
  }
  return out;
}

inline NamedTopology materialize(const InstanceSource& source) {
  if (const auto* gen = std::get_if<GenParams>(&source.origin)) {
    auto topology = generate(*gen);
    std::string name = source.name.empty() ? std::to_string(gen->n_stations) + "." + lambda_label(gen->lambda) +
                                                 ".s" + std::to_string(gen->rng_seed)
                                           : source.name;
    return {std::move(name), std::move(topology)};
  }
  const auto& path = std::get<std::filesystem::path>(source.origin);
  auto topology = load(path);
  std::string name = source.name.empty() ? std::to_string(topology.size()) + "." + path.stem().string() : source.name;
  return {std::move(name), std::move(topology)};
}

inline std::string fallback_name(const InstanceSource& source) {
  if (!source.name.empty()) return source.name;
  if (const auto* path = std::get_if<std::filesystem::path>(&source.origin)) return path->stem().string();
  const auto& gen = std::get<GenParams>(source.origin);
  return std::to_string(gen.n_stations) + "." + lambda_label(gen.lambda) + ".s" + std::to_string(gen.rng_seed);
}

// ---------------------------------------------------------------------------
// Sweep

struct SsaConfig {
  std::size_t population = 0;  // 0: use |B|
  double r_a = 0.9;
  std::size_t iterations = 500;
  double c_min = -1.0;
};

struct SweepSpec {
  std::vector<InstanceSource> instances;
  std::vector<double> rho_s;
  double rho_max = 0.6;
  TransferMode transfer_mode = TransferMode::ConservingSplit;
  std::vector<Algorithm> algorithms{Algorithm::Ssa, Algorithm::Greedy};
  std::size_t runs_per_point = 1;
  std::uint64_t master_seed = 1;
  SsaConfig ssa;
  bool allow_overload = false;     // permit rho_s >= rho_max
  bool record_wall_time = false;   // off keeps CSV output byte-reproducible
  std::size_t threads = 1;

  void validate() const {
    if (runs_per_point < 1) throw ParameterError("runs_per_point must be >= 1");
    if (rho_s.empty()) throw ParameterError("rho_s list is empty");
    if (algorithms.empty()) throw ParameterError("algorithm list is empty");
    for (double r : rho_s) {
      LoadParams{r, rho_max, transfer_mode}.validate();
      if (r >= rho_max && !allow_overload) {
        throw ParameterError("rho_s " + format_double(r) + " is not below rho_max " + format_double(rho_max) +
                             " (set allow_overload to sweep it anyway)");
      }
    }
    if (!(ssa.r_a > 0.0 && ssa.r_a < 1.0)) throw ParameterError("ssa.r_a must lie in (0, 1)");
  }
};

struct SweepRow {
  std::string instance;
  double rho_s = 0.0;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t active_count = 0;
  double fitness = 0.0;
  bool feasible = false;
  std::size_t evaluations = 0;
  double wall_time_s = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepError {
  std::string instance;
  std::string message;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  std::vector<SweepError> errors;
};

inline std::uint64_t point_seed(std::uint64_t master, std::size_t instance, std::size_t rho, std::size_t run) {
  return derive_seed(master, instance, rho, run);
}

struct Solved {
  SweepRow row;
  Solution solution;
};

/// Solves one instance at one load with one algorithm. Shared by `run` and
/// `sweep`.
inline Solved solve(const NamedTopology& instance, const LoadParams& load, Algorithm algorithm,
                      const SsaConfig& config, std::uint64_t seed, bool record_wall_time) {
  load.validate();
  const auto& topology = instance.topology;
  const std::size_t n = topology.size();
  const auto started = std::chrono::steady_clock::now();

  Solution solution;
  std::size_t evaluations = 0;
  switch (algorithm) {
    case Algorithm::Ssa: {
      ssa::SsaParams params;
      params.population = config.population == 0 ? n : config.population;
      params.r_a = config.r_a;
      params.max_iterations = config.iterations;
      params.c_min = config.c_min;
      params.rng_seed = seed;
      auto result = ssa::run(params, n, [&](const BitVector& x) { return fitness(topology, x, load); });
      solution = std::move(result.best_position);
      evaluations = result.evaluations;
      break;
    }
    case Algorithm::Greedy:
      solution = greedy_switch_off(topology, load).solution;
      break;
    case Algorithm::Oracle: {
      auto result = brute_force(topology, load);
      evaluations = std::size_t{1} << n;
      // No feasible vector: report all-on, which the penalty marks infeasible.
      solution = result.optimal_active_count ? result.solution : Solution(n, 1);
      break;
    }
  }
  const auto report = penalty(topology, solution, load);

  SweepRow row;
  row.instance = instance.name;
  row.rho_s = load.rho_s;
  row.algorithm = std::string(to_string(algorithm));
  row.seed = seed;
  row.active_count = report.active_count;
  row.fitness = report.fitness;
  row.feasible = is_feasible(report, n);
  row.evaluations = evaluations;
  if (record_wall_time) {
    row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  return {std::move(row), std::move(solution)};
}

/// Runs every (instance, rho_s, algorithm, run) combination. Rows come back
/// in that nesting order regardless of how many worker threads ran them.
/// Instances that cannot be loaded or solved produce error records; the
/// rest of the sweep continues.
inline SweepOutcome run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepOutcome outcome;

  std::vector<std::optional<NamedTopology>> instances(spec.instances.size());
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    try {
      instances[i] = materialize(spec.instances[i]);
    } catch (const std::exception& e) {
      outcome.errors.push_back({fallback_name(spec.instances[i]), e.what()});
    }
  }

  struct Job {
    std::size_t instance, rho, algorithm, run;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (!instances[i]) continue;
    for (std::size_t r = 0; r < spec.rho_s.size(); ++r)
      for (std::size_t a = 0; a < spec.algorithms.size(); ++a)
        for (std::size_t k = 0; k < spec.runs_per_point; ++k) jobs.push_back({i, r, a, k});
  }

  std::vector<std::optional<SweepRow>> rows(jobs.size());
  std::vector<std::string> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const auto& job = jobs[j];
      const LoadParams load{spec.rho_s[job.rho], spec.rho_max, spec.transfer_mode};
      try {
        rows[j] = solve(*instances[job.instance], load, spec.algorithms[job.algorithm], spec.ssa,
                        point_seed(spec.master_seed, job.instance, job.rho, job.run), spec.record_wall_time)
                      .row;
      } catch (const std::exception& e) {
        failures[j] = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.threads, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (rows[j]) {
      outcome.rows.push_back(std::move(*rows[j]));
    } else {
      const auto& job = jobs[j];
      outcome.errors.push_back({instances[job.instance]->name, std::string(to_string(spec.algorithms[job.algorithm])) +
                                                                   " at rho_s=" + format_double(spec.rho_s[job.rho]) +
                                                                   ": " + failures[j]});
    }
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// Sweep spec JSON

inline SweepSpec parse_sweep_spec(const std::string& text, const std::filesystem::path& base_dir = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("sweep spec: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("sweep spec: top-level value must be an object");

  SweepSpec spec;
  auto field = [&](const nlohmann::json& obj, const char* key, auto fallback, const std::string& where) {
    using T = decltype(fallback);
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    try {
      return it->template get<T>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("sweep spec: field \"" + where + key + "\" has the wrong type");
    }
  };

  if (auto it = doc.find("instances"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("sweep spec: field \"instances\" must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto& entry = (*it)[k];
      const std::string where = "instances[" + std::to_string(k) + "].";
      if (!entry.is_object()) throw ParseError("sweep spec: " + where + " must be an object");
      InstanceSource source;
      source.name = field(entry, "name", std::string{}, where);
      if (entry.contains("file")) {
        std::filesystem::path path = field(entry, "file", std::string{}, where);
        source.origin = path.is_absolute() ? path : base_dir / path;
      } else {
        GenParams gen;
        gen.n_stations = field(entry, "stations", std::size_t{0}, where);
        gen.lambda = field(entry, "lambda", 2.0, where);
        gen.area_side = field(entry, "area", 10.0, where);
        gen.rng_seed = field(entry, "seed", std::uint64_t{0}, where);
        if (gen.n_stations == 0) throw ParseError("sweep spec: " + where + " needs \"file\" or \"stations\"");
        source.origin = gen;
      }
      spec.instances.push_back(std::move(source));
    }
  }
  if (auto it = doc.find("families"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("sweep spec: field \"families\" must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto& entry = (*it)[k];
      const std::string where = "families[" + std::to_string(k) + "].";
      auto members = family(field(entry, "stations", std::size_t{0}, where), field(entry, "lambda", 2.0, where),
                            field(entry, "seeds", std::vector<std::uint64_t>{}, where),
                            field(entry, "area", 10.0, where));
      spec.instances.insert(spec.instances.end(), members.begin(), members.end());
    }
  }
  if (spec.instances.empty()) throw ParseError("sweep spec: no instances or families given");

  spec.rho_s = field(doc, "rho_s", std::vector<double>{}, "");
  spec.rho_max = field(doc, "rho_max", spec.rho_max, "");
  try {
    spec.transfer_mode = parse_transfer_mode(field(doc, "transfer_mode", std::string("conserving"), ""));
    if (doc.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& name : field(doc, "algorithms", std::vector<std::string>{}, "")) {
        spec.algorithms.push_back(parse_algorithm(name));
      }
    }
  } catch (const ParameterError& e) {
    throw ParseError(std::string("sweep spec: ") + e.what());
  }
  spec.runs_per_point = field(doc, "runs_per_point", spec.runs_per_point, "");
  spec.master_seed = field(doc, "master_seed", spec.master_seed, "");
  spec.allow_overload = field(doc, "allow_overload", spec.allow_overload, "");
  spec.record_wall_time = field(doc, "record_wall_time", spec.record_wall_time, "");
  spec.threads = field(doc, "threads", spec.threads, "");
  if (auto it = doc.find("ssa"); it != doc.end()) {
    spec.ssa.population = field(*it, "population", spec.ssa.population, "ssa.");
    spec.ssa.r_a = field(*it, "r_a", spec.ssa.r_a, "ssa.");
    spec.ssa.iterations = field(*it, "iterations", spec.ssa.iterations, "ssa.");
    spec.ssa.c_min = field(*it, "c_min", spec.ssa.c_min, "ssa.");
  }
  return spec;
}

inline SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_spec(buffer.str(), path.parent_path());
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader =
    "instance,rho_s,algorithm,seed,active_count,fitness,feasible,evaluations,wall_time_s";

inline std::string to_csv_line(const SweepRow& row) {
  std::string line;
  line += row.instance;
  line += ',' + format_double(row.rho_s);
  line += ',' + row.algorithm;
  line += ',' + std::to_string(row.seed);
  line += ',' + std::to_string(row.active_count);
  line += ',' + format_double(row.fitness);
  line += row.feasible ? ",true" : ",false";
  line += ',' + std::to_string(row.evaluations);
  line += ',' + format_double(row.wall_time_s);
  return line;
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += to_csv_line(row);
    out += '\n';
  }
  return out;
}

inline std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw ParseError("csv line 1: unexpected header \"" + std::string(line) + "\"");
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> cells;
    for (std::size_t start = 0;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::string where = "csv line " + std::to_string(line_no);
    if (cells.size() != 9) {
      throw ParseError(where + ": expected 9 columns, found " + std::to_string(cells.size()));
    }
    SweepRow row;
    row.instance = std::string(cells[0]);
    row.rho_s = parse_double(cells[1], where + " rho_s");
    row.algorithm = std::string(cells[2]);
    row.seed = parse_u64(cells[3], where + " seed");
    row.active_count = parse_u64(cells[4], where + " active_count");
    row.fitness = parse_double(cells[5], where + " fitness");
    if (cells[6] == "true") {
      row.feasible = true;
    } else if (cells[6] == "false") {
      row.feasible = false;
    } else {
      throw ParseError(where + " feasible: expected true|false");
    }
    row.evaluations = parse_u64(cells[7], where + " evaluations");
    row.wall_time_s = parse_double(cells[8], where + " wall_time_s");
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw ParseError("csv: missing header");
  return rows;
}

// ---------------------------------------------------------------------------
// Summary

/// Family of an instance name: everything before the last '.'.
inline std::string family_of(std::string_view instance) {
  const auto dot = instance.rfind('.');
  return std::string(dot == std::string_view::npos ? instance : instance.substr(0, dot));
}

/// Station count encoded as the leading integer of an instance name.
inline std::optional<std::size_t> stations_of(std::string_view instance) {
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(instance.data(), instance.data() + instance.size(), n);
  if (ec != std::errc{} || n == 0 || (end != instance.data() + instance.size() && *end != '.')) return std::nullopt;
  return n;
}

struct SummaryPoint {
  std::string group;
  std::size_t stations = 0;
  double rho_s = 0.0;
  std::string algorithm;
  std::size_t samples = 0;
  std::size_t infeasible = 0;
  double mean_active = 0.0;    // infeasible rows count as |B|
  double active_fraction = 0.0;
  double ideal_fraction = 0.0;  // min(1, rho_s / rho_max)
};

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t points = 0;
  double energy_saving = 0.0;  // mean over points of 1 - active_fraction
  double ideal_gap = 0.0;      // mean over points of active_fraction - ideal_fraction
};

struct PairwiseTally {
  std::string algorithm;
  std::string versus;
  std::size_t wins = 0;  // fewer mean active stations
  std::size_t draws = 0;
  std::size_t losses = 0;
};

struct Summary {
  std::vector<SummaryPoint> points;
  std::vector<AlgorithmSummary> algorithms;
  std::vector<PairwiseTally> pairwise;
};

enum class Grouping {
  ByFamily,  // "20.3.A", "20.3.B" -> "20.3"
  None,      // all instances pooled; requires equal |B|
};

/// Per (group, rho_s, algorithm) means, overall energy saving, distance to
/// the rho_s / rho_max ideal and pairwise win/draw/loss counts.
inline Summary summarize(const std::vector<SweepRow>& rows, double rho_max, Grouping grouping = Grouping::ByFamily) {
  if (rows.empty()) throw ParameterError("summarize: no rows");
  if (!(rho_max > 0.0)) throw ParameterError("summarize: rho_max must be positive");

  struct Acc {
    std::size_t stations = 0;
    std::size_t samples = 0;
    std::size_t infeasible = 0;
    double active_sum = 0.0;
  };
  std::map<std::tuple<std::string, double, std::string>, Acc> acc;
  for (const auto& row : rows) {
    const auto n = stations_of(row.instance);
    if (!n) {
      throw GroupingError("instance \"" + row.instance + "\" does not start with its station count");
    }
    const std::string group = grouping == Grouping::ByFamily ? family_of(row.instance) : std::string("all");
    auto& a = acc[{group, row.rho_s, row.algorithm}];
    if (a.samples > 0 && a.stations != *n) {
      throw GroupingError("group \"" + group + "\" mixes station counts " + std::to_string(a.stations) + " and " +
                          std::to_string(*n));
    }
    a.stations = *n;
    ++a.samples;
    if (row.feasible) {
      a.active_sum += static_cast<double>(row.active_count);
    } else {
      ++a.infeasible;
      a.active_sum += static_cast<double>(*n);
    }
  }

  Summary summary;
  std::map<std::string, AlgorithmSummary> per_algorithm;
  std::map<std::pair<std::string, double>, std::map<std::string, double>> by_point;
  for (const auto& [key, a] : acc) {
    const auto& [group, rho, algorithm] = key;
    SummaryPoint p;
    p.group = group;
    p.stations = a.stations;
    p.rho_s = rho;
    p.algorithm = algorithm;
    p.samples = a.samples;
    p.infeasible = a.infeasible;
    p.mean_active = a.active_sum / static_cast<double>(a.samples);
    p.active_fraction = p.mean_active / static_cast<double>(a.stations);
    p.ideal_fraction = std::min(1.0, rho / rho_max);
    summary.points.push_back(p);

    auto& s = per_algorithm[algorithm];
    s.algorithm = algorithm;
    ++s.points;
    s.energy_saving += 1.0 - p.active_fraction;
    s.ideal_gap += p.active_fraction - p.ideal_fraction;
    by_point[{group, rho}][algorithm] = p.mean_active;
  }
  for (auto& [name, s] : per_algorithm) {
    s.energy_saving /= static_cast<double>(s.points);
    s.ideal_gap /= static_cast<double>(s.points);
    summary.algorithms.push_back(s);
  }
  for (std::size_t i = 0; i < summary.algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < summary.algorithms.size(); ++j) {
      PairwiseTally t{summary.algorithms[i].algorithm, summary.algorithms[j].algorithm};
      for (const auto& [point, means] : by_point) {
        auto a = means.find(t.algorithm);
        auto b = means.find(t.versus);
        if (a == means.end() || b == means.end()) continue;
        if (std::abs(a->second - b->second) <= 1e-9) {
          ++t.draws;
        } else if (a->second < b->second) {
          ++t.wins;
        } else {
          ++t.losses;
        }
      }
      summary.pairwise.push_back(t);
    }
  }
  return summary;
}

/// Tidy CSV, one row per (group, rho_s, algorithm) point.
inline std::string points_csv(const Summary& summary) {
  std::string out = "group,stations,rho_s,algorithm,samples,infeasible,mean_active,active_fraction,ideal_fraction\n";
  for (const auto& p : summary.points) {
    out += p.group + ',' + std::to_string(p.stations) + ',' + format_double(p.rho_s) + ',' + p.algorithm + ',' +
           std::to_string(p.samples) + ',' + std::to_string(p.infeasible) + ',' + format_double(p.mean_active) + ',' +
           format_double(p.active_fraction) + ',' + format_double(p.ideal_fraction) + '\n';
  }
  return out;
}

inline std::string format_summary(const Summary& summary) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << "group    rho_s  algorithm  mean_active  fraction  ideal\n";
  for (const auto& p : summary.points) {
    out << p.group << std::string(p.group.size() < 9 ? 9 - p.group.size() : 1, ' ') << p.rho_s << "  " << p.algorithm
        << std::string(p.algorithm.size() < 11 ? 11 - p.algorithm.size() : 1, ' ') << p.mean_active << "       "
        << p.active_fraction << "     " << p.ideal_fraction;
    if (p.infeasible > 0) out << "  (" << p.infeasible << " infeasible)";
    out << '\n';
  }
  out << '\n';
  for (const auto& s : summary.algorithms) {
    out << s.algorithm << ": energy saving " << 100.0 * s.energy_saving << "% over " << s.points
        << " points, mean gap to ideal " << s.ideal_gap << '\n';
  }
  for (const auto& t : summary.pairwise) {
    out << t.algorithm << " vs " << t.versus << ": " << t.wins << " wins, " << t.draws << " draws, " << t.losses
        << " losses\n";
  }
  const bool has_greedy = std::any_of(summary.algorithms.begin(), summary.algorithms.end(),
                                      [](const AlgorithmSummary& a) { return a.algorithm == "greedy"; });
  if (has_greedy) out << "(greedy = SWES-like greedy switch-off baseline)\n";
  return out.str();
}

}  // namespace bsswitch::harness
