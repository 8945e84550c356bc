// Command-line front end: instance generation, single runs, sweeps and
// sweep summaries.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <bsswitch/harness.hpp>

namespace {

using namespace bsswitch;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string bits(const Solution& s) {
  std::string out;
  for (auto b : s) out += b ? '1' : '0';
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base station switching with a binary social spider algorithm"};
  app.require_subcommand(1);

  GenParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random topology");
  gen_cmd->add_option("--stations", gen.n_stations, "Number of base stations")->required();
  gen_cmd->add_option("--lambda", gen.lambda, "Expected neighbor count (>= 2)")->required();
  gen_cmd->add_option("--seed", gen.rng_seed, "RNG seed")->required();
  gen_cmd->add_option("--area", gen.area_side, "Side of the square area in km")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output topology file")->required();

  std::string run_instance, run_mode = "conserving", run_algo = "ssa", run_solution_out;
  LoadParams run_load;
  harness::SsaConfig run_ssa;
  std::uint64_t run_seed = 1;
  bool run_wall_time = false;
  auto* run_cmd = app.add_subcommand("run", "Solve one instance at one load");
  run_cmd->add_option("--instance", run_instance, "Topology file")->required();
  run_cmd->add_option("--rho-s", run_load.rho_s, "Uniform system load")->required();
  run_cmd->add_option("--rho-max", run_load.rho_max, "Per-station load cap")->capture_default_str();
  run_cmd->add_option("--mode", run_mode, "Transfer mode")->check(CLI::IsMember({"conserving", "literal"}))
      ->capture_default_str();
  run_cmd->add_option("--algo", run_algo, "Solver")->check(CLI::IsMember({"ssa", "greedy", "oracle"}))
      ->capture_default_str();
  run_cmd->add_option("--pop", run_ssa.population, "SSA population (0 = station count)")->capture_default_str();
  run_cmd->add_option("--ra", run_ssa.r_a, "SSA vibration attenuation rate")->capture_default_str();
  run_cmd->add_option("--iters", run_ssa.iterations, "SSA iterations")->capture_default_str();
  run_cmd->add_option("--seed", run_seed, "SSA seed")->capture_default_str();
  run_cmd->add_option("--solution-out", run_solution_out, "Write the on/off vector to this file");
  run_cmd->add_flag("--wall-time", run_wall_time, "Record wall time (output no longer reproducible)");

  std::string sweep_spec, sweep_out;
  bool sweep_wall_time = false;
  std::size_t sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep described by a JSON spec");
  sweep_cmd->add_option("--spec", sweep_spec, "Sweep spec file")->required();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV")->required();
  sweep_cmd->add_option("--threads", sweep_threads, "Worker threads (overrides the spec)");
  sweep_cmd->add_flag("--wall-time", sweep_wall_time, "Record wall time (output no longer reproducible)");

  std::string compare_csv, compare_points;
  double compare_rho_max = 0.6;
  bool compare_pooled = false;
  auto* compare_cmd = app.add_subcommand("compare", "Summarize a sweep CSV");
  compare_cmd->add_option("--csv", compare_csv, "Sweep CSV")->required();
  compare_cmd->add_option("--rho-max", compare_rho_max, "Load cap used by the sweep")->capture_default_str();
  compare_cmd->add_option("--points-out", compare_points, "Write per-point tidy CSV here");
  compare_cmd->add_flag("--pooled", compare_pooled, "Pool all instances instead of grouping by family");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      save(generate(gen), gen_out);
      return 0;
    }

    if (*run_cmd) {
      run_load.transfer_mode = parse_transfer_mode(run_mode);
      const auto instance = harness::materialize({"", std::filesystem::path(run_instance)});
      const auto solved = harness::solve(instance, run_load, harness::parse_algorithm(run_algo), run_ssa, run_seed,
                                         run_wall_time);
      std::cout << harness::to_csv({solved.row});
      if (!run_solution_out.empty()) write_file(run_solution_out, bits(solved.solution) + "\n");
      return 0;
    }

    if (*sweep_cmd) {
      auto spec = harness::load_sweep_spec(sweep_spec);
      if (sweep_wall_time) spec.record_wall_time = true;
      if (sweep_threads != 0) spec.threads = sweep_threads;
      const auto outcome = harness::run_sweep(spec);
      write_file(sweep_out, harness::to_csv(outcome.rows));
      for (const auto& e : outcome.errors) std::cerr << "error: " << e.instance << ": " << e.message << '\n';
      return outcome.errors.empty() ? 0 : 2;
    }

    if (*compare_cmd) {
      const auto rows = harness::parse_csv(read_file(compare_csv));
      const auto summary = harness::summarize(rows, compare_rho_max,
                                              compare_pooled ? harness::Grouping::None : harness::Grouping::ByFamily);
      std::cout << harness::format_summary(summary);
      if (!compare_points.empty()) write_file(compare_points, harness::points_csv(summary));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
