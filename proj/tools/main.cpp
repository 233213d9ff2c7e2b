// amisim: Monte-Carlo simulator of uplink resource-block reuse for
// D2D smart-meter communications under a single LTE cell.
//
// Subcommands:
//   gen-topology   write one drop's node layout as a csv table
//   run-drop       run one drop and print its metrics (plus optional dumps)
//   sweep          Monte-Carlo sweep over a scenario variable, csv output
//   verify-oracle  compare the greedy allocator against the exact solver

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amisim/harness.hpp"
#include "amisim/oracle.hpp"
#include "amisim/rng.hpp"

namespace {

struct GlobalOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  std::uint64_t seed = 0;
  bool seed_set = false;
  int drops = 200;
  std::string out_path;
  bool validate = false;
  int threads = 0;
};

amisim::SimConfig build_config(const GlobalOptions& opt) {
  amisim::SimConfig cfg = amisim::load_config_file(opt.config_path);
  for (const std::string& kv : opt.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    amisim::apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opt.seed_set) cfg.scenario.rng_seed = opt.seed;
  cfg.scenario.validate();
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  return out;
}

void dump_to(const std::string& path, const auto& writer) {
  if (path.empty()) return;
  auto out = open_out(path);
  writer(out);
}

int cmd_gen_topology(const GlobalOptions& opt, std::uint64_t drop) {
  const amisim::SimConfig cfg = build_config(opt);
  amisim::ScenarioConfig scenario = cfg.scenario;
  scenario.rng_seed =
      amisim::mix_seed(cfg.scenario.rng_seed, drop, amisim::kStreamTopology);
  const amisim::Topology topo = amisim::generate_topology(scenario);
  if (opt.out_path.empty()) {
    amisim::write_topology_table(topo, std::cout);
  } else {
    auto out = open_out(opt.out_path);
    amisim::write_topology_table(topo, out);
  }
  return 0;
}

int cmd_run_drop(const GlobalOptions& opt, std::uint64_t drop,
                 const std::string& dump_topology, const std::string& dump_gains,
                 const std::string& dump_reuse, const std::string& dump_alloc) {
  const amisim::SimConfig cfg = build_config(opt);
  const amisim::DropArtifacts art = amisim::run_drop_artifacts(cfg, drop);

  if (opt.validate) {
    const auto violations = amisim::check_allocation(
        art.allocation, art.reuse, art.gains, cfg.power, art.qos);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
      return 1;
    }
  }

  dump_to(dump_topology, [&](std::ostream& os) { write_topology_table(art.topology, os); });
  dump_to(dump_gains, [&](std::ostream& os) { write_gain_table(art.gains, os); });
  dump_to(dump_reuse, [&](std::ostream& os) { write_reuse_matrix(art.reuse, os); });
  dump_to(dump_alloc, [&](std::ostream& os) { write_allocation(art.allocation, os); });

  const amisim::DropMetrics& m = art.metrics;
  std::printf("drop %llu: sms=%d accepted=%d access_rate=%.6g tg_bps_hz=%.6g "
              "reuse_candidates=%ld\n",
              static_cast<unsigned long long>(drop),
              art.allocation.num_dcs() * art.allocation.sms_per_dc(),
              m.accepted_sms, m.access_rate, m.throughput_gain_bps_hz,
              art.reuse.ones());
  return 0;
}

int cmd_sweep(const GlobalOptions& opt, const std::string& var_name,
              const std::string& values, bool abs_tp) {
  amisim::SweepSpec spec;
  spec.base = build_config(opt);
  spec.variable = amisim::parse_sweep_variable(var_name);
  spec.values = amisim::parse_sweep_values(values, spec.variable);
  spec.drops_per_point = opt.drops;
  spec.output_path = opt.out_path;
  spec.validate = opt.validate;
  spec.threads = opt.threads;
  spec.absolute_throughput = abs_tp;
  if (spec.output_path.empty())
    throw std::invalid_argument("sweep requires --out");

  const auto rows = amisim::run_sweep(spec);
  std::fprintf(stderr, "sweep: %zu points x %d drops -> %s\n", rows.size(),
               spec.drops_per_point, spec.output_path.c_str());
  return 0;
}

int cmd_verify_oracle(const GlobalOptions& opt, int instances, int max_sms,
                      int max_cues) {
  const amisim::OracleLimits limits{max_sms, max_cues, 10'000'000};
  int dominance_violations = 0;
  int feasibility_violations = 0;
  int optimum_positive = 0;
  double ratio_sum = 0.0;

  for (int i = 0; i < instances; ++i) {
    const std::uint64_t index =
        amisim::mix_seed(opt.seed_set ? opt.seed : 1, i, 7);
    const amisim::SimConfig cfg =
        amisim::make_small_instance_config(index, max_sms, max_cues);
    const amisim::DropArtifacts art = amisim::run_drop_artifacts(cfg, 0);
    const amisim::OracleResult exact = amisim::solve_exact(
        art.reuse, art.gains, cfg.power, art.qos, limits);

    if (art.allocation.assigned_count() > exact.accepted) ++dominance_violations;
    if (!amisim::check_allocation(exact.allocation, art.reuse, art.gains,
                                  cfg.power, art.qos)
             .empty())
      ++feasibility_violations;
    if (exact.accepted > 0) {
      ++optimum_positive;
      ratio_sum += static_cast<double>(art.allocation.assigned_count()) /
                   exact.accepted;
    }
  }

  std::printf("instances=%d dominance_violations=%d feasibility_violations=%d "
              "mean_greedy_over_optimal=%.6g (over %d instances with optimum>0)\n",
              instances, dominance_violations, feasibility_violations,
              optimum_positive ? ratio_sum / optimum_positive : 1.0,
              optimum_positive);
  return (dominance_violations == 0 && feasibility_violations == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D2D smart-meter uplink reuse simulator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opt;
  app.add_option("--config", opt.config_path, "flat key=value config file");
  app.add_option("--set", opt.overrides, "config override key=value")
      ->take_all();
  app.add_option("--seed", opt.seed, "base RNG seed")
      ->each([&](const std::string&) { opt.seed_set = true; });
  app.add_option("--drops", opt.drops, "Monte-Carlo drops per sweep point");
  app.add_option("--out", opt.out_path, "output file path");
  app.add_flag("--validate", opt.validate,
               "run the feasibility checker on every drop");
  app.add_option("--threads", opt.threads, "worker threads (0 = auto)");

  std::uint64_t drop = 0;
  auto* gen = app.add_subcommand("gen-topology", "write one drop's node layout");
  gen->add_option("--drop", drop, "drop index");

  std::string dump_topology, dump_gains, dump_reuse, dump_alloc;
  auto* run = app.add_subcommand("run-drop", "run a single drop");
  run->add_option("--drop", drop, "drop index");
  run->add_option("--dump-topology", dump_topology, "write topology table");
  run->add_option("--dump-gains", dump_gains, "write gain table");
  run->add_option("--dump-reuse", dump_reuse, "write reuse-candidate triplets");
  run->add_option("--dump-alloc", dump_alloc, "write allocation rows");

  std::string var_name, values;
  bool abs_tp = false;
  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep, csv output");
  sweep->add_option("--var", var_name,
                    "sms_per_dc | max_sm_dc_distance | cue_sinr_range")
      ->required();
  sweep->add_option("--values", values,
                    "comma-separated values (lo:hi pairs for cue_sinr_range)")
      ->required();
  sweep->add_flag("--abs-throughput", abs_tp,
                  "append a mean_tg_bps column (tg x RB bandwidth)");

  int instances = 100, max_sms = 6, max_cues = 5;
  auto* verify = app.add_subcommand("verify-oracle",
                                    "greedy vs exact solver on small instances");
  verify->add_option("--instances", instances, "number of random instances");
  verify->add_option("--max-sms", max_sms, "max total SMs per instance");
  verify->add_option("--max-cues", max_cues, "max CUEs per instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_topology(opt, drop);
    if (run->parsed())
      return cmd_run_drop(opt, drop, dump_topology, dump_gains, dump_reuse,
                          dump_alloc);
    if (sweep->parsed()) return cmd_sweep(opt, var_name, values, abs_tp);
    if (verify->parsed())
      return cmd_verify_oracle(opt, instances, max_sms, max_cues);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
