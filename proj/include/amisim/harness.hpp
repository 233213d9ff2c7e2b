#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "amisim/metrics.hpp"
#include "amisim/validate.hpp"

namespace amisim {

// SINR requirements in dB; the per-CUE thresholds are redrawn uniformly in
// [gamma_c_lo_db, gamma_c_hi_db] for every drop, gamma_s is fixed.
struct QosConfig {
  double gamma_s_db = 5.0;
  double gamma_c_lo_db = 0.0;
  double gamma_c_hi_db = 25.0;
};

struct SimConfig {
  ScenarioConfig scenario;
  PowerConfig power;
  QosConfig qos;
};

// Thresholds for one drop, in linear units.
QosProfile draw_qos_profile(const QosConfig& qos, int num_cues,
                            std::uint64_t seed);

// Everything one drop produces; kept around for dumps and tests.
struct DropArtifacts {
  ScenarioConfig scenario;  // with the per-drop topology seed mixed in
  Topology topology;
  GainTable gains;
  QosProfile qos;
  InterferenceBudget budgets;
  ReuseMatrix reuse;
  AllocationMatrix allocation;
  DropMetrics metrics;
};

// Full pipeline for one drop: topology -> gains -> budgets -> reuse matrix
// -> allocation -> metrics. Deterministic in (cfg, drop_index). Per-drop
// randomness covers CUE positions, DC angles, SM positions and the per-CUE
// threshold draw; powers and gamma_s stay fixed.
DropArtifacts run_drop_artifacts(const SimConfig& cfg, std::uint64_t drop_index);
DropMetrics run_drop(const SimConfig& cfg, std::uint64_t drop_index);

enum class SweepVariable { kSmsPerDc, kMaxSmDcDistance, kCueSinrRange };

// Scalar sweeps use lo only; the CUE SINR-range sweep uses [lo, hi] dB.
struct SweepValue {
  double lo = 0.0;
  double hi = 0.0;
};

struct SweepSpec {
  SimConfig base;
  SweepVariable variable = SweepVariable::kSmsPerDc;
  std::vector<SweepValue> values;
  int drops_per_point = 200;
  std::string output_path;
  bool validate = false;       // assert the feasibility checker on every drop
  int threads = 0;             // 0 = hardware concurrency
  bool absolute_throughput = false;  // append a mean_tg_bps column
};

struct SweepPointResult {
  double md_sd_m = 0.0;
  int n_per_dc = 0;
  int drops = 0;
  Summary access;
  Summary tg;
  double mean_accepted = 0.0;
};

SimConfig apply_sweep_value(const SimConfig& base, SweepVariable var,
                            SweepValue value);

// Runs the drops of one point, optionally in parallel; results are reduced
// in drop-index order so the outcome is independent of scheduling. Throws on
// a validation failure when validate is set.
SweepPointResult run_sweep_point(const SimConfig& cfg, int drops, int threads,
                                 bool validate);

// One CSV row per sweep value, flushed per point. Throws on an unwritable
// output path before any computation. Empty output_path writes no file.
std::vector<SweepPointResult> run_sweep(const SweepSpec& spec);

std::string csv_header(bool absolute_throughput);
std::string csv_row(const SweepPointResult& p, double rb_bandwidth_hz,
                    bool absolute_throughput);

// Flat key = value configuration file; '#' starts a comment. Keys mirror the
// config field names; unknown keys are an error. Returns Table-style
// defaults when path is empty.
SimConfig load_config_file(const std::string& path);
void apply_config_override(SimConfig& cfg, const std::string& key,
                           const std::string& value);

SweepVariable parse_sweep_variable(const std::string& name);
std::vector<SweepValue> parse_sweep_values(const std::string& csv_list,
                                           SweepVariable var);

// Deterministic desk-size configs for greedy-vs-exact comparisons.
SimConfig make_small_instance_config(std::uint64_t index, int max_sms,
                                     int max_cues);

}  // namespace amisim
