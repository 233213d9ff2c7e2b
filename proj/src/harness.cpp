#include "amisim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "amisim/rng.hpp"

namespace amisim {

QosProfile draw_qos_profile(const QosConfig& qos, int num_cues,
                            std::uint64_t seed) {
  Rng rng(seed);
  QosProfile profile;
  profile.gamma_s = db_to_linear(qos.gamma_s_db);
  profile.gamma_c.resize(num_cues);
  for (int m = 0; m < num_cues; ++m)
    profile.gamma_c[m] =
        db_to_linear(rng.uniform(qos.gamma_c_lo_db, qos.gamma_c_hi_db));
  return profile;
}

DropArtifacts run_drop_artifacts(const SimConfig& cfg, std::uint64_t drop_index) {
  ScenarioConfig scenario = cfg.scenario;
  scenario.rng_seed =
      mix_seed(cfg.scenario.rng_seed, drop_index, kStreamTopology);

  Topology topo = generate_topology(scenario);
  GainTable gains = build_gain_table(topo, cfg.power, scenario);
  QosProfile qos = draw_qos_profile(
      cfg.qos, scenario.num_cues,
      mix_seed(cfg.scenario.rng_seed, drop_index, kStreamQos));
  InterferenceBudget budgets = compute_budgets(gains, cfg.power, qos);
  ReuseMatrix reuse = compute_reuse_matrix(gains, cfg.power, budgets);
  AllocationMatrix allocation = allocate(reuse, gains, cfg.power, qos);
  DropMetrics metrics = compute_drop_metrics(allocation, gains, cfg.power);

  return {std::move(scenario), std::move(topo),    std::move(gains),
          std::move(qos),      std::move(budgets), std::move(reuse),
          std::move(allocation), std::move(metrics)};
}

DropMetrics run_drop(const SimConfig& cfg, std::uint64_t drop_index) {
  return run_drop_artifacts(cfg, drop_index).metrics;
}

SimConfig apply_sweep_value(const SimConfig& base, SweepVariable var,
                            SweepValue value) {
  SimConfig cfg = base;
  switch (var) {
    case SweepVariable::kSmsPerDc:
      cfg.scenario.sms_per_dc = static_cast<int>(value.lo);
      break;
    case SweepVariable::kMaxSmDcDistance:
      cfg.scenario.max_sm_dc_distance_m = value.lo;
      break;
    case SweepVariable::kCueSinrRange:
      cfg.qos.gamma_c_lo_db = value.lo;
      cfg.qos.gamma_c_hi_db = value.hi;
      break;
  }
  return cfg;
}

SweepPointResult run_sweep_point(const SimConfig& cfg, int drops, int threads,
                                 bool validate) {
  if (drops < 1) throw std::invalid_argument("drops_per_point must be >= 1");
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, drops);

  std::vector<DropMetrics> results(drops);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= drops) return;
        if (validate) {
          DropArtifacts art = run_drop_artifacts(cfg, i);
          auto violations = check_allocation(art.allocation, art.reuse,
                                             art.gains, cfg.power, art.qos);
          if (!violations.empty())
            throw std::runtime_error("drop " + std::to_string(i) +
                                     " failed validation: " + violations[0]);
          results[i] = std::move(art.metrics);
        } else {
          results[i] = run_drop(cfg, i);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Reduce in drop-index order.
  std::vector<double> access(drops), tg(drops);
  double accepted = 0.0;
  for (int i = 0; i < drops; ++i) {
    access[i] = results[i].access_rate;
    tg[i] = results[i].throughput_gain_bps_hz;
    accepted += results[i].accepted_sms;
  }

  SweepPointResult point;
  point.md_sd_m = cfg.scenario.max_sm_dc_distance_m;
  point.n_per_dc = cfg.scenario.sms_per_dc;
  point.drops = drops;
  point.access = summarize(access);
  point.tg = summarize(tg);
  point.mean_accepted = accepted / drops;
  return point;
}

std::string csv_header(bool absolute_throughput) {
  std::string h =
      "md_sd_m,n_per_dc,drops,mean_access_rate,se_access_rate,"
      "mean_tg_bps_hz,se_tg,mean_accepted";
  if (absolute_throughput) h += ",mean_tg_bps";
  h += "\n";
  return h;
}

std::string csv_row(const SweepPointResult& p, double rb_bandwidth_hz,
                    bool absolute_throughput) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.9g,%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g",
                p.md_sd_m, p.n_per_dc, p.drops, p.access.mean, p.access.se,
                p.tg.mean, p.tg.se, p.mean_accepted);
  std::string row = buf;
  if (absolute_throughput) {
    std::snprintf(buf, sizeof(buf), ",%.9g", p.tg.mean * rb_bandwidth_hz);
    row += buf;
  }
  row += "\n";
  return row;
}

std::vector<SweepPointResult> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("sweep values empty");
  if (spec.drops_per_point < 1)
    throw std::invalid_argument("drops_per_point must be >= 1");

  std::optional<std::ofstream> file;
  if (!spec.output_path.empty()) {
    file.emplace(spec.output_path, std::ios::binary);
    if (!*file)
      throw std::runtime_error("cannot open output path: " + spec.output_path);
    *file << csv_header(spec.absolute_throughput);
    file->flush();
  }

  std::vector<SweepPointResult> rows;
  rows.reserve(spec.values.size());
  for (const SweepValue& value : spec.values) {
    const SimConfig cfg = apply_sweep_value(spec.base, spec.variable, value);
    rows.push_back(run_sweep_point(cfg, spec.drops_per_point, spec.threads,
                                   spec.validate));
    if (file) {
      *file << csv_row(rows.back(), spec.base.power.rb_bandwidth_hz,
                       spec.absolute_throughput);
      file->flush();  // partial results survive an interrupted sweep
    }
  }
  return rows;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': bad number '" +
                                value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config key '" + key + "': bad number '" +
                                value + "'");
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const double d = parse_double(key, value);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw std::invalid_argument("config key '" + key + "': expected integer, got '" +
                                value + "'");
  return i;
}

}  // namespace

void apply_config_override(SimConfig& cfg, const std::string& key,
                           const std::string& value) {
  ScenarioConfig& sc = cfg.scenario;
  PowerConfig& pw = cfg.power;
  QosConfig& qos = cfg.qos;
  if (key == "cell_radius_m") sc.cell_radius_m = parse_double(key, value);
  else if (key == "num_cues") sc.num_cues = parse_int(key, value);
  else if (key == "num_dcs") sc.num_dcs = parse_int(key, value);
  else if (key == "sms_per_dc") sc.sms_per_dc = parse_int(key, value);
  else if (key == "max_sm_dc_distance_m") sc.max_sm_dc_distance_m = parse_double(key, value);
  else if (key == "dc_enb_distance_m") sc.dc_enb_distance_m = parse_double(key, value);
  else if (key == "rng_seed") sc.rng_seed = static_cast<std::uint64_t>(parse_double(key, value));
  else if (key == "min_link_distance_m") sc.min_link_distance_m = parse_double(key, value);
  else if (key == "cue_dc_link_model" || key == "sm_enb_link_model") {
    const std::string v = trim(value);
    LinkModel model;
    if (v == "d2d") model = LinkModel::kD2d;
    else if (v == "cellular") model = LinkModel::kCellular;
    else throw std::invalid_argument(key + " must be d2d or cellular");
    (key == "cue_dc_link_model" ? sc.cue_dc_link_model : sc.sm_enb_link_model) =
        model;
  }
  else if (key == "p_c_dbm") pw.p_c_dbm = parse_double(key, value);
  else if (key == "p_s_dbm") pw.p_s_dbm = parse_double(key, value);
  else if (key == "noise_psd_dbm_hz") pw.noise_psd_dbm_hz = parse_double(key, value);
  else if (key == "rb_bandwidth_hz") pw.rb_bandwidth_hz = parse_double(key, value);
  else if (key == "gamma_s_db") qos.gamma_s_db = parse_double(key, value);
  else if (key == "gamma_c_lo_db") qos.gamma_c_lo_db = parse_double(key, value);
  else if (key == "gamma_c_hi_db") qos.gamma_c_hi_db = parse_double(key, value);
  else throw std::invalid_argument("unknown config key: " + key);
}

SimConfig load_config_file(const std::string& path) {
  SimConfig cfg;  // defaults already carry the standard parameter set
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    apply_config_override(cfg, trim(line.substr(0, eq)),
                          trim(line.substr(eq + 1)));
  }
  return cfg;
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "sms_per_dc") return SweepVariable::kSmsPerDc;
  if (name == "max_sm_dc_distance") return SweepVariable::kMaxSmDcDistance;
  if (name == "cue_sinr_range") return SweepVariable::kCueSinrRange;
  throw std::invalid_argument(
      "unknown sweep variable '" + name +
      "' (expected sms_per_dc, max_sm_dc_distance or cue_sinr_range)");
}

std::vector<SweepValue> parse_sweep_values(const std::string& csv_list,
                                           SweepVariable var) {
  std::vector<SweepValue> values;
  std::stringstream ss(csv_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    SweepValue v;
    const auto colon = item.find(':');
    if (var == SweepVariable::kCueSinrRange) {
      if (colon == std::string::npos)
        throw std::invalid_argument("cue_sinr_range values need lo:hi, got '" +
                                    item + "'");
      v.lo = parse_double("values", item.substr(0, colon));
      v.hi = parse_double("values", item.substr(colon + 1));
    } else {
      if (colon != std::string::npos)
        throw std::invalid_argument("scalar sweep value cannot be a range: '" +
                                    item + "'");
      v.lo = parse_double("values", item);
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("sweep values empty");
  return values;
}

SimConfig make_small_instance_config(std::uint64_t index, int max_sms,
                                     int max_cues) {
  max_cues = std::max(max_cues, 2);
  max_sms = std::max(max_sms, 1);
  Rng rng(mix_seed(index, 0, 2));
  SimConfig cfg;
  cfg.scenario.num_cues = 2 + static_cast<int>(rng.next_u64() % (max_cues - 1));
  cfg.scenario.num_dcs = 1 + static_cast<int>(rng.next_u64() % 3);
  const int max_n = std::max(1, max_sms / cfg.scenario.num_dcs);
  cfg.scenario.sms_per_dc = 1 + static_cast<int>(rng.next_u64() % max_n);
  const double md_choices[] = {50.0, 75.0, 100.0};
  cfg.scenario.max_sm_dc_distance_m = md_choices[rng.next_u64() % 3];
  cfg.scenario.dc_enb_distance_m = rng.uniform(100.0, 450.0);
  cfg.scenario.rng_seed = mix_seed(index, 1, 3);
  return cfg;
}

}  // namespace amisim
