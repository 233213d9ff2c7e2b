#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amisim/harness.hpp"
#include "amisim/oracle.hpp"

namespace py = pybind11;
using namespace amisim;

namespace {

// Assignment triplets (l, n, m) of one drop, convenient to plot from python.
std::vector<std::tuple<int, int, int>> drop_assignments(const SimConfig& cfg,
                                                        std::uint64_t drop) {
  const DropArtifacts art = run_drop_artifacts(cfg, drop);
  std::vector<std::tuple<int, int, int>> out;
  for (int l = 0; l < art.allocation.num_dcs(); ++l)
    for (int n = 0; n < art.allocation.sms_per_dc(); ++n) {
      const int m = art.allocation.channel_of(l, n);
      if (m >= 0) out.emplace_back(l, n, m);
    }
  return out;
}

std::vector<std::string> validate_drop(const SimConfig& cfg,
                                       std::uint64_t drop) {
  const DropArtifacts art = run_drop_artifacts(cfg, drop);
  return check_allocation(art.allocation, art.reuse, art.gains, cfg.power,
                          art.qos);
}

SweepSpec make_sweep_spec(const SimConfig& base, const std::string& variable,
                          const std::vector<std::pair<double, double>>& values,
                          int drops, const std::string& out,
                          bool validate, int threads) {
  SweepSpec spec;
  spec.base = base;
  spec.variable = parse_sweep_variable(variable);
  for (auto [lo, hi] : values) spec.values.push_back({lo, hi});
  spec.drops_per_point = drops;
  spec.output_path = out;
  spec.validate = validate;
  spec.threads = threads;
  return spec;
}

}  // namespace

PYBIND11_MODULE(amisim, m) {
  m.doc() = "Uplink resource-block reuse simulator for D2D smart-meter "
            "communications under a single LTE cell";

  py::enum_<LinkModel>(m, "LinkModel")
      .value("D2D", LinkModel::kD2d)
      .value("CELLULAR", LinkModel::kCellular);

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("cell_radius_m", &ScenarioConfig::cell_radius_m)
      .def_readwrite("num_cues", &ScenarioConfig::num_cues)
      .def_readwrite("num_dcs", &ScenarioConfig::num_dcs)
      .def_readwrite("sms_per_dc", &ScenarioConfig::sms_per_dc)
      .def_readwrite("max_sm_dc_distance_m", &ScenarioConfig::max_sm_dc_distance_m)
      .def_readwrite("dc_enb_distance_m", &ScenarioConfig::dc_enb_distance_m)
      .def_readwrite("rng_seed", &ScenarioConfig::rng_seed)
      .def_readwrite("min_link_distance_m", &ScenarioConfig::min_link_distance_m)
      .def_readwrite("cue_dc_link_model", &ScenarioConfig::cue_dc_link_model)
      .def("validate", &ScenarioConfig::validate);

  py::class_<PowerConfig>(m, "PowerConfig")
      .def(py::init<>())
      .def_readwrite("p_c_dbm", &PowerConfig::p_c_dbm)
      .def_readwrite("p_s_dbm", &PowerConfig::p_s_dbm)
      .def_readwrite("noise_psd_dbm_hz", &PowerConfig::noise_psd_dbm_hz)
      .def_readwrite("rb_bandwidth_hz", &PowerConfig::rb_bandwidth_hz);

  py::class_<QosConfig>(m, "QosConfig")
      .def(py::init<>())
      .def_readwrite("gamma_s_db", &QosConfig::gamma_s_db)
      .def_readwrite("gamma_c_lo_db", &QosConfig::gamma_c_lo_db)
      .def_readwrite("gamma_c_hi_db", &QosConfig::gamma_c_hi_db);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("scenario", &SimConfig::scenario)
      .def_readwrite("power", &SimConfig::power)
      .def_readwrite("qos", &SimConfig::qos);

  py::class_<Topology>(m, "Topology")
      .def_readonly("enb_pos", &Topology::enb_pos)
      .def_readonly("cue_pos", &Topology::cue_pos)
      .def_readonly("dc_pos", &Topology::dc_pos)
      .def_readonly("sm_pos", &Topology::sm_pos);

  py::class_<SmSinrEntry>(m, "SmSinrEntry")
      .def_readonly("dc", &SmSinrEntry::dc)
      .def_readonly("sm", &SmSinrEntry::sm)
      .def_readonly("channel", &SmSinrEntry::channel)
      .def_readonly("sinr_db", &SmSinrEntry::sinr_db);

  py::class_<DropMetrics>(m, "DropMetrics")
      .def_readonly("access_rate", &DropMetrics::access_rate)
      .def_readonly("throughput_gain_bps_hz", &DropMetrics::throughput_gain_bps_hz)
      .def_readonly("accepted_sms", &DropMetrics::accepted_sms)
      .def_readonly("per_cue_sinr_db", &DropMetrics::per_cue_sinr_db)
      .def_readonly("per_sm_sinr_db", &DropMetrics::per_sm_sinr_db);

  py::class_<Summary>(m, "Summary")
      .def_readonly("mean", &Summary::mean)
      .def_readonly("se", &Summary::se);

  py::class_<SweepPointResult>(m, "SweepPointResult")
      .def_readonly("md_sd_m", &SweepPointResult::md_sd_m)
      .def_readonly("n_per_dc", &SweepPointResult::n_per_dc)
      .def_readonly("drops", &SweepPointResult::drops)
      .def_readonly("access", &SweepPointResult::access)
      .def_readonly("tg", &SweepPointResult::tg)
      .def_readonly("mean_accepted", &SweepPointResult::mean_accepted);

  m.def("path_loss_cellular_db", &path_loss_cellular_db, py::arg("d_m"));
  m.def("path_loss_d2d_db", &path_loss_d2d_db, py::arg("d_m"));
  m.def("dbm_to_mw", &dbm_to_mw);
  m.def("mw_to_dbm", &mw_to_dbm);
  m.def("db_to_linear", &db_to_linear);
  m.def("noise_per_rb_dbm", &noise_per_rb_dbm);
  m.def("noise_per_rb_mw", &noise_per_rb_mw);

  m.def("generate_topology", &generate_topology, py::arg("cfg"));
  m.def("run_drop", &run_drop, py::arg("cfg"), py::arg("drop_index"),
        "Run one Monte-Carlo drop and return its metrics.");
  m.def("drop_assignments", &drop_assignments, py::arg("cfg"),
        py::arg("drop_index"),
        "Assignment triplets (dc, sm, channel) of one drop.");
  m.def("validate_drop", &validate_drop, py::arg("cfg"), py::arg("drop_index"),
        "Feasibility violations of one drop's allocation (empty = feasible).");
  m.def("load_config_file", &load_config_file, py::arg("path"));

  m.def(
      "run_sweep",
      [](const SimConfig& base, const std::string& variable,
         const std::vector<std::pair<double, double>>& values, int drops,
         const std::string& out, bool validate, int threads) {
        return run_sweep(make_sweep_spec(base, variable, values, drops, out,
                                         validate, threads));
      },
      py::arg("base"), py::arg("variable"), py::arg("values"),
      py::arg("drops") = 200, py::arg("out") = std::string(),
      py::arg("validate") = false, py::arg("threads") = 0,
      "Monte-Carlo sweep; values are (lo, hi) pairs, hi ignored except for "
      "cue_sinr_range. Writes a csv when out is non-empty.");
}
