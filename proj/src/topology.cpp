#include "amisim/topology.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "amisim/rng.hpp"

namespace amisim {

double distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double effective_distance(const Point& p, const Point& q, double floor_m) {
  return std::max(distance(p, q), floor_m);
}

void ScenarioConfig::validate() const {
  if (cell_radius_m <= 0.0) throw std::invalid_argument("cell_radius_m must be > 0");
  if (num_cues < 1) throw std::invalid_argument("num_cues must be >= 1");
  if (num_dcs < 1) throw std::invalid_argument("num_dcs must be >= 1");
  if (sms_per_dc < 0) throw std::invalid_argument("sms_per_dc must be >= 0");
  if (max_sm_dc_distance_m <= 0.0)
    throw std::invalid_argument("max_sm_dc_distance_m must be > 0");
  if (dc_enb_distance_m <= 0.0 || dc_enb_distance_m >= cell_radius_m)
    throw std::invalid_argument("dc_enb_distance_m must be in (0, cell_radius_m)");
  if (min_link_distance_m <= 0.0)
    throw std::invalid_argument("min_link_distance_m must be > 0");
}

namespace {

// Uniform by area: radius = R*sqrt(u) puts equal probability mass on equal
// areas, which is what "uniformly distributed in a disk" means.
Point sample_disk(Rng& rng, Point center, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {center.x + r * std::cos(theta), center.y + r * std::sin(theta)};
}

}  // namespace

Topology generate_topology(const ScenarioConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.rng_seed);

  Topology topo;
  topo.enb_pos = {0.0, 0.0};

  topo.cue_pos.reserve(cfg.num_cues);
  for (int m = 0; m < cfg.num_cues; ++m)
    topo.cue_pos.push_back(sample_disk(rng, topo.enb_pos, cfg.cell_radius_m));

  topo.dc_pos.reserve(cfg.num_dcs);
  for (int l = 0; l < cfg.num_dcs; ++l) {
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    topo.dc_pos.push_back({cfg.dc_enb_distance_m * std::cos(theta),
                           cfg.dc_enb_distance_m * std::sin(theta)});
  }

  topo.sm_pos.resize(cfg.num_dcs);
  for (int l = 0; l < cfg.num_dcs; ++l) {
    topo.sm_pos[l].reserve(cfg.sms_per_dc);
    for (int n = 0; n < cfg.sms_per_dc; ++n)
      topo.sm_pos[l].push_back(
          sample_disk(rng, topo.dc_pos[l], cfg.max_sm_dc_distance_m));
  }
  return topo;
}

namespace {

void row(std::ostream& os, const char* kind, int index, int dc_index, Point p) {
  char buf[128];
  if (dc_index < 0)
    std::snprintf(buf, sizeof(buf), "%s,%d,,%.12g,%.12g\n", kind, index, p.x, p.y);
  else
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.12g,%.12g\n", kind, index,
                  dc_index, p.x, p.y);
  os << buf;
}

}  // namespace

void write_topology_table(const Topology& topo, std::ostream& os) {
  os << "kind,index,dc_index,x_m,y_m\n";
  row(os, "ENB", 0, -1, topo.enb_pos);
  for (std::size_t m = 0; m < topo.cue_pos.size(); ++m)
    row(os, "CUE", static_cast<int>(m), -1, topo.cue_pos[m]);
  for (std::size_t l = 0; l < topo.dc_pos.size(); ++l)
    row(os, "DC", static_cast<int>(l), -1, topo.dc_pos[l]);
  for (std::size_t l = 0; l < topo.sm_pos.size(); ++l)
    for (std::size_t n = 0; n < topo.sm_pos[l].size(); ++n)
      row(os, "SM", static_cast<int>(n), static_cast<int>(l), topo.sm_pos[l][n]);
}

}  // namespace amisim
