#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace amisim {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Euclidean distance in metres.
double distance(const Point& p, const Point& q);

// Distance floored at floor_m, used for path-loss evaluation so co-located
// nodes never hit the log(0) singularity.
double effective_distance(const Point& p, const Point& q, double floor_m);

// Path-loss model selector; the models themselves live in channel.hpp.
enum class LinkModel { kD2d, kCellular };

struct ScenarioConfig {
  double cell_radius_m = 500.0;
  int num_cues = 50;                   // M, one uplink RB per CUE
  int num_dcs = 4;                     // L
  int sms_per_dc = 50;                 // N
  double max_sm_dc_distance_m = 50.0;  // Md_SD, SM placement disk radius
  double dc_enb_distance_m = 300.0;
  std::uint64_t rng_seed = 1;
  double min_link_distance_m = 1.0;
  // The two interference links the path-loss table does not name a model
  // for. Defaults follow the transmitter class: SM transmissions propagate
  // like the SM->DC link they were measured for, CUE transmissions like the
  // cellular uplink.
  LinkModel cue_dc_link_model = LinkModel::kCellular;
  LinkModel sm_enb_link_model = LinkModel::kD2d;

  // Throws std::invalid_argument on non-positive dimensions or a DC circle
  // that does not fit inside the cell.
  void validate() const;
};

struct Topology {
  Point enb_pos;
  std::vector<Point> cue_pos;              // M entries
  std::vector<Point> dc_pos;               // L entries
  std::vector<std::vector<Point>> sm_pos;  // L x N
};

// Single-cell layout: eNB at the origin, CUEs uniform by area over the cell
// disk, DCs at independent uniform angles on the dc_enb_distance_m circle,
// SMs uniform by area over the Md_SD disk around their serving DC.
// Pure function of cfg: identical config (seed included) gives a
// bit-identical topology.
Topology generate_topology(const ScenarioConfig& cfg);

// Plain-text table, one row per node: kind,index,dc_index,x_m,y_m
// (kind in {ENB,CUE,DC,SM}; dc_index empty except for SM rows).
void write_topology_table(const Topology& topo, std::ostream& os);

}  // namespace amisim
