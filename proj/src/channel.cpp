#include "amisim/channel.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace amisim {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double PowerConfig::p_c_mw() const { return dbm_to_mw(p_c_dbm); }
double PowerConfig::p_s_mw() const { return dbm_to_mw(p_s_dbm); }

double path_loss_cellular_db(double d_m) {
  return 128.1 + 37.6 * std::log10(d_m / 1000.0);
}

double path_loss_d2d_db(double d_m) {
  return 148.0 + 40.0 * std::log10(d_m / 1000.0);
}

double gain_from_path_loss(double pl_db) {
  return std::pow(10.0, -pl_db / 10.0);
}

double noise_per_rb_dbm(const PowerConfig& pw) {
  return pw.noise_psd_dbm_hz + 10.0 * std::log10(pw.rb_bandwidth_hz);
}

double noise_per_rb_mw(const PowerConfig& pw) {
  return dbm_to_mw(noise_per_rb_dbm(pw));
}

namespace {

double link_gain(const Point& tx, const Point& rx, LinkModel model, double floor_m) {
  const double d = effective_distance(tx, rx, floor_m);
  const double pl = model == LinkModel::kCellular ? path_loss_cellular_db(d)
                                                  : path_loss_d2d_db(d);
  return gain_from_path_loss(pl);
}

}  // namespace

GainTable build_gain_table(const Topology& topo, const PowerConfig& pw,
                           const ScenarioConfig& cfg) {
  (void)pw;  // gains are power-independent; kept for interface symmetry
  const int num_cues = static_cast<int>(topo.cue_pos.size());
  const int num_dcs = static_cast<int>(topo.dc_pos.size());
  const int sms_per_dc =
      topo.sm_pos.empty() ? 0 : static_cast<int>(topo.sm_pos[0].size());
  const double floor_m = cfg.min_link_distance_m;

  GainTable g(num_cues, num_dcs, sms_per_dc);

  for (int m = 0; m < num_cues; ++m)
    g.cue_enb(m) =
        link_gain(topo.cue_pos[m], topo.enb_pos, LinkModel::kCellular, floor_m);

  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n)
      g.sm_enb(l, n) = link_gain(topo.sm_pos[l][n], topo.enb_pos,
                                 cfg.sm_enb_link_model, floor_m);

  for (int k = 0; k < num_dcs; ++k)
    for (int n = 0; n < sms_per_dc; ++n)
      for (int l = 0; l < num_dcs; ++l)
        g.sm_dc(k, n, l) =
            link_gain(topo.sm_pos[k][n], topo.dc_pos[l], LinkModel::kD2d, floor_m);

  for (int m = 0; m < num_cues; ++m)
    for (int l = 0; l < num_dcs; ++l)
      g.cue_dc(m, l) = link_gain(topo.cue_pos[m], topo.dc_pos[l],
                                 cfg.cue_dc_link_model, floor_m);

  return g;
}

namespace {

void gain_row(std::ostream& os, const char* tk, int ti, const char* rk, int ri,
              double gain) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s,%d,%s,%d,%.12g\n", tk, ti, rk, ri, gain);
  os << buf;
}

}  // namespace

void write_gain_table(const GainTable& g, std::ostream& os) {
  os << "tx_kind,tx_idx,rx_kind,rx_idx,gain_linear\n";
  for (int m = 0; m < g.num_cues(); ++m)
    gain_row(os, "CUE", m, "ENB", 0, g.cue_enb(m));
  for (int l = 0; l < g.num_dcs(); ++l)
    for (int n = 0; n < g.sms_per_dc(); ++n)
      gain_row(os, "SM", l * g.sms_per_dc() + n, "ENB", 0, g.sm_enb(l, n));
  for (int k = 0; k < g.num_dcs(); ++k)
    for (int n = 0; n < g.sms_per_dc(); ++n)
      for (int l = 0; l < g.num_dcs(); ++l)
        gain_row(os, "SM", k * g.sms_per_dc() + n, "DC", l, g.sm_dc(k, n, l));
  for (int m = 0; m < g.num_cues(); ++m)
    for (int l = 0; l < g.num_dcs(); ++l)
      gain_row(os, "CUE", m, "DC", l, g.cue_dc(m, l));
}

}  // namespace amisim
