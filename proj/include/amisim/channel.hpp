#pragma once

#include <iosfwd>
#include <vector>

#include "amisim/topology.hpp"

namespace amisim {

struct PowerConfig {
  double p_c_dbm = 24.0;             // CUE transmit power
  double p_s_dbm = 24.0;             // SM transmit power
  double noise_psd_dbm_hz = -174.0;  // thermal noise PSD
  double rb_bandwidth_hz = 180e3;    // one PRB

  double p_c_mw() const;
  double p_s_mw() const;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);

// 128.1 + 37.6 log10(d_km); d given in metres.
double path_loss_cellular_db(double d_m);
// 148 + 40 log10(d_km); d given in metres.
double path_loss_d2d_db(double d_m);
double gain_from_path_loss(double pl_db);

// Thermal noise per resource block, identical for every channel.
double noise_per_rb_dbm(const PowerConfig& pw);
double noise_per_rb_mw(const PowerConfig& pw);

// Linear channel gains for every link class the SINR expressions need.
// Gains are frequency flat: computed once per link and reused across
// channels. Immutable after construction in normal use.
class GainTable {
 public:
  GainTable(int num_cues, int num_dcs, int sms_per_dc)
      : m_(num_cues), l_(num_dcs), n_(sms_per_dc),
        cue_enb_(static_cast<std::size_t>(num_cues), 0.0),
        sm_enb_(static_cast<std::size_t>(num_dcs) * sms_per_dc, 0.0),
        sm_dc_(static_cast<std::size_t>(num_dcs) * sms_per_dc * num_dcs, 0.0),
        cue_dc_(static_cast<std::size_t>(num_cues) * num_dcs, 0.0) {}

  int num_cues() const { return m_; }
  int num_dcs() const { return l_; }
  int sms_per_dc() const { return n_; }

  // CUE m -> eNB (desired cellular link)
  double cue_enb(int m) const { return cue_enb_[m]; }
  double& cue_enb(int m) { return cue_enb_[m]; }

  // SM n of DC l -> eNB (interference at the eNB)
  double sm_enb(int l, int n) const { return sm_enb_[idx_sm(l, n)]; }
  double& sm_enb(int l, int n) { return sm_enb_[idx_sm(l, n)]; }

  // SM n of DC k -> DC l (desired link when k == l, cross-DC otherwise)
  double sm_dc(int k, int n, int l) const { return sm_dc_[idx_sm(k, n) * l_ + l]; }
  double& sm_dc(int k, int n, int l) { return sm_dc_[idx_sm(k, n) * l_ + l]; }

  // CUE m -> DC l (interference at the DC)
  double cue_dc(int m, int l) const { return cue_dc_[static_cast<std::size_t>(m) * l_ + l]; }
  double& cue_dc(int m, int l) { return cue_dc_[static_cast<std::size_t>(m) * l_ + l]; }

 private:
  std::size_t idx_sm(int l, int n) const {
    return static_cast<std::size_t>(l) * n_ + n;
  }

  int m_, l_, n_;
  std::vector<double> cue_enb_, sm_enb_, sm_dc_, cue_dc_;
};

// Receiver-determined model mapping: links terminating at the eNB use the
// cellular model, links terminating at a DC use the D2D model. The CUE->DC
// link honours cfg.cue_dc_link_model. Distances are floored at
// cfg.min_link_distance_m.
GainTable build_gain_table(const Topology& topo, const PowerConfig& pw,
                           const ScenarioConfig& cfg);

// Debug dump: tx_kind,tx_idx,rx_kind,rx_idx,gain_linear. SM tx_idx is the
// flattened index l*N+n.
void write_gain_table(const GainTable& gains, std::ostream& os);

}  // namespace amisim
