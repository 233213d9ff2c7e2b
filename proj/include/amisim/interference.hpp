#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "amisim/channel.hpp"

namespace amisim {

// Minimum SINR thresholds in linear units.
struct QosProfile {
  std::vector<double> gamma_c;  // per CUE
  double gamma_s = 1.0;         // common to all SMs
};

// Maximum tolerable aggregate interference at each receiver consistent with
// its SINR threshold. Entries may be negative: the desired link then cannot
// meet its threshold even in noise alone, so that receiver admits no reuse
// partner. Negative values are deliberately not clamped.
struct InterferenceBudget {
  std::vector<double> i_max_enb_mw;               // per CUE
  std::vector<std::vector<double>> i_max_sm_mw;   // [l][n]
};

// P_c * h_cue_enb / gamma_c - W, per CUE.
std::vector<double> compute_cue_budgets(const GainTable& gains,
                                        const PowerConfig& pw,
                                        const QosProfile& qos);

// P_s * h_desired / gamma_s - W, per SM.
std::vector<std::vector<double>> compute_sm_budgets(const GainTable& gains,
                                                    const PowerConfig& pw,
                                                    const QosProfile& qos);

InterferenceBudget compute_budgets(const GainTable& gains, const PowerConfig& pw,
                                   const QosProfile& qos);

// Binary reuse-candidate matrix indexed (l, n, m), flattened (N*L) x M.
class ReuseMatrix {
 public:
  ReuseMatrix(int num_dcs, int sms_per_dc, int num_cues)
      : l_(num_dcs), n_(sms_per_dc), m_(num_cues),
        bits_(static_cast<std::size_t>(num_dcs) * sms_per_dc * num_cues, 0) {}

  int num_dcs() const { return l_; }
  int sms_per_dc() const { return n_; }
  int num_cues() const { return m_; }

  bool get(int l, int n, int m) const { return bits_[idx(l, n, m)] != 0; }
  void set(int l, int n, int m, bool v) { bits_[idx(l, n, m)] = v ? 1 : 0; }

  // Candidate CUEs of one SM.
  int row_sum(int l, int n) const;
  // SMs that may reuse CUE m.
  int col_sum(int m) const;
  long ones() const;

 private:
  std::size_t idx(int l, int n, int m) const {
    return (static_cast<std::size_t>(l) * n_ + n) * m_ + m;
  }

  int l_, n_, m_;
  std::vector<std::uint8_t> bits_;
};

// Pairwise feasibility: r = 1 iff the SM's interference at the eNB fits the
// CUE budget and the CUE's interference at the DC fits the SM budget. No
// aggregate effects are considered at this stage.
ReuseMatrix compute_reuse_matrix(const GainTable& gains, const PowerConfig& pw,
                                 const InterferenceBudget& budgets);

// Triplet rows l,n,m for each 1-entry.
void write_reuse_matrix(const ReuseMatrix& r, std::ostream& os);

}  // namespace amisim
