#include "amisim/interference.hpp"

#include <ostream>

namespace amisim {

std::vector<double> compute_cue_budgets(const GainTable& gains,
                                        const PowerConfig& pw,
                                        const QosProfile& qos) {
  const double pc = pw.p_c_mw();
  const double w = noise_per_rb_mw(pw);
  std::vector<double> out(gains.num_cues());
  for (int m = 0; m < gains.num_cues(); ++m)
    out[m] = pc * gains.cue_enb(m) / qos.gamma_c[m] - w;
  return out;
}

std::vector<std::vector<double>> compute_sm_budgets(const GainTable& gains,
                                                    const PowerConfig& pw,
                                                    const QosProfile& qos) {
  const double ps = pw.p_s_mw();
  const double w = noise_per_rb_mw(pw);
  std::vector<std::vector<double>> out(gains.num_dcs());
  for (int l = 0; l < gains.num_dcs(); ++l) {
    out[l].resize(gains.sms_per_dc());
    for (int n = 0; n < gains.sms_per_dc(); ++n)
      out[l][n] = ps * gains.sm_dc(l, n, l) / qos.gamma_s - w;
  }
  return out;
}

InterferenceBudget compute_budgets(const GainTable& gains, const PowerConfig& pw,
                                   const QosProfile& qos) {
  return {compute_cue_budgets(gains, pw, qos),
          compute_sm_budgets(gains, pw, qos)};
}

int ReuseMatrix::row_sum(int l, int n) const {
  int s = 0;
  for (int m = 0; m < m_; ++m) s += bits_[idx(l, n, m)];
  return s;
}

int ReuseMatrix::col_sum(int m) const {
  int s = 0;
  for (int l = 0; l < l_; ++l)
    for (int n = 0; n < n_; ++n) s += bits_[idx(l, n, m)];
  return s;
}

long ReuseMatrix::ones() const {
  long s = 0;
  for (auto b : bits_) s += b;
  return s;
}

ReuseMatrix compute_reuse_matrix(const GainTable& gains, const PowerConfig& pw,
                                 const InterferenceBudget& budgets) {
  const double pc = pw.p_c_mw();
  const double ps = pw.p_s_mw();
  ReuseMatrix r(gains.num_dcs(), gains.sms_per_dc(), gains.num_cues());
  for (int l = 0; l < gains.num_dcs(); ++l) {
    for (int n = 0; n < gains.sms_per_dc(); ++n) {
      const double sm_budget = budgets.i_max_sm_mw[l][n];
      for (int m = 0; m < gains.num_cues(); ++m) {
        const bool enb_ok = ps * gains.sm_enb(l, n) <= budgets.i_max_enb_mw[m];
        const bool dc_ok = pc * gains.cue_dc(m, l) <= sm_budget;
        r.set(l, n, m, enb_ok && dc_ok);
      }
    }
  }
  return r;
}

void write_reuse_matrix(const ReuseMatrix& r, std::ostream& os) {
  os << "l,n,m\n";
  for (int l = 0; l < r.num_dcs(); ++l)
    for (int n = 0; n < r.sms_per_dc(); ++n)
      for (int m = 0; m < r.num_cues(); ++m)
        if (r.get(l, n, m)) os << l << ',' << n << ',' << m << '\n';
}

}  // namespace amisim
