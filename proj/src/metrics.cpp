#include "amisim/metrics.hpp"

#include <cmath>

namespace amisim {

double access_rate(const AllocationMatrix& a) {
  const int total = a.num_dcs() * a.sms_per_dc();
  return total == 0 ? 0.0 : static_cast<double>(a.assigned_count()) / total;
}

double throughput_gain(const AllocationMatrix& a, const GainTable& gains,
                       const PowerConfig& pw) {
  const AllocationMatrix empty(a.num_dcs(), a.sms_per_dc(), a.num_cues());

  double cue_rates = 0.0;
  for (int m = 0; m < a.num_cues(); ++m)
    cue_rates += std::log2(1.0 + aggregate_sinr_cue(m, a, gains, pw));

  double sm_rates = 0.0;
  for (int l = 0; l < a.num_dcs(); ++l)
    for (int n = 0; n < a.sms_per_dc(); ++n) {
      const int m = a.channel_of(l, n);
      if (m >= 0)
        sm_rates += std::log2(1.0 + aggregate_sinr_sm(l, n, m, a, gains, pw));
    }

  double baseline = 0.0;
  for (int m = 0; m < a.num_cues(); ++m)
    baseline += std::log2(1.0 + aggregate_sinr_cue(m, empty, gains, pw));

  return cue_rates + sm_rates - baseline;
}

double throughput_gain_channel(int m, const AllocationMatrix& a,
                               const GainTable& gains, const PowerConfig& pw) {
  const AllocationMatrix empty(a.num_dcs(), a.sms_per_dc(), a.num_cues());
  double tg = std::log2(1.0 + aggregate_sinr_cue(m, a, gains, pw)) -
              std::log2(1.0 + aggregate_sinr_cue(m, empty, gains, pw));
  for (int l = 0; l < a.num_dcs(); ++l) {
    const int n = a.occupant(l, m);
    if (n >= 0)
      tg += std::log2(1.0 + aggregate_sinr_sm(l, n, m, a, gains, pw));
  }
  return tg;
}

DropMetrics compute_drop_metrics(const AllocationMatrix& a,
                                 const GainTable& gains, const PowerConfig& pw) {
  DropMetrics out;
  out.accepted_sms = a.assigned_count();
  out.access_rate = access_rate(a);
  out.throughput_gain_bps_hz = throughput_gain(a, gains, pw);

  out.per_cue_sinr_db.resize(a.num_cues());
  for (int m = 0; m < a.num_cues(); ++m)
    out.per_cue_sinr_db[m] =
        10.0 * std::log10(aggregate_sinr_cue(m, a, gains, pw));

  for (int l = 0; l < a.num_dcs(); ++l)
    for (int n = 0; n < a.sms_per_dc(); ++n) {
      const int m = a.channel_of(l, n);
      if (m >= 0)
        out.per_sm_sinr_db.push_back(
            {l, n, m,
             10.0 * std::log10(aggregate_sinr_sm(l, n, m, a, gains, pw))});
    }
  return out;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  const std::size_t n = values.size();
  if (n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  if (n < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.se = std::sqrt(ss / static_cast<double>(n - 1)) /
         std::sqrt(static_cast<double>(n));
  return s;
}

}  // namespace amisim
