#include "amisim/validate.hpp"

#include <cstdarg>
#include <cstdio>

namespace amisim {

namespace {

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

}  // namespace

std::vector<std::string> check_allocation(const AllocationMatrix& a,
                                          const ReuseMatrix& r,
                                          const GainTable& gains,
                                          const PowerConfig& pw,
                                          const QosProfile& qos,
                                          double rel_tol) {
  std::vector<std::string> violations;
  const int num_dcs = a.num_dcs();
  const int sms_per_dc = a.sms_per_dc();
  const int num_cues = a.num_cues();
  const double pc = pw.p_c_mw();
  const double ps = pw.p_s_mw();
  const double w = noise_per_rb_mw(pw);

  auto bit = [&](int l, int n, int m) { return a.get(l, n, m); };

  // DC exclusivity: one SM per (DC, channel).
  for (int l = 0; l < num_dcs; ++l)
    for (int m = 0; m < num_cues; ++m) {
      int count = 0;
      for (int n = 0; n < sms_per_dc; ++n) count += bit(l, n, m);
      if (count > 1)
        violations.push_back(fmt("dc %d channel %d carries %d SMs", l, m, count));
    }

  // One channel per SM.
  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n) {
      int count = 0;
      for (int m = 0; m < num_cues; ++m) count += bit(l, n, m);
      if (count > 1)
        violations.push_back(fmt("sm (%d,%d) holds %d channels", l, n, count));
    }

  // Support: assignments only where the reuse matrix permits.
  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n)
      for (int m = 0; m < num_cues; ++m)
        if (bit(l, n, m) && !r.get(l, n, m))
          violations.push_back(fmt("sm (%d,%d) assigned non-candidate channel %d",
                                   l, n, m));

  // CUE SINR per channel, direct sums over the grid.
  for (int m = 0; m < num_cues; ++m) {
    double interference = 0.0;
    for (int l = 0; l < num_dcs; ++l)
      for (int n = 0; n < sms_per_dc; ++n)
        if (bit(l, n, m)) interference += ps * gains.sm_enb(l, n);
    const double sinr = pc * gains.cue_enb(m) / (w + interference);
    if (sinr < qos.gamma_c[m] * (1.0 - rel_tol))
      violations.push_back(fmt("cue %d sinr %.6g below threshold %.6g", m, sinr,
                               qos.gamma_c[m]));
  }

  // SM SINR for every assignment, excluding the SM's own signal.
  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n)
      for (int m = 0; m < num_cues; ++m) {
        if (!bit(l, n, m)) continue;
        double interference = pc * gains.cue_dc(m, l);
        for (int k = 0; k < num_dcs; ++k)
          for (int x = 0; x < sms_per_dc; ++x)
            if (!(k == l && x == n) && bit(k, x, m))
              interference += ps * gains.sm_dc(k, x, l);
        const double sinr = ps * gains.sm_dc(l, n, l) / (interference + w);
        if (sinr < qos.gamma_s * (1.0 - rel_tol))
          violations.push_back(fmt("sm (%d,%d) on channel %d sinr %.6g below %.6g",
                                   l, n, m, sinr, qos.gamma_s));
      }

  return violations;
}

}  // namespace amisim
