#include "amisim/allocator.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace amisim {

AllocationMatrix::AllocationMatrix(int num_dcs, int sms_per_dc, int num_cues)
    : l_(num_dcs), n_(sms_per_dc), m_(num_cues),
      bits_(static_cast<std::size_t>(num_dcs) * sms_per_dc * num_cues, 0),
      channel_of_(static_cast<std::size_t>(num_dcs) * sms_per_dc, -1),
      occupant_(static_cast<std::size_t>(num_dcs) * num_cues, -1) {}

AllocationMatrix AllocationMatrix::from_bits(int num_dcs, int sms_per_dc,
                                             int num_cues,
                                             std::vector<std::uint8_t> bits) {
  AllocationMatrix a(num_dcs, sms_per_dc, num_cues);
  if (bits.size() != a.bits_.size())
    throw std::invalid_argument("from_bits: grid size mismatch");
  a.bits_ = std::move(bits);
  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n)
      for (int m = 0; m < num_cues; ++m)
        if (a.bits_[a.idx(l, n, m)]) {
          ++a.assigned_;
          a.channel_of_[a.sm_idx(l, n)] = m;
          a.occupant_[static_cast<std::size_t>(l) * num_cues + m] = n;
        }
  return a;
}

void AllocationMatrix::set(int l, int n, int m) {
  assert(!get(l, n, m));
  assert(channel_of(l, n) < 0 && occupant(l, m) < 0);
  bits_[idx(l, n, m)] = 1;
  channel_of_[sm_idx(l, n)] = m;
  occupant_[static_cast<std::size_t>(l) * m_ + m] = n;
  ++assigned_;
}

void AllocationMatrix::clear(int l, int n, int m) {
  assert(get(l, n, m));
  bits_[idx(l, n, m)] = 0;
  channel_of_[sm_idx(l, n)] = -1;
  occupant_[static_cast<std::size_t>(l) * m_ + m] = -1;
  --assigned_;
}

DegreeCounts compute_degree_counts(const ReuseMatrix& r) {
  DegreeCounts deg;
  deg.num_c.assign(r.num_cues(), 0);
  deg.num_sm.assign(r.num_dcs(), std::vector<int>(r.sms_per_dc(), 0));
  for (int l = 0; l < r.num_dcs(); ++l)
    for (int n = 0; n < r.sms_per_dc(); ++n)
      for (int m = 0; m < r.num_cues(); ++m)
        if (r.get(l, n, m)) {
          ++deg.num_c[m];
          ++deg.num_sm[l][n];
        }
  return deg;
}

double aggregate_sinr_cue(int m, const AllocationMatrix& a,
                          const GainTable& gains, const PowerConfig& pw) {
  const double signal = pw.p_c_mw() * gains.cue_enb(m);
  const double ps = pw.p_s_mw();
  double interference = 0.0;
  for (int l = 0; l < a.num_dcs(); ++l) {
    const int n = a.occupant(l, m);
    if (n >= 0) interference += ps * gains.sm_enb(l, n);
  }
  return signal / (noise_per_rb_mw(pw) + interference);
}

double aggregate_sinr_sm(int l, int n, int m, const AllocationMatrix& a,
                         const GainTable& gains, const PowerConfig& pw) {
  assert(a.get(l, n, m));
  const double ps = pw.p_s_mw();
  const double signal = ps * gains.sm_dc(l, n, l);
  double interference = pw.p_c_mw() * gains.cue_dc(m, l);
  for (int k = 0; k < a.num_dcs(); ++k) {
    if (k == l) continue;  // own DC holds only this SM on m
    const int x = a.occupant(k, m);
    if (x >= 0) interference += ps * gains.sm_dc(k, x, l);
  }
  return signal / (interference + noise_per_rb_mw(pw));
}

bool channel_qos_satisfied(int m, const AllocationMatrix& a,
                           const GainTable& gains, const PowerConfig& pw,
                           const QosProfile& qos) {
  if (aggregate_sinr_cue(m, a, gains, pw) < qos.gamma_c[m]) return false;
  for (int k = 0; k < a.num_dcs(); ++k) {
    const int x = a.occupant(k, m);
    if (x >= 0 && aggregate_sinr_sm(k, x, m, a, gains, pw) < qos.gamma_s)
      return false;
  }
  return true;
}

AllocationMatrix allocate(const ReuseMatrix& r, const GainTable& gains,
                          const PowerConfig& pw, const QosProfile& qos) {
  const int num_dcs = r.num_dcs();
  const int sms_per_dc = r.sms_per_dc();
  const int num_cues = r.num_cues();

  ReuseMatrix live = r;
  AllocationMatrix a(num_dcs, sms_per_dc, num_cues);
  DegreeCounts deg = compute_degree_counts(live);

  int unprocessed = num_dcs * sms_per_dc;
  std::vector<std::pair<int, int>> candidates;  // (num_c, m)
  std::vector<int> zeroed;                      // same-DC rows cleared on m

  while (unprocessed > 0) {
    // SM with the fewest live candidates; ties to the lowest (l, n).
    int sel_l = -1, sel_n = -1, sel_deg = kProcessed;
    for (int l = 0; l < num_dcs; ++l)
      for (int n = 0; n < sms_per_dc; ++n)
        if (deg.num_sm[l][n] < sel_deg) {
          sel_deg = deg.num_sm[l][n];
          sel_l = l;
          sel_n = n;
        }

    candidates.clear();
    for (int m = 0; m < num_cues; ++m)
      if (live.get(sel_l, sel_n, m)) candidates.emplace_back(deg.num_c[m], m);
    std::sort(candidates.begin(), candidates.end());

    bool committed = false;
    for (const auto& [edge_count, m] : candidates) {
      (void)edge_count;
      // Tentative assignment plus removal of channel m from same-DC rivals.
      a.set(sel_l, sel_n, m);
      zeroed.clear();
      for (int n2 = 0; n2 < sms_per_dc; ++n2)
        if (n2 != sel_n && live.get(sel_l, n2, m)) {
          live.set(sel_l, n2, m, false);
          zeroed.push_back(n2);
        }

      if (channel_qos_satisfied(m, a, gains, pw, qos)) {
        committed = true;
        break;
      }
      // Roll back and try the next candidate.
      a.clear(sel_l, sel_n, m);
      for (int n2 : zeroed) live.set(sel_l, n2, m, true);
    }

    deg.num_sm[sel_l][sel_n] = kProcessed;
    --unprocessed;

    if (committed) {
      // Keep "fewest edges" meaningful as the matrix shrinks.
      DegreeCounts fresh = compute_degree_counts(live);
      deg.num_c = std::move(fresh.num_c);
      for (int l = 0; l < num_dcs; ++l)
        for (int n = 0; n < sms_per_dc; ++n)
          if (deg.num_sm[l][n] != kProcessed)
            deg.num_sm[l][n] = fresh.num_sm[l][n];
    }
  }
  return a;
}

void write_allocation(const AllocationMatrix& a, std::ostream& os) {
  os << "l,n,m\n";
  for (int l = 0; l < a.num_dcs(); ++l)
    for (int n = 0; n < a.sms_per_dc(); ++n) {
      const int m = a.channel_of(l, n);
      if (m >= 0)
        os << l << ',' << n << ',' << m << '\n';
      else
        os << l << ',' << n << ",-\n";
    }
}

}  // namespace amisim
