#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "amisim/interference.hpp"

namespace amisim {

// Binary allocation matrix a[l][n][m] with occupancy indexes maintained on
// set()/clear(): per (DC, channel) at most one SM, per SM at most one
// channel. Violating set() calls abort in debug builds.
class AllocationMatrix {
 public:
  AllocationMatrix(int num_dcs, int sms_per_dc, int num_cues);

  // Rebuilds from a raw bit grid without enforcing the exclusivity
  // constraints (occupancy indexes are best-effort). Used by tests that need
  // deliberately invalid allocations and by I/O.
  static AllocationMatrix from_bits(int num_dcs, int sms_per_dc, int num_cues,
                                    std::vector<std::uint8_t> bits);

  int num_dcs() const { return l_; }
  int sms_per_dc() const { return n_; }
  int num_cues() const { return m_; }

  bool get(int l, int n, int m) const { return bits_[idx(l, n, m)] != 0; }
  void set(int l, int n, int m);
  void clear(int l, int n, int m);

  // Channel assigned to SM (l, n), -1 when unassigned.
  int channel_of(int l, int n) const { return channel_of_[sm_idx(l, n)]; }
  // SM of DC l occupying channel m, -1 when the channel is free in that DC.
  int occupant(int l, int m) const {
    return occupant_[static_cast<std::size_t>(l) * m_ + m];
  }

  int assigned_count() const { return assigned_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  std::size_t idx(int l, int n, int m) const {
    return (static_cast<std::size_t>(l) * n_ + n) * m_ + m;
  }
  std::size_t sm_idx(int l, int n) const {
    return static_cast<std::size_t>(l) * n_ + n;
  }

  int l_, n_, m_;
  int assigned_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<int> channel_of_;  // per SM
  std::vector<int> occupant_;    // per (DC, channel)
};

// Live edge counts of the reuse matrix: num_c per CUE, num_sm per SM.
// kProcessed in num_sm marks an SM the allocator is done with; finite
// entries equal the row/column sums of the live matrix.
inline constexpr int kProcessed = std::numeric_limits<int>::max();

struct DegreeCounts {
  std::vector<int> num_c;                // per CUE
  std::vector<std::vector<int>> num_sm;  // [l][n]
};

DegreeCounts compute_degree_counts(const ReuseMatrix& r);

// Aggregate SINR of CUE m at the eNB under allocation a. With no SM on the
// channel this reduces to the pure SNR.
double aggregate_sinr_cue(int m, const AllocationMatrix& a,
                          const GainTable& gains, const PowerConfig& pw);

// Aggregate SINR of SM (l, n) on channel m at its serving DC. The SM itself
// must be assigned to m; its own signal is excluded from the interference
// sum.
double aggregate_sinr_sm(int l, int n, int m, const AllocationMatrix& a,
                         const GainTable& gains, const PowerConfig& pw);

// True when every QoS constraint touching channel m holds under a: the CUE
// meets gamma_c[m] and every SM assigned on m meets gamma_s.
bool channel_qos_satisfied(int m, const AllocationMatrix& a,
                           const GainTable& gains, const PowerConfig& pw,
                           const QosProfile& qos);

// Fewest-edges-first greedy matching with aggregate SINR verification.
//
// Each round selects the unprocessed SM with the fewest live candidates
// (ties to the lowest (l, n)), walks its candidate CUEs in ascending
// edge-count order (ties to the lowest m), tentatively assigns, removes the
// channel from same-DC rivals, and verifies every QoS constraint on that
// channel. A failed verification rolls the tentative changes back and moves
// to the next candidate; a success commits and refreshes the edge counts
// from the shrunk matrix. Every SM is processed exactly once; an SM whose
// candidates all fail is simply left unassigned.
AllocationMatrix allocate(const ReuseMatrix& r, const GainTable& gains,
                          const PowerConfig& pw, const QosProfile& qos);

// Rows l,n,m per assignment; unassigned SMs listed as l,n,-.
void write_allocation(const AllocationMatrix& a, std::ostream& os);

}  // namespace amisim
