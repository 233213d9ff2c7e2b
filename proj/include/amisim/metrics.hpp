#pragma once

#include <span>
#include <vector>

#include "amisim/allocator.hpp"

namespace amisim {

struct SmSinrEntry {
  int dc = 0;
  int sm = 0;
  int channel = 0;
  double sinr_db = 0.0;
};

struct DropMetrics {
  double access_rate = 0.0;
  double throughput_gain_bps_hz = 0.0;
  int accepted_sms = 0;
  std::vector<double> per_cue_sinr_db;      // all M channels
  std::vector<SmSinrEntry> per_sm_sinr_db;  // assigned SMs only
};

// Accepted SMs over all SMs; 0 by convention when there are no SMs.
double access_rate(const AllocationMatrix& a);

// Net spectral-efficiency change from reuse, summed over channels
// (bit/s/Hz): post-reuse CUE rates plus assigned-SM rates minus the
// interference-free CUE rates. Channels nobody reuses contribute exactly 0.
double throughput_gain(const AllocationMatrix& a, const GainTable& gains,
                       const PowerConfig& pw);

// Contribution of a single channel to the throughput gain.
double throughput_gain_channel(int m, const AllocationMatrix& a,
                               const GainTable& gains, const PowerConfig& pw);

DropMetrics compute_drop_metrics(const AllocationMatrix& a,
                                 const GainTable& gains, const PowerConfig& pw);

struct Summary {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean; 0 for fewer than 2 samples
};

Summary summarize(std::span<const double> values);

}  // namespace amisim
