#pragma once

#include <string>
#include <vector>

#include "amisim/allocator.hpp"

namespace amisim {

// From-scratch feasibility checker, written against the raw bit grid so it
// shares no bookkeeping with the allocator. Verifies, in order:
//   - per (DC, channel) at most one SM,
//   - per SM at most one channel,
//   - every assignment is a reuse candidate (a <= r elementwise),
//   - every CUE meets its SINR threshold under the full allocation,
//   - every assigned SM meets gamma_s under the full allocation.
// SINR comparisons allow rel_tol of slack for the different summation order
// used here. Returns a human-readable description per violation; empty means
// feasible.
std::vector<std::string> check_allocation(const AllocationMatrix& a,
                                          const ReuseMatrix& r,
                                          const GainTable& gains,
                                          const PowerConfig& pw,
                                          const QosProfile& qos,
                                          double rel_tol = 1e-9);

}  // namespace amisim
