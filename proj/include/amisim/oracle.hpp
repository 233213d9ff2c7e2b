#pragma once

#include <cstdint>
#include <stdexcept>

#include "amisim/allocator.hpp"

namespace amisim {

struct OracleLimits {
  int max_sms = 8;
  int max_cues = 6;
  std::int64_t node_budget = 10'000'000;
};

class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  AllocationMatrix allocation;
  int accepted = 0;
};

// Exact reference solver: maximizes the number of accepted SMs over all
// allocations that satisfy the exclusivity constraints and the aggregate
// SINR constraints, by depth-first search over per-SM choice sets (each SM
// takes one of its candidate CUEs or none). Interference only grows as
// assignments are added under fixed powers, so a QoS violation at a partial
// node is a sound prune. Ties between optima resolve to the assignment
// vector that is lexicographically smallest with candidate CUEs ordered
// before "none".
//
// Throws OracleSizeError when the instance exceeds lim, OracleBudgetError
// when the node budget runs out. Intended for desk-size instances only.
OracleResult solve_exact(const ReuseMatrix& r, const GainTable& gains,
                         const PowerConfig& pw, const QosProfile& qos,
                         const OracleLimits& lim = {});

}  // namespace amisim
