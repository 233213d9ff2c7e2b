#include "amisim/oracle.hpp"

#include <string>
#include <vector>

namespace amisim {

namespace {

struct SmNode {
  int l, n;
  std::vector<int> candidates;  // ascending channel index
};

struct Search {
  const GainTable& gains;
  const PowerConfig& pw;
  const QosProfile& qos;
  const std::vector<SmNode>& sms;
  std::int64_t node_budget;

  AllocationMatrix current;
  AllocationMatrix best;
  int best_count = 0;
  std::int64_t nodes = 0;

  void dfs(std::size_t idx, int accepted) {
    if (++nodes > node_budget)
      throw OracleBudgetError("oracle node budget exhausted (" +
                              std::to_string(node_budget) + " nodes)");
    if (idx == sms.size()) {
      if (accepted > best_count) {
        best_count = accepted;
        best = current;
      }
      return;
    }
    // Even accepting every remaining SM cannot beat the incumbent.
    if (accepted + static_cast<int>(sms.size() - idx) <= best_count) return;

    const SmNode& sm = sms[idx];
    for (int m : sm.candidates) {
      if (current.occupant(sm.l, m) >= 0) continue;  // DC exclusivity
      current.set(sm.l, sm.n, m);
      if (channel_qos_satisfied(m, current, gains, pw, qos))
        dfs(idx + 1, accepted + 1);
      current.clear(sm.l, sm.n, m);
    }
    dfs(idx + 1, accepted);  // leave this SM unassigned
  }
};

}  // namespace

OracleResult solve_exact(const ReuseMatrix& r, const GainTable& gains,
                         const PowerConfig& pw, const QosProfile& qos,
                         const OracleLimits& lim) {
  const int total_sms = r.num_dcs() * r.sms_per_dc();
  if (total_sms > lim.max_sms || r.num_cues() > lim.max_cues)
    throw OracleSizeError("instance too large for exact search: " +
                          std::to_string(total_sms) + " SMs x " +
                          std::to_string(r.num_cues()) + " CUEs (limits " +
                          std::to_string(lim.max_sms) + "/" +
                          std::to_string(lim.max_cues) + ")");

  std::vector<SmNode> sms;
  sms.reserve(total_sms);
  for (int l = 0; l < r.num_dcs(); ++l)
    for (int n = 0; n < r.sms_per_dc(); ++n) {
      SmNode node{l, n, {}};
      for (int m = 0; m < r.num_cues(); ++m)
        if (r.get(l, n, m)) node.candidates.push_back(m);
      sms.push_back(std::move(node));
    }

  Search search{gains, pw, qos, sms, lim.node_budget,
                AllocationMatrix(r.num_dcs(), r.sms_per_dc(), r.num_cues()),
                AllocationMatrix(r.num_dcs(), r.sms_per_dc(), r.num_cues())};
  search.dfs(0, 0);
  return {search.best, search.best_count};
}

}  // namespace amisim
