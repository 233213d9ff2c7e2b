#include <doctest.h>

#include <array>
#include <optional>

#include "amisim/harness.hpp"
#include "amisim/oracle.hpp"
#include "amisim/rng.hpp"
#include "amisim/validate.hpp"

using namespace amisim;

namespace {

struct Instance {
  GainTable gains{2, 2, 2};
  QosProfile qos{{db_to_linear(7.0), db_to_linear(12.3)}, 2.0};
  PowerConfig pw;
  ReuseMatrix reuse{2, 2, 2};
};

// Channel 0 tolerates both cross-DC SMs at the eNB, channel 1 only one.
Instance crafted_instance() {
  Instance inst;
  for (int m = 0; m < 2; ++m) inst.gains.cue_enb(m) = 1e-9;
  for (int l = 0; l < 2; ++l)
    for (int n = 0; n < 2; ++n) {
      inst.gains.sm_enb(l, n) = 4e-11;
      for (int k = 0; k < 2; ++k)
        inst.gains.sm_dc(l, n, k) = (l == k) ? 1e-3 : 1e-12;
    }
  for (int m = 0; m < 2; ++m)
    for (int l = 0; l < 2; ++l) inst.gains.cue_dc(m, l) = 1e-12;
  inst.reuse = compute_reuse_matrix(inst.gains, inst.pw,
                                    compute_budgets(inst.gains, inst.pw, inst.qos));
  return inst;
}

// Test-local brute force over every per-SM choice vector, independent of the
// solver's search. Checks exclusivity directly and QoS through the shared
// predicate on a freshly built allocation.
int enumerate_optimum(const Instance& inst) {
  const int num_sms = 4;  // (0,0),(0,1),(1,0),(1,1)
  const std::array<std::pair<int, int>, 4> sms{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  int best = 0;
  std::array<int, 4> choice{};  // 0,1 = channel; 2 = none
  for (choice[0] = 0; choice[0] < 3; ++choice[0])
    for (choice[1] = 0; choice[1] < 3; ++choice[1])
      for (choice[2] = 0; choice[2] < 3; ++choice[2])
        for (choice[3] = 0; choice[3] < 3; ++choice[3]) {
          AllocationMatrix a(2, 2, 2);
          bool ok = true;
          int count = 0;
          for (int i = 0; i < num_sms && ok; ++i) {
            if (choice[i] == 2) continue;
            const auto [l, n] = sms[i];
            if (!inst.reuse.get(l, n, choice[i]) ||
                a.occupant(l, choice[i]) >= 0) {
              ok = false;
              break;
            }
            a.set(l, n, choice[i]);
            ++count;
          }
          if (!ok) continue;
          for (int m = 0; m < 2 && ok; ++m)
            ok = channel_qos_satisfied(m, a, inst.gains, inst.pw, inst.qos);
          if (ok && count > best) best = count;
        }
  return best;
}

}  // namespace

TEST_CASE("empty candidate matrix solves to zero") {
  Instance inst = crafted_instance();
  const ReuseMatrix empty(2, 2, 2);
  const OracleResult res = solve_exact(empty, inst.gains, inst.pw, inst.qos);
  CHECK(res.accepted == 0);
  CHECK(res.allocation.assigned_count() == 0);
}

TEST_CASE("single feasible pair solves to one") {
  Instance inst = crafted_instance();
  ReuseMatrix r(2, 2, 2);
  r.set(0, 0, 0, true);
  const OracleResult res = solve_exact(r, inst.gains, inst.pw, inst.qos);
  CHECK(res.accepted == 1);
  CHECK(res.allocation.get(0, 0, 0));
}

TEST_CASE("crafted instance: exhaustive enumeration agrees") {
  const Instance inst = crafted_instance();
  REQUIRE(inst.reuse.ones() == 8);

  // The discriminating structure: channel 0 carries two cross-DC SMs,
  // channel 1 refuses the second one.
  {
    AllocationMatrix two(2, 2, 2);
    two.set(0, 0, 0);
    two.set(1, 0, 0);
    CHECK(channel_qos_satisfied(0, two, inst.gains, inst.pw, inst.qos));
  }
  {
    AllocationMatrix two(2, 2, 2);
    two.set(0, 0, 1);
    two.set(1, 0, 1);
    CHECK_FALSE(channel_qos_satisfied(1, two, inst.gains, inst.pw, inst.qos));
  }

  const int brute = enumerate_optimum(inst);
  CHECK(brute == 3);

  const OracleResult res = solve_exact(inst.reuse, inst.gains, inst.pw, inst.qos);
  CHECK(res.accepted == brute);
  // Lexicographically smallest optimum.
  CHECK(res.allocation.channel_of(0, 0) == 0);
  CHECK(res.allocation.channel_of(0, 1) == 1);
  CHECK(res.allocation.channel_of(1, 0) == 0);
  CHECK(res.allocation.channel_of(1, 1) == -1);
  CHECK(check_allocation(res.allocation, inst.reuse, inst.gains, inst.pw,
                         inst.qos)
            .empty());
}

TEST_CASE("size and budget limits raise explicit errors") {
  Instance inst = crafted_instance();
  OracleLimits tiny;
  tiny.max_sms = 3;  // instance has 4 SMs
  CHECK_THROWS_AS(solve_exact(inst.reuse, inst.gains, inst.pw, inst.qos, tiny),
                  OracleSizeError);

  OracleLimits narrow;
  narrow.max_cues = 1;
  CHECK_THROWS_AS(
      solve_exact(inst.reuse, inst.gains, inst.pw, inst.qos, narrow),
      OracleSizeError);

  OracleLimits starved;
  starved.node_budget = 3;
  CHECK_THROWS_AS(
      solve_exact(inst.reuse, inst.gains, inst.pw, inst.qos, starved),
      OracleBudgetError);
}

TEST_CASE("zero cross-interference reduces to DC-exclusive matching") {
  PowerConfig pw;
  const QosProfile qos{{1.0, 1.0}, 1.0};

  // One DC, three SMs, two channels: capacity is min(N, M) = 2.
  GainTable g(2, 1, 3);
  for (int m = 0; m < 2; ++m) g.cue_enb(m) = 1e-7;
  for (int n = 0; n < 3; ++n) g.sm_dc(0, n, 0) = 1e-3;
  ReuseMatrix r(1, 3, 2);
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 2; ++m) r.set(0, n, m, true);
  CHECK(solve_exact(r, g, pw, qos).accepted == 2);

  // Two DCs, one SM each, one channel: both share it freely.
  GainTable g2(1, 2, 1);
  g2.cue_enb(0) = 1e-7;
  for (int l = 0; l < 2; ++l) g2.sm_dc(l, 0, l) = 1e-3;
  ReuseMatrix r2(2, 1, 1);
  r2.set(0, 0, 0, true);
  r2.set(1, 0, 0, true);
  CHECK(solve_exact(r2, g2, pw, qos).accepted == 2);
}

TEST_CASE("greedy never beats the exact optimum") {
  int optimum_positive = 0;
  for (std::uint64_t i = 0; i < 80; ++i) {
    const SimConfig cfg = make_small_instance_config(mix_seed(11, i, 5), 6, 5);
    const DropArtifacts art = run_drop_artifacts(cfg, 0);
    const OracleResult exact =
        solve_exact(art.reuse, art.gains, cfg.power, art.qos);
    CHECK(art.allocation.assigned_count() <= exact.accepted);
    CHECK(check_allocation(exact.allocation, art.reuse, art.gains, cfg.power,
                           art.qos)
              .empty());
    if (exact.accepted > 0) ++optimum_positive;
  }
  CHECK(optimum_positive > 30);  // the instances are not all degenerate
}
