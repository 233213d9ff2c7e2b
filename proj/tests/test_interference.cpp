#include <doctest.h>

#include <cmath>
#include <sstream>

#include "amisim/allocator.hpp"
#include "amisim/harness.hpp"
#include "amisim/interference.hpp"

using namespace amisim;

namespace {

GainTable flat_table(int num_cues, int num_dcs, int sms_per_dc, double value) {
  GainTable g(num_cues, num_dcs, sms_per_dc);
  for (int m = 0; m < num_cues; ++m) {
    g.cue_enb(m) = value;
    for (int l = 0; l < num_dcs; ++l) g.cue_dc(m, l) = value;
  }
  for (int l = 0; l < num_dcs; ++l)
    for (int n = 0; n < sms_per_dc; ++n) {
      g.sm_enb(l, n) = value;
      for (int k = 0; k < num_dcs; ++k) g.sm_dc(l, n, k) = value;
    }
  return g;
}

}  // namespace

TEST_CASE("CUE budget limiting cases") {
  const PowerConfig pw;
  const double w = noise_per_rb_mw(pw);

  GainTable g = flat_table(1, 1, 1, 1e-9);
  QosProfile qos{{1e12}, 1.0};  // absurd threshold: no interference tolerated
  auto budgets = compute_cue_budgets(g, pw, qos);
  CHECK(budgets[0] == doctest::Approx(-w).epsilon(1e-6));
  CHECK(budgets[0] < 0.0);

  // P_c * h = 2 * gamma * W  =>  budget = W exactly.
  qos.gamma_c[0] = 10.0;
  g.cue_enb(0) = 2.0 * qos.gamma_c[0] * w / pw.p_c_mw();
  budgets = compute_cue_budgets(g, pw, qos);
  CHECK(budgets[0] == doctest::Approx(w).epsilon(1e-12));
}

TEST_CASE("CUE budget plug-in evaluation") {
  const PowerConfig pw;  // 24 dBm, -174 dBm/Hz, 180 kHz
  GainTable g = flat_table(1, 1, 1, 0.0);
  g.cue_enb(0) = 1.5488166189124858e-13;  // cellular path loss at 1 km
  const QosProfile qos{{10.0}, 1.0};
  const auto budgets = compute_cue_budgets(g, pw, qos);
  CHECK(budgets[0] == doctest::Approx(3.1738585429465214e-12).epsilon(1e-9));
}

TEST_CASE("SM budget boundary, plug-in and linearity") {
  PowerConfig pw;
  const double w = noise_per_rb_mw(pw);

  // gamma_s = 1 and P_s * h = W  =>  budget = 0.
  GainTable g = flat_table(1, 1, 1, 0.0);
  g.sm_dc(0, 0, 0) = w / pw.p_s_mw();
  QosProfile qos{{1.0}, 1.0};
  auto budgets = compute_sm_budgets(g, pw, qos);
  CHECK(budgets[0][0] == doctest::Approx(0.0).epsilon(1e-15));

  // SM 1 m from its DC, 24 dBm, gamma_s = 5 dB.
  g.sm_dc(0, 0, 0) = 1.584893192461114e-3;
  qos.gamma_s = db_to_linear(5.0);
  budgets = compute_sm_budgets(g, pw, qos);
  CHECK(budgets[0][0] == doctest::Approx(0.12589254117870013).epsilon(1e-9));

  // Doubling P_s doubles the desired-signal term exactly.
  const double first_term = budgets[0][0] + w;
  pw.p_s_dbm += 10.0 * std::log10(2.0);
  const auto doubled = compute_sm_budgets(g, pw, qos);
  CHECK(doubled[0][0] + noise_per_rb_mw(pw) ==
        doctest::Approx(2.0 * first_term).epsilon(1e-12));
}

TEST_CASE("reuse matrix: negative budget blocks the whole column") {
  const PowerConfig pw;
  GainTable g = flat_table(2, 1, 3, 1e-9);
  for (int m = 0; m < 2; ++m) g.cue_enb(m) = 1e-7;  // roomy eNB budgets
  for (int n = 0; n < 3; ++n) g.sm_dc(0, n, 0) = 1e-3;
  QosProfile qos{{1e12, 1.0}, 1.0};  // CUE 0 infeasible alone, CUE 1 easy
  const auto budgets = compute_budgets(g, pw, qos);
  REQUIRE(budgets.i_max_enb_mw[0] < 0.0);
  const ReuseMatrix r = compute_reuse_matrix(g, pw, budgets);
  for (int n = 0; n < 3; ++n) {
    CHECK_FALSE(r.get(0, n, 0));
    CHECK(r.get(0, n, 1));
  }
  CHECK(r.col_sum(0) == 0);
  CHECK(r.col_sum(1) == 3);
  CHECK(r.row_sum(0, 0) == 1);
  CHECK(r.ones() == 3);
}

TEST_CASE("reuse matrix: zero-interference limit is all ones") {
  const PowerConfig pw;
  GainTable g = flat_table(2, 2, 2, 1e-30);  // effectively isolated links
  for (int l = 0; l < 2; ++l)
    for (int n = 0; n < 2; ++n) g.sm_dc(l, n, l) = 1e-3;
  for (int m = 0; m < 2; ++m) g.cue_enb(m) = 1e-7;
  const QosProfile qos{{2.0, 2.0}, 2.0};
  const auto budgets = compute_budgets(g, pw, qos);
  const ReuseMatrix r = compute_reuse_matrix(g, pw, budgets);
  CHECK(r.ones() == 2 * 2 * 2);
}

TEST_CASE("hand-placed single-CUE instance") {
  // eNB at origin, CUE at (300,0) with a 0 dB requirement, DC at (350,0),
  // SM0 at (360,0), SM1 at (350,49.9). SM1's desired link is too weak to
  // absorb the CUE's interference at the DC; SM0's is fine.
  Topology topo;
  topo.enb_pos = {0, 0};
  topo.cue_pos = {{300.0, 0.0}};
  topo.dc_pos = {{350.0, 0.0}};
  topo.sm_pos = {{{360.0, 0.0}, {350.0, 49.9}}};
  const PowerConfig pw;
  const GainTable g = build_gain_table(topo, pw, ScenarioConfig{});
  const QosProfile qos{{1.0}, db_to_linear(5.0)};

  const auto budgets = compute_budgets(g, pw, qos);
  CHECK(budgets.i_max_enb_mw[0] ==
        doctest::Approx(3.596976250365386e-09).epsilon(1e-9));
  CHECK(budgets.i_max_sm_mw[0][0] ==
        doctest::Approx(1.2589253401348767e-05).epsilon(1e-9));
  CHECK(budgets.i_max_sm_mw[0][1] ==
        doctest::Approx(2.030404139493802e-08).epsilon(1e-9));

  const ReuseMatrix r = compute_reuse_matrix(g, pw, budgets);
  CHECK(r.get(0, 0, 0));
  CHECK_FALSE(r.get(0, 1, 0));
}

TEST_CASE("reuse matrix dump lists one triplet per candidate") {
  ReuseMatrix r(2, 1, 2);
  r.set(0, 0, 1, true);
  r.set(1, 0, 0, true);
  std::ostringstream os;
  write_reuse_matrix(r, os);
  CHECK(os.str() == "l,n,m\n0,0,1\n1,0,0\n");
}

TEST_CASE("every candidate is solo-feasible across random drops") {
  SimConfig cfg;
  cfg.scenario.num_cues = 12;
  cfg.scenario.num_dcs = 3;
  cfg.scenario.sms_per_dc = 6;
  cfg.scenario.rng_seed = 314;
  long checked = 0;
  for (std::uint64_t drop = 0; drop < 25; ++drop) {
    const DropArtifacts art = run_drop_artifacts(cfg, drop);
    for (int l = 0; l < 3; ++l)
      for (int n = 0; n < 6; ++n)
        for (int m = 0; m < 12; ++m) {
          if (!art.reuse.get(l, n, m)) continue;
          AllocationMatrix a(3, 6, 12);
          a.set(l, n, m);
          const double cue = aggregate_sinr_cue(m, a, art.gains, cfg.power);
          const double sm = aggregate_sinr_sm(l, n, m, a, art.gains, cfg.power);
          CHECK(cue >= art.qos.gamma_c[m] * (1.0 - 1e-9));
          CHECK(sm >= art.qos.gamma_s * (1.0 - 1e-9));
          ++checked;
        }
  }
  CHECK(checked > 500);  // the drops actually produced candidates
}

TEST_CASE("raising a CUE threshold never adds candidates to its column") {
  SimConfig cfg;
  cfg.scenario.num_cues = 8;
  cfg.scenario.num_dcs = 2;
  cfg.scenario.sms_per_dc = 5;
  cfg.scenario.rng_seed = 2718;
  const DropArtifacts art = run_drop_artifacts(cfg, 0);

  for (int m = 0; m < 8; ++m) {
    QosProfile harder = art.qos;
    harder.gamma_c[m] *= 4.0;
    const ReuseMatrix r2 = compute_reuse_matrix(
        art.gains, cfg.power, compute_budgets(art.gains, cfg.power, harder));
    for (int l = 0; l < 2; ++l)
      for (int n = 0; n < 5; ++n) {
        if (r2.get(l, n, m)) CHECK(art.reuse.get(l, n, m));
        for (int other = 0; other < 8; ++other)
          if (other != m) CHECK(r2.get(l, n, other) == art.reuse.get(l, n, other));
      }
  }
}

TEST_CASE("weakening a desired link never adds candidates to that row") {
  // Same geometry, desired gain scaled down as if the SM moved outward with
  // every other link pinned.
  SimConfig cfg;
  cfg.scenario.num_cues = 8;
  cfg.scenario.num_dcs = 2;
  cfg.scenario.sms_per_dc = 5;
  cfg.scenario.rng_seed = 161803;
  const DropArtifacts art = run_drop_artifacts(cfg, 0);

  GainTable weaker = art.gains;
  weaker.sm_dc(0, 2, 0) *= 0.25;
  const ReuseMatrix r2 = compute_reuse_matrix(
      weaker, cfg.power, compute_budgets(weaker, cfg.power, art.qos));
  for (int m = 0; m < 8; ++m)
    if (r2.get(0, 2, m)) CHECK(art.reuse.get(0, 2, m));
}
