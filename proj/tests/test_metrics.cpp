#include <doctest.h>

#include <cmath>

#include "amisim/harness.hpp"
#include "amisim/metrics.hpp"

using namespace amisim;

TEST_CASE("access rate endpoints and arithmetic") {
  AllocationMatrix empty(4, 50, 50);
  CHECK(access_rate(empty) == 0.0);

  AllocationMatrix none(1, 0, 3);  // no SMs at all
  CHECK(access_rate(none) == 0.0);

  AllocationMatrix full(2, 2, 4);
  full.set(0, 0, 0);
  full.set(0, 1, 1);
  full.set(1, 0, 2);
  full.set(1, 1, 3);
  CHECK(access_rate(full) == 1.0);

  AllocationMatrix part(5, 10, 10);  // 45 of 50 assigned
  for (int l = 0; l < 5; ++l)
    for (int n = 0; n < 9; ++n) part.set(l, n, n);
  CHECK(access_rate(part) == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("throughput gain vanishes exactly without reuse") {
  SimConfig cfg;
  cfg.scenario.rng_seed = 4242;
  const DropArtifacts art = run_drop_artifacts(cfg, 0);
  const AllocationMatrix empty(4, 50, 50);
  CHECK(std::abs(throughput_gain(empty, art.gains, cfg.power)) <= 1e-12);
  for (int m = 0; m < 50; ++m)
    CHECK(throughput_gain_channel(m, empty, art.gains, cfg.power) == 0.0);
}

TEST_CASE("single isolated SM with unit SNR adds one bit/s/Hz") {
  const PowerConfig pw;
  GainTable g(1, 1, 1);
  g.cue_enb(0) = 1e-9;
  g.sm_enb(0, 0) = 0.0;  // SM invisible to the eNB
  g.cue_dc(0, 0) = 0.0;
  g.sm_dc(0, 0, 0) = noise_per_rb_mw(pw) / pw.p_s_mw();  // SNR exactly 1

  AllocationMatrix a(1, 1, 1);
  a.set(0, 0, 0);
  CHECK(throughput_gain(a, g, pw) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("crafted two-channel instance") {
  const PowerConfig pw;
  GainTable g(2, 2, 1);
  g.cue_enb(0) = 2e-9;
  g.cue_enb(1) = 5e-10;
  g.sm_enb(0, 0) = 3e-11;
  g.sm_enb(1, 0) = 8e-12;
  g.sm_dc(0, 0, 0) = 1.2e-3;
  g.sm_dc(0, 0, 1) = 2e-8;
  g.sm_dc(1, 0, 0) = 4e-8;
  g.sm_dc(1, 0, 1) = 7e-4;
  g.cue_dc(0, 0) = 3e-9;
  g.cue_dc(0, 1) = 1e-9;
  g.cue_dc(1, 0) = 2e-9;
  g.cue_dc(1, 1) = 6e-9;

  AllocationMatrix a(2, 1, 2);
  a.set(0, 0, 0);
  a.set(1, 0, 1);

  const double tg = throughput_gain(a, g, pw);
  CHECK(tg == doctest::Approx(10.671721581333202).epsilon(1e-12));
  CHECK(throughput_gain_channel(0, a, g, pw) ==
        doctest::Approx(5.270692866993594).epsilon(1e-12));
  CHECK(throughput_gain_channel(1, a, g, pw) ==
        doctest::Approx(5.40102871433961).epsilon(1e-12));
  CHECK(throughput_gain_channel(0, a, g, pw) +
            throughput_gain_channel(1, a, g, pw) ==
        doctest::Approx(tg).epsilon(1e-12));
}

TEST_CASE("per-channel decomposition sums to the total on a real drop") {
  SimConfig cfg;
  cfg.scenario.num_cues = 20;
  cfg.scenario.num_dcs = 4;
  cfg.scenario.sms_per_dc = 10;
  cfg.scenario.rng_seed = 31337;
  const DropArtifacts art = run_drop_artifacts(cfg, 2);
  REQUIRE(art.allocation.assigned_count() > 0);

  const double total = throughput_gain(art.allocation, art.gains, cfg.power);
  double sum = 0.0;
  int used = 0;
  for (int m = 0; m < 20; ++m) {
    const double tg_m =
        throughput_gain_channel(m, art.allocation, art.gains, cfg.power);
    bool channel_used = false;
    for (int l = 0; l < 4; ++l)
      if (art.allocation.occupant(l, m) >= 0) channel_used = true;
    if (!channel_used) CHECK(tg_m == 0.0);
    else ++used;
    sum += tg_m;
  }
  CHECK(used > 0);
  CHECK(std::abs(sum - total) <= 1e-9 * std::max(1.0, std::abs(total)));
}

TEST_CASE("drop metrics reuse the shared SINR routine bit for bit") {
  SimConfig cfg;
  cfg.scenario.num_cues = 15;
  cfg.scenario.num_dcs = 3;
  cfg.scenario.sms_per_dc = 8;
  cfg.scenario.rng_seed = 90210;
  const DropArtifacts art = run_drop_artifacts(cfg, 1);
  const DropMetrics m = art.metrics;

  CHECK(m.accepted_sms == art.allocation.assigned_count());
  CHECK(m.access_rate == access_rate(art.allocation));
  REQUIRE(m.per_cue_sinr_db.size() == 15);
  for (int ch = 0; ch < 15; ++ch) {
    const double expect = 10.0 * std::log10(aggregate_sinr_cue(
                              ch, art.allocation, art.gains, cfg.power));
    CHECK(m.per_cue_sinr_db[ch] == expect);
  }
  CHECK(static_cast<int>(m.per_sm_sinr_db.size()) == m.accepted_sms);
  for (const auto& e : m.per_sm_sinr_db) {
    const double expect =
        10.0 * std::log10(aggregate_sinr_sm(e.dc, e.sm, e.channel,
                                            art.allocation, art.gains,
                                            cfg.power));
    CHECK(e.sinr_db == expect);
  }
}

TEST_CASE("summary statistics") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const Summary s = summarize(xs);
  CHECK(s.mean == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(s.se == doctest::Approx(0.6454972243679028).epsilon(1e-12));

  const std::vector<double> one{7.0};
  CHECK(summarize(one).mean == 7.0);
  CHECK(summarize(one).se == 0.0);
  CHECK(summarize({}).mean == 0.0);
}
