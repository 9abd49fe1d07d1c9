// Acceptance suite: one test case per criterion, each printing a single
// [ACCEPT] pass/fail line. Criteria and tolerances are pinned here; a failing
// criterion prints its measured values so the report is self-contained.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <random>

#include "ifcdmt/ifcdmt.hpp"

using namespace ifcdmt;

namespace {

constexpr double exact_tol = 1e-9;

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, const char* name, bool ok, double seconds) {
  std::printf("[ACCEPT] %2d %-28s %s (%.1f s)\n", criterion, name, ok ? "PASS" : "FAIL",
              seconds);
  std::fflush(stdout);
}

}  // namespace

TEST_CASE("criterion 1: counterexample reproduction") {
  Stopwatch sw;
  const double published = reference_triple_rate_value(0.5, 0.4);
  const ChannelGains ch{1, 0.5, 0.5, 1};
  const RatePair r{0.4, 0.4};
  const OracleResult oracle = min_exponent_sum(AsymptoticRegion::reference_triple_rate(), ch, r);
  const double etw_f = d_etw(ch, r)[ConstraintLabel::F].value();
  const bool ok = std::abs(published - 0.8) <= 1e-12 && oracle.value.value() <= 0.4 + 1e-12 &&
                  std::abs(oracle.witness.g11 - 0.4) <= 1e-12 && oracle.witness.g12 == 0.0 &&
                  oracle.witness.g21 == 0.0 && oracle.witness.g22 == 0.0 &&
                  std::abs(etw_f - 0.4) <= 1e-12 && sw.seconds() < 5.0;
  report(1, "counterexample", ok, sw.seconds());
  CHECK(ok);
}

TEST_CASE("criterion 2: oracle equivalence on 200 seeded instances") {
  Stopwatch sw;
  std::mt19937_64 rng(7);
  struct Instance {
    std::array<int, 6> u;
  };
  std::vector<Instance> instances(200);
  for (auto& inst : instances)
    inst.u = {static_cast<int>(rng() % 61), static_cast<int>(rng() % 61),
              static_cast<int>(rng() % 61), static_cast<int>(rng() % 61),
              static_cast<int>(rng() % 31), static_cast<int>(rng() % 31)};
  std::vector<double> devs(instances.size(), 0.0);
  parallel_for_index(static_cast<std::int64_t>(instances.size()), worker_count(),
                     [&](std::int64_t t) {
    const auto& u = instances[static_cast<std::size_t>(t)].u;
    const ChannelGains ch{0.05 * u[0], 0.05 * u[1], 0.05 * u[2], 0.05 * u[3]};
    const RatePair r{0.05 * u[4], 0.05 * u[5]};
    double dev = 0.0;
    const auto ce = d_etw(ch, r);
    const auto oe = oracle_breakdown(AsymptoticRegion::etw(), ch, r);
    const auto cf = d_hk_fixed(ch, r);
    const auto of = oracle_breakdown(AsymptoticRegion::hk_fixed(), ch, r);
    for (int k = 0; k < constraint_count; ++k) {
      dev = std::max(dev, std::abs(ce.per_constraint[k].value() - oe.per_constraint[k].value()));
      dev = std::max(dev, std::abs(cf.per_constraint[k].value() - of.per_constraint[k].value()));
    }
    dev = std::max(dev, std::abs(ce.overall.value() - oe.overall.value()));
    dev = std::max(dev, std::abs(cf.overall.value() - of.overall.value()));
    const auto w = d_hk_wors(ch, r);
    const double ni1 = min_exponent_sum(AsymptoticRegion::treat_as_noise(1), ch, r).value;
    const double ni2 = min_exponent_sum(AsymptoticRegion::treat_as_noise(2), ch, r).value;
    const double mac1 = min_exponent_sum(AsymptoticRegion::mac_at(1), ch, r).value;
    const double mac2 = min_exponent_sum(AsymptoticRegion::mac_at(2), ch, r).value;
    dev = std::max({dev, std::abs(w.ni1 - ni1), std::abs(w.ni2 - ni2),
                    std::abs(w.mac1 - mac1), std::abs(w.mac2 - mac2),
                    std::abs(w.overall - std::min(std::max(ni1, mac1), std::max(ni2, mac2)))});
    devs[static_cast<std::size_t>(t)] = dev;
  });
  double max_dev = 0.0;
  for (double d : devs) max_dev = std::max(max_dev, d);
  const bool ok = max_dev <= exact_tol && sw.seconds() < 600.0;
  report(2, "oracle equivalence", ok, sw.seconds());
  INFO("max deviation " << max_dev);
  CHECK(ok);
}

TEST_CASE("criterion 3: figure-2/1 equality for symmetric cross gains 0.2 and 0.5") {
  Stopwatch sw;
  bool ok = true;
  for (double beta : {0.2, 0.5}) {
    const ChannelGains ch{1, beta, beta, 1};
    double worst = 0.0, worst_r = -1.0;
    for (int j = 0; j <= 100; ++j) {
      const RatePair r{0.01 * j, 0.01 * j};
      const double gap =
          std::abs(d_etw(ch, r).overall.value() - d_hk_fixed(ch, r).overall.value());
      if (gap > worst) {
        worst = gap;
        worst_r = 0.01 * j;
      }
    }
    if (worst > exact_tol) {
      ok = false;
      std::printf("[ACCEPT]    criterion 3 detail: beta=%.2f max |d_etw - d_hk_fixed| = %g at "
                  "r=%.2f\n",
                  beta, worst, worst_r);
    }
  }
  ok = ok && sw.seconds() < 30.0;
  report(3, "figure-2/1 equality", ok, sw.seconds());
  CHECK(ok);
}

TEST_CASE("criterion 4: figure-5 gap with no-splitting parity") {
  Stopwatch sw;
  const ChannelGains ch{1, 1.1, 1.1, 1};
  bool gap_exists = false, wors_matches = true;
  for (int j = 0; j <= 100; ++j) {
    const RatePair r{0.01 * j, 0.01 * j};
    const double etw = d_etw(ch, r).overall.value();
    const double fixed = d_hk_fixed(ch, r).overall.value();
    const double wors = d_hk_wors(ch, r).overall;
    gap_exists = gap_exists || (etw - fixed > exact_tol);
    wors_matches = wors_matches && std::abs(wors - fixed) <= exact_tol;
  }
  const bool ok = gap_exists && wors_matches && sw.seconds() < 30.0;
  report(4, "figure-5 gap", ok, sw.seconds());
  CHECK(ok);
}

TEST_CASE("criterion 5: figure-6 no-split optimality") {
  Stopwatch sw;
  const ChannelGains ch{1, 1.5, 1.5, 1};
  bool ok = true;
  for (int j = 0; j <= 100; ++j) {
    const RatePair r{0.01 * j, 0.01 * j};
    const double etw = d_etw(ch, r).overall.value();
    ok = ok && std::abs(etw - d_hk_fixed(ch, r).overall.value()) <= exact_tol &&
         std::abs(etw - d_hk_wors(ch, r).overall) <= exact_tol;
  }
  ok = ok && sw.seconds() < 30.0;
  report(5, "figure-6 equality", ok, sw.seconds());
  CHECK(ok);
}

TEST_CASE("criterion 6: gap-interval endpoints") {
  Stopwatch sw;
  const GapScanResult scan = gap_scan_symmetric(0.0, 1.7, 0.005, 1.0, 0.005);
  const bool ok = scan.gap_found && std::abs(scan.gap_first - 0.680) <= 0.01 &&
                  std::abs(scan.gap_last - 1.500) <= 0.01 && sw.seconds() < 600.0;
  report(6, "gap-interval endpoints", ok, sw.seconds());
  if (scan.gap_found)
    std::printf("[ACCEPT]    criterion 6 detail: detected interval [%g, %g], expected "
                "[0.680, 1.500] within 0.01\n",
                scan.gap_first, scan.gap_last);
  CHECK(ok);
}

TEST_CASE("criterion 7: asymmetric figure claims") {
  Stopwatch sw;
  bool ok = true;
  for (const ChannelGains& ch : {ChannelGains{1, 0.9, 0.2, 1}, ChannelGains{1, 1.2, 0.5, 1}}) {
    double worst = 0.0, worst_r = -1.0;
    for (int j = 0; j <= 100; ++j) {
      const RatePair r{0.01 * j, 0.01 * j};
      const double gap =
          std::abs(d_etw(ch, r).overall.value() - d_hk_fixed(ch, r).overall.value());
      if (gap > worst) {
        worst = gap;
        worst_r = 0.01 * j;
      }
    }
    if (worst > exact_tol) {
      ok = false;
      std::printf("[ACCEPT]    criterion 7 detail: beta=(%g,%g,%g,%g) max gap %g at r=%.2f\n",
                  ch.b11, ch.b12, ch.b21, ch.b22, worst, worst_r);
    }
  }
  ok = ok && sw.seconds() < 60.0;
  report(7, "asymmetric equalities", ok, sw.seconds());
  CHECK(ok);
}

TEST_CASE("criterion 8: very-strong interference collapses to single-user exponents") {
  Stopwatch sw;
  std::mt19937_64 rng(123);
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double b11 = 0.05 * static_cast<double>(rng() % 31);
    const double b22 = 0.05 * static_cast<double>(rng() % 31);
    const double floor_units = std::llround((b11 + b22) / 0.05);
    const double b12 = 0.05 * (floor_units + static_cast<double>(rng() % 31));
    const double b21 = 0.05 * (floor_units + static_cast<double>(rng() % 31));
    const ChannelGains ch{b11, b12, b21, b22};
    const RatePair r{0.05 * static_cast<double>(rng() % (std::llround(b11 / 0.05) + 1)),
                     0.05 * static_cast<double>(rng() % (std::llround(b22 / 0.05) + 1))};
    const double expect = std::min(pos_part(b11 - r.r1), pos_part(b22 - r.r2));
    const double etw = d_etw(ch, r).overall.value();
    const double wors = d_hk_wors(ch, r).overall;
    const double oracle = min_exponent_sum(AsymptoticRegion::etw(), ch, r).value;
    worst = std::max({worst, std::abs(etw - expect), std::abs(wors - expect),
                      std::abs(oracle - expect)});
  }
  ok = worst <= exact_tol && sw.seconds() < 120.0;
  report(8, "very-strong property", ok, sw.seconds());
  INFO("worst deviation " << worst);
  CHECK(ok);
}

TEST_CASE("criterion 9: Monte Carlo slope and region ordering") {
  Stopwatch sw;
  const ChannelGains ch{1, 0, 0, 1};
  const RatePair r{0.4, 0.4};
  McConfig cfg;
  cfg.x_grid = {10.0, 100.0, 1000.0};
  cfg.samples_per_x = 1000000;
  cfg.seed = 1;
  const auto pairs = outage_probability_compare(ch, r, cfg);
  std::int64_t violations = 0;
  std::vector<OutageEstimate> etw_rows;
  for (const OutagePair& p : pairs) {
    violations += p.ordering_violations;
    etw_rows.push_back(p.etw);
  }
  const SlopeFit fit = fit_slope(etw_rows, cfg.min_outage_events);
  const bool ok =
      std::abs(fit.d_hat - 0.6) <= 0.15 && violations == 0 && sw.seconds() < 300.0;
  report(9, "monte-carlo slope", ok, sw.seconds());
  std::printf("[ACCEPT]    criterion 9 detail: d_hat=%.4f (target 0.6 +/- 0.15), ordering "
              "violations %lld of %lld samples\n",
              fit.d_hat, static_cast<long long>(violations),
              static_cast<long long>(3 * cfg.samples_per_x));
  CHECK(ok);
}

TEST_CASE("criterion 10: invariant suites") {
  Stopwatch sw;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ub(0.0, 3.0), ur(0.0, 1.5), du(0.0, 0.6);
  const std::array<int, 7> perm{1, 0, 3, 2, 4, 6, 5};
  std::int64_t violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const ChannelGains ch{ub(rng), ub(rng), ub(rng), ub(rng)};
    const RatePair r{ur(rng), ur(rng)};
    const auto e = d_etw(ch, r);
    const auto f = d_hk_fixed(ch, r);
    const auto w = d_hk_wors(ch, r);
    for (int k = 0; k < constraint_count; ++k)
      if (e.per_constraint[k].value() < 0.0 || f.per_constraint[k].value() < 0.0) ++violations;
    if (std::max(w.overall, f.overall.value()) > e.overall.value() + exact_tol) ++violations;

    const RatePair r2{r.r1 + du(rng), r.r2 + du(rng)};
    const auto e2 = d_etw(ch, r2);
    const auto f2 = d_hk_fixed(ch, r2);
    for (int k = 0; k < constraint_count; ++k) {
      if (e2.per_constraint[k].value() > e.per_constraint[k].value() + exact_tol) ++violations;
      if (f2.per_constraint[k].value() > f.per_constraint[k].value() + exact_tol) ++violations;
    }

    const auto es = d_etw(ch.user_swapped(), r.user_swapped());
    const auto fs = d_hk_fixed(ch.user_swapped(), r.user_swapped());
    for (int k = 0; k < constraint_count; ++k) {
      if (std::abs(es.per_constraint[perm[k]].value() - e.per_constraint[k].value()) > exact_tol)
        ++violations;
      if (std::abs(fs.per_constraint[perm[k]].value() - f.per_constraint[k].value()) > exact_tol)
        ++violations;
    }
  }
  // symmetric algebraic identity for constraint C on a dense grid
  for (int ai = 0; ai <= 300; ++ai) {
    for (int ri = 0; ri <= 150; ++ri) {
      const double a = 0.01 * ai, rr = 0.01 * ri;
      const double lhs = d_etw({1, a, a, 1}, {rr, rr})[ConstraintLabel::C].value();
      const double A = 1 - 2 * rr, B = 0.5 * a - rr;
      const double rhs = 2 * (pos_part(A) + pos_part(B) + pos_part(neg_part(B) - neg_part(A)));
      if (std::abs(lhs - rhs) > exact_tol) ++violations;
    }
  }
  const bool ok = violations == 0 && sw.seconds() < 120.0;
  report(10, "invariant suites", ok, sw.seconds());
  INFO("violations " << violations);
  CHECK(ok);
}
