#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ifcdmt/piecewise.hpp"

using namespace ifcdmt;

namespace {
Piecewise clip_affine(double a, double b) { return pw_pos(Piecewise::affine(a, b)); }
}  // namespace

TEST_CASE("clipped ramp family has its minimum at the largest decreasing threshold") {
  // f(a) = [m - a]^+ + [M - a]^+ + [a - m2]^+ with m <= M: minimum attained at
  // min(1, M), possibly on a flat stretch.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  for (int i = 0; i < 2000; ++i) {
    double m = u(rng), M = u(rng);
    if (m > M) std::swap(m, M);
    const double m2 = u(rng);
    const Piecewise f =
        clip_affine(m, -1.0) + clip_affine(M, -1.0) + clip_affine(-m2, 1.0);
    const auto ext = f.minimize(0.0, 1.0);
    CHECK(f(std::min(1.0, M)) == Catch::Approx(ext.value).margin(1e-12));
    CHECK(f(ext.arg) == ext.value);
  }
}

TEST_CASE("sum-rate objective example") {
  // [1 - 0.8a]^+ + [0.5 - 0.8a]^+ + [0.5 - 0.8(1-a)]^+ over [0, 1]:
  // breakpoints 0.375, 0.625 and 1.25 (clamped); minimum 0.7, attained at 1.
  const double rs = 0.8;
  const Piecewise f = clip_affine(1.0, -rs) + clip_affine(0.5, -rs) +
                      clip_affine(0.5 - rs, rs);
  const auto ext = f.minimize(0.0, 1.0);
  CHECK(ext.value == Catch::Approx(0.7).margin(1e-12));
  CHECK(f(1.0) == Catch::Approx(0.7).margin(1e-12));
  CHECK(f(0.625) == Catch::Approx(0.7).margin(1e-12));  // flat from the breakpoint on
}

TEST_CASE("constant function") {
  const Piecewise f = Piecewise::constant(2.25);
  const auto ext = f.minimize(0.0, 1.0);
  CHECK(ext.value == 2.25);
  CHECK(ext.arg == 0.0);
}

TEST_CASE("maximize agrees with a dense scan") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.5);
  for (int trial = 0; trial < 300; ++trial) {
    const Piecewise f =
        pw_min(Piecewise::affine(u(rng), u(rng)),
               Piecewise::affine(u(rng), u(rng)) + clip_affine(u(rng), u(rng))) +
        pw_max(Piecewise::constant(u(rng)), Piecewise::affine(u(rng), u(rng)) * 0.5);
    const auto mx = f.maximize(0.0, 1.0);
    const auto mn = f.minimize(0.0, 1.0);
    double scan_max = -1e300, scan_min = 1e300;
    for (int j = 0; j <= 5000; ++j) {
      const double v = f(j / 5000.0);
      scan_max = std::max(scan_max, v);
      scan_min = std::min(scan_min, v);
    }
    CHECK(mx.value >= scan_max - 1e-9);
    CHECK(mn.value <= scan_min + 1e-9);
    CHECK(f(mx.arg) == mx.value);
    CHECK(f(mn.arg) == mn.value);
  }
}
