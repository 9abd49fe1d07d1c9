#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ifcdmt/regions.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// Brute-force grid oracle.
//
// For one constraint of an asymptotic region family, minimize the total
// fading exponent over all grid points whose fading state violates that
// constraint (closed boundary). The family value is the minimum over its
// constraints. Restricting each gamma_ij to [0, beta_ij] is lossless: beyond
// beta_ij the violated/satisfied status of every constraint is unchanged
// while the objective only grows.
//
// Enumeration runs at half the input granularity by default. Constraint
// surfaces touch coefficient-2 link terms, so their vertices land on half
// multiples of the input step; the finer grid makes the oracle exact (not
// just 4*step-close) on aligned instances.
//
// The search exploits only one structural fact, checked against the same
// predicates the membership tests use: violation is monotone in the two
// direct-link exponents g11 and g22 (worsening a direct link never repairs a
// violated constraint). Cross-link exponents are NOT monotone in general and
// are enumerated exhaustively.
// ---------------------------------------------------------------------------

struct OracleOptions {
  double step = 0.05;           ///< input alignment granularity
  bool half_step = true;        ///< enumerate at step/2 (exact on aligned inputs)
  bool allow_unaligned = false; ///< accept off-grid inputs (result is then only a certificate)
};

struct OracleResult {
  ExtReal value;                    ///< minimal exponent sum; +inf if nothing violates
  FadingExponents witness{0, 0, 0, 0};
  int constraint = -1;              ///< constraint index attaining the minimum
  double grid_step = 0.0;           ///< enumeration step actually used
};

namespace detail {

[[nodiscard]] inline bool grid_aligned(double v, double step) {
  if (std::isinf(v)) return true;  // infinite split offsets are exact
  const double q = v / step;
  return std::abs(q - std::llround(q)) <= 1e-6;
}

inline void require_alignment(const AsymptoticRegion& region, const ChannelGains& ch,
                              const RatePair& r, const OracleOptions& opt) {
  if (opt.allow_unaligned) return;
  const auto check = [&](double v, const char* what) {
    if (!grid_aligned(v, opt.step))
      throw std::invalid_argument(std::string("oracle: ") + what +
                                  " is not a multiple of the grid step");
  };
  check(ch.b11, "beta11");
  check(ch.b12, "beta12");
  check(ch.b21, "beta21");
  check(ch.b22, "beta22");
  check(r.r1, "r1");
  check(r.r2, "r2");
  if (region.family == AsymptoticFamily::HkGeneralSplit) {
    check(region.split.b1, "split b1");
    check(region.split.b2, "split b2");
  }
}

}  // namespace detail

/// Minimize g11+g12+g21+g22 over grid states violating constraint k.
[[nodiscard]] inline OracleResult min_constraint_violation(const AsymptoticRegion& region,
                                                           int k, const ChannelGains& ch,
                                                           const RatePair& r,
                                                           const OracleOptions& opt = {}) {
  if (!(opt.step > 0.0)) throw std::invalid_argument("oracle: step must be positive");
  if (k < 0 || k >= region.constraint_count())
    throw std::invalid_argument("oracle: constraint index out of range");
  detail::require_alignment(region, ch, r, opt);

  const double h = opt.half_step ? opt.step / 2.0 : opt.step;
  const double lhs = constraint_lhs(region, k, r);
  const auto mask = region.involves(k);
  const auto cap = [&](double beta, bool involved) {
    return involved ? static_cast<long>(std::llround(beta / h)) : 0L;
  };
  const long n11 = cap(ch.b11, mask[0]);
  const long n12 = cap(ch.b12, mask[1]);
  const long n21 = cap(ch.b21, mask[2]);
  const long n22 = cap(ch.b22, mask[3]);

  const auto violates = [&](long i11, long i12, long i21, long i22) {
    const FadingExponents g{i11 * h, i12 * h, i21 * h, i22 * h};
    return lhs >= constraint_rhs(region, k, ch, g) - boundary_tol;
  };

  long best = -1;
  std::array<long, 4> best_idx{0, 0, 0, 0};

  for (long i12 = 0; i12 <= n12; ++i12) {
    if (best >= 0 && i12 >= best) break;
    for (long i21 = 0; i21 <= n21; ++i21) {
      const long base = i12 + i21;
      if (best >= 0 && base >= best) break;

      // Staircase sweep over the monotone pair (g11, g22): the minimal
      // violating i22 never increases as i11 grows, so one descending
      // pointer serves the whole i11 sweep.
      long m_prev = -1;  // minimal violating i22 at the previous i11, if any
      for (long i11 = 0; i11 <= n11; ++i11) {
        if (best >= 0 && base + i11 >= best) break;
        long start;
        if (m_prev >= 0) {
          start = m_prev;  // violation at (i11-1, m_prev) implies it here too
        } else {
          if (!violates(i11, i12, i21, n22)) continue;
          start = n22;
        }
        long m = start;
        while (m > 0 && violates(i11, i12, i21, m - 1)) --m;
        m_prev = m;
        const long total = base + i11 + m;
        if (best < 0 || total < best) {
          best = total;
          best_idx = {i11, i12, i21, m};
        }
      }
    }
  }

  OracleResult out;
  out.grid_step = h;
  out.constraint = k;
  if (best < 0) {
    out.value = ExtReal::infinity();
    return out;
  }
  out.witness = FadingExponents{best_idx[0] * h, best_idx[1] * h, best_idx[2] * h,
                                best_idx[3] * h};
  out.value = ExtReal(static_cast<double>(best) * h);
  return out;
}

/// Minimum over the union of all per-constraint complements of the family:
/// the diversity exponent of the region. Ties resolve to the lowest index.
[[nodiscard]] inline OracleResult min_exponent_sum(const AsymptoticRegion& region,
                                                   const ChannelGains& ch, const RatePair& r,
                                                   const OracleOptions& opt = {}) {
  OracleResult best;
  best.value = ExtReal::infinity();
  const int n = region.constraint_count();
  for (int k = 0; k < n; ++k) {
    OracleResult cur = min_constraint_violation(region, k, ch, r, opt);
    if (cur.value.value() < best.value.value()) best = cur;
  }
  if (best.constraint < 0) best.grid_step = opt.half_step ? opt.step / 2.0 : opt.step;
  return best;
}

/// Per-constraint values of a seven-constraint family as a breakdown.
[[nodiscard]] inline DiversityBreakdown oracle_breakdown(const AsymptoticRegion& region,
                                                         const ChannelGains& ch,
                                                         const RatePair& r,
                                                         const OracleOptions& opt = {}) {
  if (region.constraint_count() != constraint_count)
    throw std::invalid_argument("oracle_breakdown: family does not have seven constraints");
  std::array<double, constraint_count> v{};
  for (int k = 0; k < constraint_count; ++k)
    v[k] = min_constraint_violation(region, k, ch, r, opt).value.value();
  return make_breakdown(v);
}

}  // namespace ifcdmt
