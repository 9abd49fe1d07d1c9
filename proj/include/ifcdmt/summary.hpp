#pragma once

#include <optional>
#include <vector>

#include "ifcdmt/closed_form.hpp"
#include "ifcdmt/oracle.hpp"
#include "ifcdmt/split_cases.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// General-split evaluation and aggregation.
// ---------------------------------------------------------------------------

/// Per-constraint exponents for an explicit power split. The grid oracle is
/// the authoritative value; the case-analysis fast path is evaluated and
/// compared, and any disagreement beyond tolerance is recorded.
struct GeneralSplitResult {
  DiversityBreakdown breakdown;                       ///< oracle-backed values
  std::array<double, constraint_count> fast_path{};   ///< case-analysis candidates
  std::array<bool, constraint_count> fast_path_mismatch{};
  std::array<FadingExponents, constraint_count> witnesses{
      FadingExponents{0, 0, 0, 0}, FadingExponents{0, 0, 0, 0}, FadingExponents{0, 0, 0, 0},
      FadingExponents{0, 0, 0, 0}, FadingExponents{0, 0, 0, 0}, FadingExponents{0, 0, 0, 0},
      FadingExponents{0, 0, 0, 0}};

  [[nodiscard]] int mismatch_count() const {
    int n = 0;
    for (bool m : fast_path_mismatch) n += m ? 1 : 0;
    return n;
  }
};

[[nodiscard]] inline GeneralSplitResult d_hk_general(const ChannelGains& ch, const RatePair& r,
                                                     SplitExponents split,
                                                     const OracleOptions& opt = {}) {
  const AsymptoticRegion region = AsymptoticRegion::hk_general(split);
  GeneralSplitResult out;
  std::array<double, constraint_count> v{};
  for (int k = 0; k < constraint_count; ++k) {
    const OracleResult res = min_constraint_violation(region, k, ch, r, opt);
    v[k] = res.value.value();
    out.witnesses[k] = res.witness;
  }
  out.breakdown = make_breakdown(v);
  out.fast_path = general_split_fast_path(ch, r, split);
  for (int k = 0; k < constraint_count; ++k)
    out.fast_path_mismatch[k] = std::abs(out.fast_path[k] - v[k]) > boundary_tol;
  return out;
}

// ---------------------------------------------------------------------------
// Power-split sweep
// ---------------------------------------------------------------------------

struct SplitSweepPoint {
  double b1 = 0.0, b2 = 0.0;
  double value = 0.0;
};

struct SplitSweepResult {
  std::vector<SplitSweepPoint> surface;  ///< row-major over the (b1, b2) grid
  SplitSweepPoint best;                  ///< maximizer (first on ties)
  double fixed_split_value = 0.0;        ///< value at b1 = beta21, b2 = beta12
};

/// Evaluate the general-split exponent over a Cartesian grid of split
/// exponents and compare against the fixed split.
[[nodiscard]] inline SplitSweepResult sweep_power_split(const ChannelGains& ch,
                                                        const RatePair& r,
                                                        const std::vector<double>& b_grid,
                                                        const OracleOptions& opt = {}) {
  SplitSweepResult out;
  out.surface.reserve(b_grid.size() * b_grid.size());
  bool first = true;
  for (double b1 : b_grid) {
    for (double b2 : b_grid) {
      const double val = d_hk_general(ch, r, {b1, b2}, opt).breakdown.overall.value();
      out.surface.push_back({b1, b2, val});
      if (first || val > out.best.value + boundary_tol) {
        out.best = out.surface.back();
        first = false;
      }
    }
  }
  out.fixed_split_value =
      d_hk_general(ch, r, PowerSplit::fixed_etkin().resolve(ch), opt).breakdown.overall.value();
  return out;
}

// ---------------------------------------------------------------------------
// Aggregated report
// ---------------------------------------------------------------------------

struct BoundsSummary {
  DiversityBreakdown etw;
  HkWorsBreakdown hk_wors{};
  DiversityBreakdown hk_fixed;
  std::optional<GeneralSplitResult> hk_general;
  ExtReal lower_best;
  Regime regime = Regime::Weak;
};

/// Compute every bound family at one operating point. The best lower bound
/// can never exceed the upper bound; a violation means a formula is wrong and
/// is treated as fatal.
[[nodiscard]] inline BoundsSummary summarize(const ChannelGains& ch, const RatePair& r,
                                             const PowerSplit& split = PowerSplit::fixed_etkin(),
                                             const OracleOptions& opt = {}) {
  BoundsSummary s;
  s.etw = d_etw(ch, r);
  s.hk_wors = d_hk_wors(ch, r);
  s.hk_fixed = d_hk_fixed(ch, r);
  if (split.mode != PowerSplit::Mode::FixedEtkin)
    s.hk_general = d_hk_general(ch, r, split.resolve(ch), opt);
  s.lower_best = ExtReal(std::max(s.hk_wors.overall, s.hk_fixed.overall.value()));
  s.regime = classify_regime(ch);
  if (s.lower_best.value() > s.etw.overall.value() + boundary_tol)
    throw std::logic_error("summarize: lower bound exceeds upper bound");
  return s;
}

// ---------------------------------------------------------------------------
// Achievability gap scan over symmetric channels
// ---------------------------------------------------------------------------

struct GapScanRow {
  double beta = 0.0;     ///< common cross-link exponent (direct links at 1)
  double max_gap = 0.0;  ///< max over the r grid of upper minus best lower bound
  bool has_gap = false;  ///< max_gap > boundary_tol
};

struct GapScanResult {
  std::vector<GapScanRow> rows;
  bool gap_found = false;
  double gap_first = 0.0;  ///< smallest beta with a gap
  double gap_last = 0.0;   ///< largest beta with a gap
};

/// For each symmetric channel (direct gains 1, cross gains beta) scan the
/// common multiplexing gain r1 = r2 = r and record where the upper bound is
/// not met by either lower bound.
[[nodiscard]] inline GapScanResult gap_scan_symmetric(double beta_min, double beta_max,
                                                      double beta_step, double r_max,
                                                      double r_step) {
  if (!(beta_min >= 0.0 && beta_max >= beta_min && beta_step > 0.0 && r_step > 0.0 &&
        r_max >= 0.0))
    throw std::invalid_argument("gap_scan_symmetric: bad scan ranges");
  GapScanResult out;
  const long nb = std::lround((beta_max - beta_min) / beta_step);
  const long nr = std::lround(r_max / r_step);
  for (long i = 0; i <= nb; ++i) {
    GapScanRow row;
    row.beta = beta_min + static_cast<double>(i) * beta_step;
    const ChannelGains ch{1.0, row.beta, row.beta, 1.0};
    for (long j = 0; j <= nr; ++j) {
      const double r = static_cast<double>(j) * r_step;
      const RatePair rates{r, r};
      const double upper = d_etw(ch, rates).overall.value();
      const double lower =
          std::max(d_hk_wors(ch, rates).overall, d_hk_fixed(ch, rates).overall.value());
      row.max_gap = std::max(row.max_gap, upper - lower);
    }
    row.has_gap = row.max_gap > boundary_tol;
    if (row.has_gap) {
      if (!out.gap_found) out.gap_first = row.beta;
      out.gap_last = row.beta;
      out.gap_found = true;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace ifcdmt
