#pragma once

#include <algorithm>
#include <array>
#include <limits>

#include "ifcdmt/types.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// Case-analysis fast path for the general power split.
//
// Closed-form candidates for the per-constraint exponents of the general
// split region, organized as a dispatch over sign cases of the effective
// common/private link budgets. The source case analysis is known to contain
// inconsistencies (unbalanced brackets, mismatched budget variables); where
// the text is ambiguous the structurally analogous completion is used. The
// grid oracle is authoritative for these values; this path exists for speed
// and for surfacing disagreements, never as ground truth.
// ---------------------------------------------------------------------------

/// Effective link budgets of the general split: full, private-part and
/// common-part exponents of each link as seen by the decoders.
struct SplitCaseLetters {
  double A;  ///< full direct link of user 1
  double B;  ///< private part of user 1 at its own receiver
  double C;  ///< full direct link of user 2
  double D;  ///< private part of user 2 at its own receiver
  double E;  ///< common part of user 2 at receiver 1
  double F;  ///< private part of user 2 at receiver 1
  double G;  ///< common part of user 1 at receiver 2
  double H;  ///< private part of user 1 at receiver 2
};

[[nodiscard]] inline SplitCaseLetters split_case_letters(const ChannelGains& ch,
                                                         SplitExponents s) {
  SplitCaseLetters l{};
  l.A = pos_part(ch.b11);
  l.B = pos_part(ch.b11 - pos_part(s.b1));
  l.C = pos_part(ch.b22);
  l.D = pos_part(ch.b22 - pos_part(s.b2));
  l.E = pos_part(ch.b12 - pos_part(-s.b2));
  l.F = pos_part(ch.b12 - pos_part(s.b2));
  l.G = pos_part(ch.b21 - pos_part(-s.b1));
  l.H = pos_part(ch.b21 - pos_part(s.b1));
  return l;
}

namespace split_cases {

/// Sum-rate constraint: joint decoding of (own full + other common) at one
/// receiver, private-only decoding at the other.
[[nodiscard]] inline double sum_rate(double C, double G, double H, double B, double F,
                                     double rs) {
  const double bf = pos_part(B - F);
  if (G < H) return pos_part(pos_part(C - H) + bf - rs);
  const double gate = G - pos_part(H);
  if (rs > gate) {
    const double t1 = std::max(0.0, std::min({C, G, gate, rs}));
    const double joint = pos_part(C + G - 2.0 * t1 + bf - (rs - t1));
    const double relaxed = pos_part(pos_part(C - H) + bf - rs);
    return std::min(joint, relaxed);
  }
  const double t1 = std::max(0.0, std::min({C, G, G - H, rs}));
  return pos_part(C + G - 2.0 * t1 + bf - (rs - t1));
}

/// Cross sum-rate constraint: private+common mixtures at both receivers.
[[nodiscard]] inline double cross_rate(double B, double E, double F, double D, double G,
                                       double H, double rs) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double bf = pos_part(B - F), dh = pos_part(D - H);
  if (G >= H && E >= F) {
    double best = inf;
    if (rs >= pos_part(G - H) + pos_part(E - F)) best = std::min(best, pos_part(dh + bf - rs));
    if (rs >= pos_part(G - H)) {
      const double t1 = std::min({B, E, E - F, rs});
      best = std::min(best, pos_part(B + E - 2.0 * t1 + dh - (rs - t1)));
    }
    if (rs >= pos_part(E - F)) {
      const double t1 = std::min({D, G, pos_part(G - H), rs});
      best = std::min(best, pos_part(D + G - 2.0 * t1 + bf - (rs - t1)));
    }
    if (rs < pos_part(G - H) + pos_part(E - F)) {
      const double t1 = std::min({D, G, rs, G - H});
      const double t2 = std::min({B, E, rs - t1, E - F});
      best = std::min(best, pos_part(D + G - 2.0 * t1 + B + E - 2.0 * t2 - (rs - t1 - t2)));
    }
    return best;
  }
  if (G >= H) {  // E < F
    const double t1 = std::min({D, G, G - H, rs});
    const double branch = pos_part(D + G - 2.0 * t1 + bf - (rs - t1));
    if (rs >= G - H) return std::max(pos_part(dh + bf - rs), branch);
    return branch;
  }
  if (E >= F) {  // G < H
    const double t1 = std::min({B, E, E - F, rs});
    const double branch = pos_part(B + E - 2.0 * t1 + dh - (rs - t1));
    if (rs >= E - F) return std::max(pos_part(dh + bf - rs), branch);
    return branch;
  }
  return pos_part(dh + bf - rs);
}

/// 2:1 composite constraint: full+common and private decoding at the own
/// receiver plus the mixture at the other receiver.
[[nodiscard]] inline double triple_rate(double A, double B, double E, double F, double D,
                                        double G, double H, double rf) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double bf = pos_part(B - F), dh = pos_part(D - H);
  if (E >= F && G >= H) {
    double best = inf;
    const double ap = pos_part(A - F - pos_part(E - F));
    if (rf >= pos_part(E - F) + pos_part(G - H)) {
      const double d1 = pos_part(std::max(ap, bf) + dh - rf);
      const double rf2 = pos_part(D - H - rf);
      const double rf1p = pos_part((rf - rf2) - bf);
      const double d2 = 0.5 * pos_part(ap + bf - rf1p) + pos_part(D - H - rf2);
      best = std::min(best, std::max(d1, d2));
    }
    if (rf >= pos_part(E - F)) {
      const double t1 = std::min({D, G, G - H, rf});
      const double d1 = pos_part(std::max(ap, bf) + D + G - 2.0 * t1 - (rf - t1));
      const double rf2 = pos_part(std::min(std::max(D, G), rf));
      const double rf1p = pos_part((rf - rf2) - bf);
      const double d2 = 0.5 * pos_part(ap + bf - rf1p) + pos_part(D - H - rf2);
      best = std::min(best, std::max(d1, d2));
    }
    if (rf >= pos_part(G - H)) {
      const double t1 = std::min({E, A, E - F, pos_part(rf - bf)});
      best = std::min(best, pos_part(E + A - 2.0 * t1 + dh - (rf - bf - t1) + bf));
    }
    if (rf < pos_part(E - F) + pos_part(G - H)) {
      const double t1 = std::min({E, A, E - F, pos_part(rf - bf)});
      const double t2 = std::min({D, G, G - H, pos_part(rf - t1 - bf)});
      const double t3 = pos_part(rf - t1 - t2);
      best = std::min(best, pos_part(E + A - 2.0 * t1 + D + G - 2.0 * t2 + bf - t3));
    }
    return best;
  }
  if (E >= F) {  // G < H
    const double d1 = pos_part(pos_part(A - F) + bf + dh - rf);
    const double t1 = std::min({E, A, E - F, pos_part(rf - bf)});
    const double d2 = pos_part(pos_part(E + A - 2.0 * t1 + dh) - (rf - bf - t1) + bf);
    return std::max(d1, d2);
  }
  if (G >= H) {  // E < F
    const double d1 = pos_part(pos_part(A - F) + bf + dh - rf);
    const double t1 = std::min({D, G, G - H, rf});
    const double d2 = pos_part(D + G - 2.0 * t1 + pos_part(A - F) + bf - (rf - t1));
    return std::max(d1, d2);
  }
  return pos_part(pos_part(A - F) + bf + dh - rf);
}

}  // namespace split_cases

/// All seven per-constraint candidates of the general-split family.
[[nodiscard]] inline std::array<double, constraint_count> general_split_fast_path(
    const ChannelGains& ch, const RatePair& r, SplitExponents s) {
  const SplitCaseLetters l = split_case_letters(ch, s);
  const double rs = r.rs(), rf = r.rf(), rg = r.rg();
  std::array<double, constraint_count> v{};
  v[0] = pos_part(ch.b11 - l.F - r.r1);
  v[1] = pos_part(ch.b22 - l.H - r.r2);
  v[2] = split_cases::sum_rate(l.C, l.G, l.H, l.B, l.F, rs);
  v[3] = split_cases::sum_rate(l.A, l.E, l.F, l.D, l.H, rs);
  v[4] = split_cases::cross_rate(l.B, l.E, l.F, l.D, l.G, l.H, rs);
  v[5] = split_cases::triple_rate(l.A, l.B, l.E, l.F, l.D, l.G, l.H, rf);
  v[6] = split_cases::triple_rate(l.C, l.D, l.G, l.H, l.B, l.E, l.F, rg);
  return v;
}

}  // namespace ifcdmt
