#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "ifcdmt/types.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// Finite-SNR rate regions
//
// Membership predicates over one fading state at scale x > 1. The sampled
// linear receive powers S_cu = x^{beta_cu - gamma_cu} carry the fading; rates
// are R_u = log(1 + x^{r_u}). Natural logs throughout (the base cancels on
// both sides of every inequality). Non-strict boundaries within boundary_tol.
// ---------------------------------------------------------------------------

/// Linear-scale received powers of one fading state.
struct FiniteFadingSample {
  double s11, s12, s21, s22;

  FiniteFadingSample(double p11, double p12, double p21, double p22)
      : s11(p11), s12(p12), s21(p21), s22(p22) {
    if (!(s11 >= 0.0 && s12 >= 0.0 && s21 >= 0.0 && s22 >= 0.0))
      throw std::invalid_argument("FiniteFadingSample: powers must be nonnegative");
  }
};

enum class FiniteRegion { EtwOuter, HkInner };

[[nodiscard]] constexpr const char* to_string(FiniteRegion r) noexcept {
  return r == FiniteRegion::EtwOuter ? "etw" : "hk";
}

/// Target rate R = log(1 + x^r).
[[nodiscard]] inline double finite_rate(double x, double r) {
  return std::log1p(std::pow(x, r));
}

namespace detail {
inline void require_scale(double x) {
  if (!(x > 1.0)) throw std::invalid_argument("finite-SNR regions require x > 1");
}
}  // namespace detail

/// Outer-bound region: seven constraints on (R1, R2) given the receive
/// powers. The two per-user constraints see the clean direct links; the
/// sum-rate and 2:1 composites mix direct and cross powers.
[[nodiscard]] inline bool in_etw_finite(const FiniteFadingSample& s, const ChannelGains&,
                                        const RatePair& r, double x) {
  detail::require_scale(x);
  const double t = boundary_tol;
  const double R1 = finite_rate(x, r.r1);
  const double R2 = finite_rate(x, r.r2);

  const double la = std::log1p(s.s11);
  const double lb = std::log1p(s.s22);
  const double zc = std::log1p(s.s11 / (1.0 + s.s21));  // direct link over cross power
  const double zd = std::log1p(s.s22 / (1.0 + s.s12));
  const double mc = std::log1p(s.s22 + s.s21);
  const double md = std::log1p(s.s11 + s.s12);
  const double me1 = std::log1p(s.s12 + s.s11 / (1.0 + s.s21));
  const double me2 = std::log1p(s.s21 + s.s22 / (1.0 + s.s12));

  return R1 <= la + t && R2 <= lb + t && R1 + R2 <= zc + mc + t && R1 + R2 <= zd + md + t &&
         R1 + R2 <= me1 + me2 + t && 2.0 * R1 + R2 <= zc + md + me2 + t &&
         R1 + 2.0 * R2 <= zd + mc + me1 + t;
}

/// Achievable region with the fixed power split b1 = beta21, b2 = beta12:
/// private parts are scaled by 1/(1 + x^{+b}) and common parts by
/// 1/(1 + x^{-b}), so the average private interference sits at the noise
/// floor. Transcribed denominator-for-denominator from the bound set.
[[nodiscard]] inline bool in_hk_finite(const FiniteFadingSample& s, const ChannelGains& ch,
                                       const RatePair& r, double x) {
  detail::require_scale(x);
  const double t = boundary_tol;
  const double R1 = finite_rate(x, r.r1);
  const double R2 = finite_rate(x, r.r2);

  const double q1p = 1.0 + std::pow(x, ch.b21), q1m = 1.0 + std::pow(x, -ch.b21);
  const double q2p = 1.0 + std::pow(x, ch.b12), q2m = 1.0 + std::pow(x, -ch.b12);
  const double s11p = s.s11 / q1p, s22p = s.s22 / q2p;  // own-signal private parts
  const double s12p = s.s12 / q2p, s21p = s.s21 / q1p;  // interfering private parts
  const double s12c = s.s12 / q2m, s21c = s.s21 / q1m;  // interfering common parts

  const double la = std::log1p(s.s11 / (1.0 + s12p));
  const double lb = std::log1p(s.s22 / (1.0 + s21p));
  const double lc1 = std::log1p((s.s22 + s21c) / (1.0 + s21p));
  const double lc2 = std::log1p(s11p / (1.0 + s12p));
  const double ld1 = std::log1p((s.s11 + s12c) / (1.0 + s12p));
  const double ld2 = std::log1p(s22p / (1.0 + s21p));
  const double le1 = std::log1p((s11p + s12c) / (1.0 + s12p));
  const double le2 = std::log1p((s22p + s21c) / (1.0 + s21p));

  return R1 <= la + t && R2 <= lb + t && R1 + R2 <= lc1 + lc2 + t &&
         R1 + R2 <= ld1 + ld2 + t && R1 + R2 <= le1 + le2 + t &&
         2.0 * R1 + R2 <= ld1 + lc2 + le2 + t && R1 + 2.0 * R2 <= lc1 + ld2 + le1 + t;
}

[[nodiscard]] inline bool in_finite_region(FiniteRegion kind, const FiniteFadingSample& s,
                                           const ChannelGains& ch, const RatePair& r,
                                           double x) {
  return kind == FiniteRegion::EtwOuter ? in_etw_finite(s, ch, r, x)
                                        : in_hk_finite(s, ch, r, x);
}

// ---------------------------------------------------------------------------
// Asymptotic (high-SNR) regions over fading exponents
//
// Two conventions, mirroring the two bound families:
//   * the outer bound uses clipped link exponents X_ij = [beta_ij-gamma_ij]^+;
//   * the achievable families use unclipped X_ij = beta_ij - gamma_ij with a
//     [.]^+ applied per constraint term.
// The asymmetry is deliberate and load-bearing; do not "unify" it.
// ---------------------------------------------------------------------------

enum class AsymptoticFamily {
  EtwOuter,           ///< outer bound, 7 constraints
  HkFixedSplit,       ///< achievable, fixed split b1 = beta21, b2 = beta12, 7 constraints
  HkGeneralSplit,     ///< achievable, explicit split exponents, 7 constraints
  TreatAsNoise1,      ///< user 1 decodable at rx 1 with user 2 as noise, 1 constraint
  TreatAsNoise2,      ///< user 2 decodable at rx 2 with user 1 as noise, 1 constraint
  MacReceiver1,       ///< both users jointly decodable at rx 1, 3 constraints
  MacReceiver2,       ///< both users jointly decodable at rx 2, 3 constraints
  ReferenceTripleRate ///< previously published 2r1+r2 constraint (symmetric, unit direct gains)
};

struct AsymptoticRegion {
  AsymptoticFamily family = AsymptoticFamily::EtwOuter;
  SplitExponents split{};  // HkGeneralSplit only

  static AsymptoticRegion etw() { return {AsymptoticFamily::EtwOuter, {}}; }
  static AsymptoticRegion hk_fixed() { return {AsymptoticFamily::HkFixedSplit, {}}; }
  static AsymptoticRegion hk_general(SplitExponents s) {
    return {AsymptoticFamily::HkGeneralSplit, s};
  }
  static AsymptoticRegion treat_as_noise(int user) {
    if (user != 1 && user != 2) throw std::invalid_argument("treat_as_noise: user must be 1 or 2");
    return {user == 1 ? AsymptoticFamily::TreatAsNoise1 : AsymptoticFamily::TreatAsNoise2, {}};
  }
  static AsymptoticRegion mac_at(int receiver) {
    if (receiver != 1 && receiver != 2)
      throw std::invalid_argument("mac_at: receiver must be 1 or 2");
    return {receiver == 1 ? AsymptoticFamily::MacReceiver1 : AsymptoticFamily::MacReceiver2, {}};
  }
  static AsymptoticRegion reference_triple_rate() {
    return {AsymptoticFamily::ReferenceTripleRate, {}};
  }

  [[nodiscard]] int constraint_count() const {
    switch (family) {
      case AsymptoticFamily::EtwOuter:
      case AsymptoticFamily::HkFixedSplit:
      case AsymptoticFamily::HkGeneralSplit: return 7;
      case AsymptoticFamily::TreatAsNoise1:
      case AsymptoticFamily::TreatAsNoise2: return 1;
      case AsymptoticFamily::MacReceiver1:
      case AsymptoticFamily::MacReceiver2: return 3;
      case AsymptoticFamily::ReferenceTripleRate: return 1;
    }
    return 0;
  }

  /// Which fading exponents (order g11, g12, g21, g22) constraint k reads.
  [[nodiscard]] std::array<bool, 4> involves(int k) const {
    switch (family) {
      case AsymptoticFamily::EtwOuter:
      case AsymptoticFamily::HkFixedSplit:
        switch (k) {
          case 0: return {true, false, false, false};
          case 1: return {false, false, false, true};
          case 2: return {true, false, true, true};
          case 3: return {true, true, false, true};
          default: return {true, true, true, true};
        }
      case AsymptoticFamily::HkGeneralSplit:
        switch (k) {
          case 0: return {true, true, false, false};
          case 1: return {false, false, true, true};
          default: return {true, true, true, true};
        }
      case AsymptoticFamily::TreatAsNoise1: return {true, true, false, false};
      case AsymptoticFamily::TreatAsNoise2: return {false, false, true, true};
      case AsymptoticFamily::MacReceiver1:
        switch (k) {
          case 0: return {true, false, false, false};
          case 1: return {false, true, false, false};
          default: return {true, true, false, false};
        }
      case AsymptoticFamily::MacReceiver2:
        switch (k) {
          case 0: return {false, false, true, false};
          case 1: return {false, false, false, true};
          default: return {false, false, true, true};
        }
      case AsymptoticFamily::ReferenceTripleRate: return {true, true, true, true};
    }
    return {true, true, true, true};
  }
};

namespace detail {

inline void require_reference_shape(const ChannelGains& ch) {
  if (std::abs(ch.b11 - 1.0) > boundary_tol || std::abs(ch.b22 - 1.0) > boundary_tol ||
      std::abs(ch.b12 - ch.b21) > boundary_tol)
    throw std::invalid_argument(
        "reference triple-rate constraint requires unit direct gains and equal cross gains");
}

}  // namespace detail

/// Rate composite on the left-hand side of constraint k of the family.
[[nodiscard]] inline double constraint_lhs(const AsymptoticRegion& region, int k,
                                           const RatePair& r) {
  switch (region.family) {
    case AsymptoticFamily::EtwOuter:
    case AsymptoticFamily::HkFixedSplit:
    case AsymptoticFamily::HkGeneralSplit:
      switch (k) {
        case 0: return r.r1;
        case 1: return r.r2;
        case 2:
        case 3:
        case 4: return r.rs();
        case 5: return r.rf();
        default: return r.rg();
      }
    case AsymptoticFamily::TreatAsNoise1: return r.r1;
    case AsymptoticFamily::TreatAsNoise2: return r.r2;
    case AsymptoticFamily::MacReceiver1:
    case AsymptoticFamily::MacReceiver2:
      switch (k) {
        case 0: return r.r1;
        case 1: return r.r2;
        default: return r.rs();
      }
    case AsymptoticFamily::ReferenceTripleRate: return r.rf();
  }
  return 0.0;
}

/// Right-hand side of constraint k at fading state g.
[[nodiscard]] inline double constraint_rhs(const AsymptoticRegion& region, int k,
                                           const ChannelGains& ch, const FadingExponents& g) {
  switch (region.family) {
    case AsymptoticFamily::EtwOuter: {
      const double x11 = pos_part(ch.b11 - g.g11), x12 = pos_part(ch.b12 - g.g12);
      const double x21 = pos_part(ch.b21 - g.g21), x22 = pos_part(ch.b22 - g.g22);
      switch (k) {
        case 0: return x11;
        case 1: return x22;
        case 2: return pos_part(x11 - x21) + std::max(x21, x22);
        case 3: return pos_part(x22 - x12) + std::max(x12, x11);
        case 4: return std::max(x12, x11 - x21) + std::max(x21, x22 - x12);
        case 5:
          return pos_part(x11 - x21) + std::max(x11, x12) + std::max(x21, x22 - x12);
        default:
          return pos_part(x22 - x12) + std::max(x22, x21) + std::max(x12, x11 - x21);
      }
    }
    case AsymptoticFamily::HkFixedSplit: {
      const double x11 = ch.b11 - g.g11, x12 = ch.b12 - g.g12;
      const double x21 = ch.b21 - g.g21, x22 = ch.b22 - g.g22;
      switch (k) {
        case 0: return pos_part(x11);
        case 1: return pos_part(x22);
        case 2: return pos_part(std::max(x22, x21)) + pos_part(x11 - ch.b21);
        case 3: return pos_part(std::max(x11, x12)) + pos_part(x22 - ch.b12);
        case 4:
          return pos_part(std::max(x11 - ch.b21, x12)) + pos_part(std::max(x22 - ch.b12, x21));
        case 5:
          return pos_part(std::max(x11, x12)) + pos_part(x11 - ch.b21) +
                 pos_part(std::max(x22 - ch.b12, x21));
        default:
          return pos_part(std::max(x22, x21)) + pos_part(x22 - ch.b12) +
                 pos_part(std::max(x11 - ch.b21, x12));
      }
    }
    case AsymptoticFamily::HkGeneralSplit: {
      const double x11 = ch.b11 - g.g11, x12 = ch.b12 - g.g12;
      const double x21 = ch.b21 - g.g21, x22 = ch.b22 - g.g22;
      // Private offset p and common offset c of each user; at b1 = beta21,
      // b2 = beta12 every constraint below collapses to the fixed-split form.
      const double p1 = pos_part(region.split.b1), c1 = pos_part(-region.split.b1);
      const double p2 = pos_part(region.split.b2), c2 = pos_part(-region.split.b2);
      const double i1 = pos_part(x21 - p1);  // residual private interference at rx 2
      const double i2 = pos_part(x12 - p2);  // residual private interference at rx 1
      switch (k) {
        case 0: return pos_part(x11 - i2);
        case 1: return pos_part(x22 - i1);
        case 2:
          return pos_part(std::max(x22, x21 - c1) - i1) + pos_part(x11 - p1 - i2);
        case 3:
          return pos_part(std::max(x11, x12 - c2) - i2) + pos_part(x22 - p2 - i1);
        case 4:
          return pos_part(std::max(x11 - p1, x12 - c2) - i2) +
                 pos_part(std::max(x22 - p2, x21 - c1) - i1);
        case 5:
          return pos_part(std::max(x11, x12 - c2) - i2) + pos_part(x11 - p1 - i2) +
                 pos_part(std::max(x22 - p2, x21 - c1) - i1);
        default:
          return pos_part(std::max(x22, x21 - c1) - i1) + pos_part(x22 - p2 - i1) +
                 pos_part(std::max(x11 - p1, x12 - c2) - i2);
      }
    }
    case AsymptoticFamily::TreatAsNoise1:
      return pos_part(pos_part(ch.b11 - g.g11) - pos_part(ch.b12 - g.g12));
    case AsymptoticFamily::TreatAsNoise2:
      return pos_part(pos_part(ch.b22 - g.g22) - pos_part(ch.b21 - g.g21));
    case AsymptoticFamily::MacReceiver1: {
      const double x11 = pos_part(ch.b11 - g.g11), x12 = pos_part(ch.b12 - g.g12);
      switch (k) {
        case 0: return x11;
        case 1: return x12;
        default: return std::max(x11, x12);
      }
    }
    case AsymptoticFamily::MacReceiver2: {
      const double x21 = pos_part(ch.b21 - g.g21), x22 = pos_part(ch.b22 - g.g22);
      switch (k) {
        case 0: return x21;
        case 1: return x22;
        default: return std::max(x21, x22);
      }
    }
    case AsymptoticFamily::ReferenceTripleRate: {
      detail::require_reference_shape(ch);
      const double a = ch.b12;
      const double d11 = pos_part(1.0 - g.g11), d22 = pos_part(1.0 - g.g22);
      const double c12 = pos_part(a - g.g12), c21 = pos_part(a - g.g21);
      return pos_part(d11 - c12) + std::max(d11, c21) + std::max(c12, d22 - c21);
    }
  }
  return 0.0;
}

/// Non-strict membership: every constraint holds within boundary_tol.
[[nodiscard]] inline bool in_asymptotic_region(const AsymptoticRegion& region,
                                               const FadingExponents& g,
                                               const ChannelGains& ch, const RatePair& r) {
  const int n = region.constraint_count();
  for (int k = 0; k < n; ++k)
    if (constraint_lhs(region, k, r) > constraint_rhs(region, k, ch, g) + boundary_tol)
      return false;
  return true;
}

/// Closed violation: constraint k fails with the boundary included.
[[nodiscard]] inline bool violates_constraint(const AsymptoticRegion& region, int k,
                                              const FadingExponents& g, const ChannelGains& ch,
                                              const RatePair& r) {
  return constraint_lhs(region, k, r) >= constraint_rhs(region, k, ch, g) - boundary_tol;
}

// Convenience wrappers matching the operation surface.

[[nodiscard]] inline bool in_etw_asymptotic(const FadingExponents& g, const ChannelGains& ch,
                                            const RatePair& r) {
  return in_asymptotic_region(AsymptoticRegion::etw(), g, ch, r);
}

[[nodiscard]] inline bool in_hk_fixed_asymptotic(const FadingExponents& g,
                                                 const ChannelGains& ch, const RatePair& r) {
  return in_asymptotic_region(AsymptoticRegion::hk_fixed(), g, ch, r);
}

[[nodiscard]] inline bool in_hk_general_asymptotic(const FadingExponents& g,
                                                   const ChannelGains& ch, const RatePair& r,
                                                   SplitExponents split) {
  return in_asymptotic_region(AsymptoticRegion::hk_general(split), g, ch, r);
}

[[nodiscard]] inline bool in_simple_region(const AsymptoticRegion& region,
                                           const FadingExponents& g, const ChannelGains& ch,
                                           const RatePair& r) {
  switch (region.family) {
    case AsymptoticFamily::TreatAsNoise1:
    case AsymptoticFamily::TreatAsNoise2:
    case AsymptoticFamily::MacReceiver1:
    case AsymptoticFamily::MacReceiver2:
    case AsymptoticFamily::ReferenceTripleRate:
      return in_asymptotic_region(region, g, ch, r);
    default:
      throw std::invalid_argument("in_simple_region: not a simple region family");
  }
}

}  // namespace ifcdmt
