#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "ifcdmt/scalar.hpp"

namespace ifcdmt {

// ---------------------------------------------------------------------------
// Channel parameterization
//
// Everything is expressed in exponents of a common SNR scale x > 1: the mean
// received power of the link into receiver c from user u is x^{beta_cu}, the
// target rates are R_u = log(1 + x^{r_u}), and a fading realization attenuates
// link (i,j) by x^{-gamma_ij}. All exponents are nonnegative by contract;
// negative inputs are rejected rather than clamped.
// ---------------------------------------------------------------------------

/// Average received SNR/INR exponents of the four links.
struct ChannelGains {
  double b11, b12, b21, b22;

  ChannelGains(double beta11, double beta12, double beta21, double beta22)
      : b11(beta11), b12(beta12), b21(beta21), b22(beta22) {
    if (!(b11 >= 0.0 && b12 >= 0.0 && b21 >= 0.0 && b22 >= 0.0))
      throw std::invalid_argument("ChannelGains: all exponents must be nonnegative");
  }

  /// Exchange the roles of the two users (1 <-> 2).
  [[nodiscard]] ChannelGains user_swapped() const { return {b22, b21, b12, b11}; }

  [[nodiscard]] double sum() const { return b11 + b12 + b21 + b22; }
};

/// Multiplexing gains of the two users and their composite rate exponents.
struct RatePair {
  double r1, r2;

  RatePair(double rate1, double rate2) : r1(rate1), r2(rate2) {
    if (!(r1 >= 0.0 && r2 >= 0.0))
      throw std::invalid_argument("RatePair: multiplexing gains must be nonnegative");
  }

  [[nodiscard]] double rs() const { return r1 + r2; }
  [[nodiscard]] double rf() const { return 2.0 * r1 + r2; }
  [[nodiscard]] double rg() const { return r1 + 2.0 * r2; }

  [[nodiscard]] RatePair user_swapped() const { return {r2, r1}; }
};

/// Per-realization fading exponents gamma_ij >= 0 (worse channel = larger).
struct FadingExponents {
  double g11, g12, g21, g22;

  FadingExponents(double gamma11, double gamma12, double gamma21, double gamma22)
      : g11(gamma11), g12(gamma12), g21(gamma21), g22(gamma22) {
    if (!(g11 >= 0.0 && g12 >= 0.0 && g21 >= 0.0 && g22 >= 0.0))
      throw std::invalid_argument("FadingExponents: all exponents must be nonnegative");
  }

  [[nodiscard]] FadingExponents user_swapped() const { return {g22, g21, g12, g11}; }

  [[nodiscard]] double sum() const { return g11 + g12 + g21 + g22; }
};

// ---------------------------------------------------------------------------
// Interference regimes
// ---------------------------------------------------------------------------

enum class Regime { Weak, Mixed, Strong, VeryStrong };

[[nodiscard]] constexpr const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Weak: return "weak";
    case Regime::Mixed: return "mixed";
    case Regime::Strong: return "strong";
    case Regime::VeryStrong: return "very-strong";
  }
  return "?";
}

/// Classify the network geometry by comparing cross-link and direct-link
/// exponents. Very strong: min(b12, b21) >= b11 + b22 (interference can be
/// removed entirely before decoding). Invariant under a consistent user swap.
[[nodiscard]] inline Regime classify_regime(const ChannelGains& ch) {
  const double t = boundary_tol;
  if (std::min(ch.b12, ch.b21) >= ch.b11 + ch.b22 - t) return Regime::VeryStrong;
  if (ch.b12 >= ch.b22 - t && ch.b21 >= ch.b11 - t) return Regime::Strong;
  if (ch.b12 < ch.b22 && ch.b21 < ch.b11) return Regime::Weak;
  return Regime::Mixed;
}

// ---------------------------------------------------------------------------
// Power splits
// ---------------------------------------------------------------------------

/// Resolved private/common split exponents. The private fraction of user u's
/// power is 1/(1 + x^{b_u}), so b -> -inf sends everything private and
/// b -> +inf everything common; finite b places the private part x^{-[b]^+}
/// below the user's full power.
struct SplitExponents {
  double b1 = 0.0, b2 = 0.0;
};

struct PowerSplit {
  enum class Mode {
    FixedEtkin,         ///< b1 = beta21, b2 = beta12: private interference at the noise floor
    NoSplitAllPrivate,  ///< both users send private only (interference treated as noise)
    NoSplitAllCommon,   ///< both users send common only (joint decoding everywhere)
    General,            ///< explicit (b1, b2)
  };

  Mode mode = Mode::FixedEtkin;
  double b1 = 0.0, b2 = 0.0;  // used by General

  static PowerSplit fixed_etkin() { return {}; }
  static PowerSplit all_private() { return {Mode::NoSplitAllPrivate, 0.0, 0.0}; }
  static PowerSplit all_common() { return {Mode::NoSplitAllCommon, 0.0, 0.0}; }
  static PowerSplit general(double b1, double b2) { return {Mode::General, b1, b2}; }

  /// Resolve against a concrete channel. FixedEtkin depends on the gains; the
  /// no-split modes map to infinite exponents.
  [[nodiscard]] SplitExponents resolve(const ChannelGains& ch) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (mode) {
      case Mode::FixedEtkin: return {ch.b21, ch.b12};
      case Mode::NoSplitAllPrivate: return {-inf, -inf};
      case Mode::NoSplitAllCommon: return {inf, inf};
      case Mode::General: return {b1, b2};
    }
    return {};
  }
};

// ---------------------------------------------------------------------------
// Diversity breakdowns
// ---------------------------------------------------------------------------

/// Labels of the seven rate constraints of a region family, in the fixed
/// order: per-user (A, B), sum-rate (C, D, E), 2r1+r2 (F), r1+2r2 (G).
enum class ConstraintLabel : int { A = 0, B, C, D, E, F, G };

inline constexpr int constraint_count = 7;

[[nodiscard]] constexpr char constraint_name(ConstraintLabel l) noexcept {
  return static_cast<char>('A' + static_cast<int>(l));
}

/// Per-constraint diversity exponents of one bound family, their minimum, and
/// the set of constraints attaining it.
struct DiversityBreakdown {
  std::array<ExtReal, constraint_count> per_constraint{};
  ExtReal overall{};
  std::array<bool, constraint_count> binding{};

  [[nodiscard]] ExtReal operator[](ConstraintLabel l) const {
    return per_constraint[static_cast<int>(l)];
  }

  [[nodiscard]] std::vector<ConstraintLabel> binding_labels() const {
    std::vector<ConstraintLabel> out;
    for (int i = 0; i < constraint_count; ++i)
      if (binding[i]) out.push_back(static_cast<ConstraintLabel>(i));
    return out;
  }
};

/// Assemble a breakdown from raw per-constraint values: overall is the exact
/// minimum, binding the argmin set within boundary_tol.
[[nodiscard]] inline DiversityBreakdown make_breakdown(
    const std::array<double, constraint_count>& values) {
  DiversityBreakdown b;
  double overall = std::numeric_limits<double>::infinity();
  for (int i = 0; i < constraint_count; ++i) {
    b.per_constraint[i] = ExtReal(values[i]);
    overall = std::min(overall, values[i]);
  }
  b.overall = ExtReal(overall);
  for (int i = 0; i < constraint_count; ++i) {
    const double v = values[i];
    b.binding[i] = std::isfinite(v) ? std::abs(v - overall) <= boundary_tol
                                    : !std::isfinite(overall);
  }
  return b;
}

}  // namespace ifcdmt
