#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ifcdmt {

/// Absolute tolerance for comparisons against region boundaries and for
/// classifying which constraints attain a minimum. Boundaries carry zero
/// probability mass, so membership is non-strict everywhere.
inline constexpr double boundary_tol = 1e-9;

/// [v]^+ = max(0, v).
[[nodiscard]] constexpr double pos_part(double v) noexcept { return v > 0.0 ? v : 0.0; }

/// [v]^- = -min(0, v), so v = [v]^+ - [v]^- with both parts nonnegative.
[[nodiscard]] constexpr double neg_part(double v) noexcept { return v < 0.0 ? -v : 0.0; }

/// Extended nonnegative real: a finite value >= 0 or +infinity.
/// +infinity absorbs addition and is the identity of min, which is exactly
/// the arithmetic diversity exponents need (an unviolable constraint
/// contributes +infinity and drops out of the overall minimum).
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;

  ExtReal(double v) : v_(v) {  // NOLINT: implicit by design, values flow like doubles
    if (!(v >= 0.0)) throw std::invalid_argument("ExtReal: value must be nonnegative");
  }

  [[nodiscard]] static ExtReal infinity() noexcept {
    ExtReal e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }

  [[nodiscard]] constexpr double value() const noexcept { return v_; }
  [[nodiscard]] bool is_finite() const noexcept { return std::isfinite(v_); }

  constexpr operator double() const noexcept { return v_; }  // NOLINT

 private:
  double v_ = 0.0;
};

}  // namespace ifcdmt
