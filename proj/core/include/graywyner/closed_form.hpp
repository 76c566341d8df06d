#pragma once

// Closed-form Gray-Wyner rate-distortion function of a symmetric bivariate
// Gaussian source under mean-squared error, with a common distortion budget
// Δ and a private sum-rate budget α:
//
//   d = Δ e^α / σ²
//   SATURATED  d < 1 - |ρ|        R = ½ ln⁺((1 - ρ²) / d²)
//   SHARED     1 - |ρ| <= d <= 1  R = ½ ln⁺((1 + |ρ|) / (2d + |ρ| - 1))
//   FREE       d > 1              R = 0
//
// The rate depends on (σ², ρ, Δ, α) only through d and |ρ|; every entry point
// goes through normalize() so that scaling and sign invariance hold exactly.

#include <string_view>

#include "graywyner/gaussian.hpp"

namespace graywyner {

// One query: MSE budget Δ per source and private sum-rate budget α in nats.
class OperatingPoint {
 public:
  // Throws InvalidArgument unless delta > 0, alpha >= 0 and both are finite.
  OperatingPoint(double delta, double alpha);

  [[nodiscard]] double delta() const { return delta_; }
  [[nodiscard]] double alpha() const { return alpha_; }

  friend bool operator==(const OperatingPoint&, const OperatingPoint&) = default;

 private:
  double delta_;
  double alpha_;
};

enum class Regime { kShared, kSaturated, kFree };

[[nodiscard]] std::string_view to_string(Regime regime);

struct NormalizedQuery {
  SourcePair source;
  OperatingPoint point;
};

// Maps (σ², ρ, Δ, α) to (1, |ρ|, Δ/σ², α).
[[nodiscard]] NormalizedQuery normalize(const SourcePair& src, const OperatingPoint& pt);

// Δ e^α / σ², the only combination of (σ², Δ, α) the rate depends on.
[[nodiscard]] double effective_distortion(const SourcePair& src, const OperatingPoint& pt);

// The point d = 1 - |ρ| itself is assigned to SHARED.
[[nodiscard]] Regime classify_regime(const SourcePair& src, const OperatingPoint& pt);

// max(ln x, 0); non-positive x maps to 0.
[[nodiscard]] double log_plus(double x);

[[nodiscard]] double rate_closed_form(const SourcePair& src, const OperatingPoint& pt);

// Wyner's common information ½ ln((1 + |ρ|) / (1 - |ρ|)), the value of the
// rate at the branch point d = 1 - |ρ|.
[[nodiscard]] double wyner_ci(const SourcePair& src);

}  // namespace graywyner
