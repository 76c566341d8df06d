#pragma once

// Lower bound on the rate from Lagrangian duality.
//
// Relaxing the private-rate constraint with a multiplier ν, bounding the
// conditional entropies of the reconstruction errors by ½ ln(2πeΔ), and
// evaluating the covariance envelope (envelope_closed_form) at λ = 1/ν - 1
// gives, for unit-variance sources and 1/(1+ρ) <= ν <= 1,
//
//   ℓ(ν) = ½ ln((2πe)²(1-ρ²)) - να - ν ln(2πeΔ)
//          + (ν/2) ln(ν²/(2ν-1)) - ((1-ν)/2) ln((2πe)²(1-ρ)²/(2ν-1)).
//
// ℓ is concave with ℓ'(ν) = ln(ν(1-ρ) / ((2ν-1) Δe^α)) and
// ℓ''(ν) = -1/(ν(2ν-1)). Any ν in the interval yields a valid lower bound; the
// best one is the stationary point ν* = Δe^α / (2Δe^α - 1 + ρ) when it lies
// in the interval and the boundary ν = 1 otherwise.

#include "graywyner/closed_form.hpp"
#include "graywyner/gaussian.hpp"

namespace graywyner {

// Lagrange multiplier ν with ½ < ν <= 1.
class DualVariable {
 public:
  // Throws DomainError unless ½ < nu <= 1.
  explicit DualVariable(double nu);

  // ν = 1/(1+λ); throws DomainError unless 0 <= lambda < 1.
  static DualVariable from_lambda(double lambda);

  [[nodiscard]] double nu() const { return nu_; }
  [[nodiscard]] double lambda() const { return 1.0 / nu_ - 1.0; }

 private:
  double nu_;
};

struct DualCertificate {
  DualVariable nu_star;
  // max(0, ℓ(ν*)) in nats. The clamp at zero is the trivial bound I >= 0 and
  // only matters in the FREE regime.
  double value;
  // True when the maximizer is an endpoint of [1/(1+ρ), 1] rather than an
  // interior stationary point.
  bool clamped_to_boundary;
  // Independent golden-section maximization of ℓ over the same interval.
  double search_nu;
  double search_value;
};

// ℓ(ν). The source must be normalized (σ² = 1, ρ >= 0); otherwise DomainError.
[[nodiscard]] double dual_objective(const DualVariable& nu, const SourcePair& src,
                                    const OperatingPoint& pt);

// ℓ(ν) assembled from its pieces: h(X,Y) - να - ν ln(2πeΔ) plus ν times the
// envelope bound at λ = 1/ν - 1. Must agree with dual_objective(); it exists
// as a second algebraic route. Requires ν >= 1/(1+ρ).
[[nodiscard]] double dual_objective_assembled(const DualVariable& nu, const SourcePair& src,
                                              const OperatingPoint& pt);

// dℓ/dν.
[[nodiscard]] double dual_derivative(const DualVariable& nu, const SourcePair& src,
                                     const OperatingPoint& pt);

// d²ℓ/dν² = -1/(ν(2ν-1)).
[[nodiscard]] double dual_second_derivative(const DualVariable& nu);

// Stationary point of ℓ. Only defined in the SHARED regime, where it lies in
// [1/(1+ρ), 1]; throws RegimeError elsewhere.
[[nodiscard]] DualVariable nu_star(const SourcePair& src, const OperatingPoint& pt);

// Best dual bound at an operating point. Normalizes internally.
[[nodiscard]] DualCertificate lower_bound(const SourcePair& src, const OperatingPoint& pt);

// Lower bound on min over 0 ⪯ K' ⪯ [[1,ρ],[ρ,1]] of
// h(X') + h(Y') - (1+λ) h(X',Y'):
//
//   ½ ln(1/(1-λ²)) - (λ/2) ln((2πe)²(1-ρ)²(1+λ)/(1-λ)),   0 <= λ <= |ρ|.
//
// Throws DomainError if λ < 0 or λ > |ρ|.
[[nodiscard]] double envelope_closed_form(double lambda, double rho);

}  // namespace graywyner
