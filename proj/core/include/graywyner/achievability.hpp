#pragma once

// Upper bounds from explicit jointly Gaussian auxiliaries.
//
// Given W, the common link carries I(X,Y;W) and each private link codes its
// source conditionally on W at the Gaussian rate ½ ln⁺(Var(·|W)/Δ). Two
// families are enough to reach the closed form:
//
//   SCALAR(c)  one-dimensional W with Cov(X,W) = cσ, Cov(Y,W) = sgn(ρ)cσ;
//              Var(·|W) = σ²(1-c²). Attains the SHARED branch at
//              c² = 1 - Δe^α/σ².
//   PAIR(t)    X = W1 + E1, Y = W2 + E2 with Var(Ei) = t independent of W and
//              Cov(W1,W2) = ρσ²; K_XY|W = diag(t, t). Valid for
//              0 < t <= σ²(1-|ρ|). Attains the SATURATED branch at t = Δe^α.
//
// Asymmetric scalar auxiliaries (Cov(X,W) != ±Cov(Y,W)) are not part of the
// search family: the source is exchangeable and both sources share one Δ.

#include "graywyner/closed_form.hpp"
#include "graywyner/gaussian.hpp"

namespace graywyner {

struct AuxiliarySpec {
  enum class Kind { kScalar, kPair };

  Kind kind = Kind::kScalar;
  // c for SCALAR (dimensionless), t for PAIR (source-units²).
  double parameter = 0.0;

  static AuxiliarySpec scalar(double c) { return {Kind::kScalar, c}; }
  static AuxiliarySpec pair(double t) { return {Kind::kPair, t}; }

  friend bool operator==(const AuxiliarySpec&, const AuxiliarySpec&) = default;
};

struct AchievablePoint {
  // Common rate I(X,Y;W), nats.
  double rc = 0.0;
  // Private sum-rate needed for distortion Δ on both sources, nats.
  double alpha_needed = 0.0;
  // Largest per-source distortion attained, min(Δ, Var(·|W)).
  double distortion = 0.0;
};

struct AuxiliaryChoice {
  AuxiliarySpec spec;
  // Set in the FREE regime, where the trivial SCALAR(0) is returned.
  bool zero_rate = false;
};

struct OracleResult {
  AchievablePoint point;
  AuxiliarySpec spec;
};

// Throws PsdViolation if the stacked covariance is not PSD (SCALAR with
// c² > (1+|ρ|)/2, PAIR with t outside (0, σ²(1-|ρ|)]) and InvalidArgument
// for c outside [0, 1].
[[nodiscard]] JointGaussianSystem build_system(const SourcePair& src, const AuxiliarySpec& spec);

// Throws InvalidArgument if delta <= 0; propagates gaussian errors.
[[nodiscard]] AchievablePoint achievable_point(const JointGaussianSystem& sys, double delta);

// Auxiliary that attains the closed form at `pt`.
[[nodiscard]] AuxiliaryChoice optimal_auxiliary(const SourcePair& src, const OperatingPoint& pt);

// Minimum common rate over SCALAR(c), c on a uniform grid over [0, 1], and
// PAIR(t), t on a uniform grid over (0, σ²(1-|ρ|)] extended by a geometric
// tail towards 0, subject to alpha_needed <= α. Adjacent grid points that
// straddle the feasibility boundary are bisected and the last feasible
// parameter is added as a candidate. Ties are broken by (rc, kind, parameter).
//
// Throws DomainError if resolution < 100 and Infeasible if no candidate
// satisfies the constraint.
[[nodiscard]] OracleResult search_oracle(const SourcePair& src, const OperatingPoint& pt,
                                         int resolution = 10000);

}  // namespace graywyner
