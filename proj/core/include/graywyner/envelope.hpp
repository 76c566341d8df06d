#pragma once

// Constrained minimization behind the covariance-envelope bound.
//
// For K' = [[σx², qσxσy], [qσxσy, σy²]] with 0 ⪯ K' ⪯ K = [[1,ρ],[ρ,1]], the
// functional h(X') + h(Y') - (1+λ) h(X',Y') depends on K' only through
// σ² = σxσy and q:
//
//   f(λ, σ², q) = ½ ln((2πe)²σ⁴) - ((1+λ)/2) ln((2πe)²σ⁴(1-q²)).
//
// The Löwner constraint K' ⪯ K (the set A_ρ over (σx, σy, q)) is contained in
//
//   D_ρ = { (σ², q) :  q <= ρ  and  σ²(1-q) <= 1-ρ,
//                      q >  ρ  and  σ²(1+q) <= 1+ρ }
//
// and on D_ρ the minimum of f for 0 < λ <= ρ sits at the KKT point
// q* = λ, σ²* = (1-ρ)/(1-λ), μ* = λ/(1-ρ), where the constraint
// σ²(1-q) <= 1-ρ is active.
//
// Every point of D_ρ has σ² <= 1: for q <= ρ, σ² <= (1-ρ)/(1-q) <= 1 and for
// q > ρ, σ² <= (1+ρ)/(1+q) < 1. This is consistent with the trace condition
// σx² + σy² <= 2 of A_ρ, which forces σxσy <= 1. The grid oracle therefore
// searches σ² in (0, 1].

#include "graywyner/gaussian.hpp"

namespace graywyner {

class EnvelopeProblem {
 public:
  // Throws DomainError unless 0 < lambda < 1 and 0 <= rho < 1.
  EnvelopeProblem(double lambda, double rho);

  [[nodiscard]] double lambda() const { return lambda_; }
  [[nodiscard]] double rho() const { return rho_; }

 private:
  double lambda_;
  double rho_;
};

struct EnvelopeCandidate {
  double q = 0.0;
  double sigma2 = 0.0;
  double mu = 0.0;
  double value = 0.0;
};

struct KktResiduals {
  // ∂f/∂σ² + μ(1-q)
  double stationarity_sigma2 = 0.0;
  // ∂f/∂q - μσ²
  double stationarity_q = 0.0;
  // μ(σ²(1-q) - 1 + ρ)
  double complementary_slackness = 0.0;
};

struct GridOracleResult {
  double sigma2 = 0.0;
  double q = 0.0;
  double value = 0.0;
};

// f(λ, σ², q) in nats. Throws DomainError unless σ² > 0 and |q| < 1.
[[nodiscard]] double f_objective(const EnvelopeProblem& prob, double sigma2, double q);

// Membership in D_ρ, with absolute slack kPsdTolerance on the linear
// constraints.
[[nodiscard]] bool feasible_d_rho(double rho, double sigma2, double q);

// Membership in A_ρ: K' ⪯ [[1,ρ],[ρ,1]] for K' built from (σx, σy, q).
[[nodiscard]] bool feasible_a_rho(double rho, double sigma_x, double sigma_y, double q);

// KKT point of the q <= ρ branch. Throws DomainError if λ > ρ.
[[nodiscard]] EnvelopeCandidate kkt_candidate(const EnvelopeProblem& prob);

// Residuals of the stationarity and complementary-slackness conditions of the
// Lagrangian f + μ(σ²(1-q) - 1 + ρ), evaluated at `candidate`.
[[nodiscard]] KktResiduals kkt_residuals(const EnvelopeProblem& prob,
                                         const EnvelopeCandidate& candidate);

// f(λ, 1, ρ): the minimum over the q > ρ branch, attained at its q = ρ end.
[[nodiscard]] double rho_branch_value(const EnvelopeProblem& prob);

// h(λ) = f(λ, (1-ρ)/(1-λ), λ) - f(λ, 1, ρ), for 0 <= λ <= ρ. Non-positive,
// increasing and concave on that interval, with h(ρ) = 0.
[[nodiscard]] double gap_function(double lambda, double rho);

// Brute-force minimization of f over D_ρ ∩ {σ² ∈ (0,1], q ∈ (-1,1)}.
//
// Evaluates f on a resolution x resolution grid (σ²_i = i/n, q_j uniform on
// the open interval). Because the minimum lies on the boundary of D_ρ, every
// pair of grid neighbours (along either axis) that straddles the boundary is
// additionally bisected on the membership predicate and the last feasible
// point is added as a candidate. All candidates are feasible, so the result
// is an upper bound on the true minimum. Ties are broken by (value, σ², q).
//
// Throws DomainError if resolution < 100.
[[nodiscard]] GridOracleResult grid_oracle(const EnvelopeProblem& prob, int resolution = 2000);

// h(X|W) + h(Y|W) - (1+λ) h(X,Y|W) for a jointly Gaussian (X, Y, W).
// For a unit-variance source this is bounded below by
// envelope_closed_form(λ, ρ) whenever λ <= |ρ|.
[[nodiscard]] double envelope_functional(const JointGaussianSystem& sys, double lambda);

}  // namespace graywyner
