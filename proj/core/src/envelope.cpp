#include "graywyner/envelope.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>
#include <vector>

#include "graywyner/dual_bound.hpp"
#include "graywyner/errors.hpp"

namespace graywyner {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

double f_value(double lambda, double sigma2, double q) {
  const double s4 = sigma2 * sigma2;
  return 0.5 * std::log(kTwoPiE * kTwoPiE * s4) -
         0.5 * (1.0 + lambda) * std::log(kTwoPiE * kTwoPiE * s4 * (1.0 - q * q));
}

// Last feasible point on the segment from `inside` (feasible) towards
// `outside` (infeasible).
template <typename Pred>
double bisect_boundary(double inside, double outside, Pred&& feasible) {
  for (int it = 0; it < 200; ++it) {
    const double mid = inside + 0.5 * (outside - inside);
    if (mid == inside || mid == outside) break;
    if (feasible(mid)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside;
}

}  // namespace

EnvelopeProblem::EnvelopeProblem(double lambda, double rho) : lambda_(lambda), rho_(rho) {
  if (!std::isfinite(lambda) || !(lambda > 0.0) || !(lambda < 1.0)) {
    throw DomainError("envelope problem requires 0 < lambda < 1");
  }
  if (!std::isfinite(rho) || rho < 0.0 || !(rho < 1.0)) {
    throw DomainError("envelope problem requires 0 <= rho < 1");
  }
}

double f_objective(const EnvelopeProblem& prob, double sigma2, double q) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2) || !(std::abs(q) < 1.0)) {
    throw DomainError("f(lambda, sigma2, q) requires sigma2 > 0 and |q| < 1");
  }
  return f_value(prob.lambda(), sigma2, q);
}

bool feasible_d_rho(double rho, double sigma2, double q) {
  if (q <= rho) return sigma2 * (1.0 - q) <= (1.0 - rho) + kPsdTolerance;
  return sigma2 * (1.0 + q) <= (1.0 + rho) + kPsdTolerance;
}

bool feasible_a_rho(double rho, double sigma_x, double sigma_y, double q) {
  const CovarianceMatrix2 k_prime{sigma_x * sigma_x, q * sigma_x * sigma_y, sigma_y * sigma_y};
  return loewner_leq(k_prime, CovarianceMatrix2{1.0, rho, 1.0});
}

EnvelopeCandidate kkt_candidate(const EnvelopeProblem& prob) {
  const double lambda = prob.lambda();
  const double rho = prob.rho();
  if (lambda > rho) {
    throw DomainError("KKT candidate of the q <= rho branch requires lambda <= rho");
  }
  EnvelopeCandidate c;
  c.q = lambda;
  c.sigma2 = (1.0 - rho) / (1.0 - lambda);
  c.mu = lambda / (1.0 - rho);
  c.value = f_value(lambda, c.sigma2, c.q);
  return c;
}

KktResiduals kkt_residuals(const EnvelopeProblem& prob, const EnvelopeCandidate& c) {
  const double lambda = prob.lambda();
  KktResiduals r;
  r.stationarity_sigma2 = -lambda / c.sigma2 + c.mu * (1.0 - c.q);
  r.stationarity_q = (1.0 + lambda) * c.q / (1.0 - c.q * c.q) - c.mu * c.sigma2;
  r.complementary_slackness = c.mu * (c.sigma2 * (1.0 - c.q) - 1.0 + prob.rho());
  return r;
}

double rho_branch_value(const EnvelopeProblem& prob) {
  return f_value(prob.lambda(), 1.0, prob.rho());
}

double gap_function(double lambda, double rho) {
  return envelope_closed_form(lambda, rho) - f_value(lambda, 1.0, rho);
}

GridOracleResult grid_oracle(const EnvelopeProblem& prob, int resolution) {
  if (resolution < 100) {
    throw DomainError("grid oracle resolution must be at least 100");
  }
  const int n = resolution;
  const double rho = prob.rho();
  const double lambda = prob.lambda();

  const auto sigma2_at = [n](int i) { return static_cast<double>(i + 1) / n; };
  const auto q_at = [n](int j) { return -1.0 + (2.0 * j + 1.0) / n; };

  GridOracleResult best{0.0, 0.0, std::numeric_limits<double>::infinity()};
  const auto consider = [&](double s2, double q) {
    const double v = f_value(lambda, s2, q);
    if (std::tie(v, s2, q) < std::tie(best.value, best.sigma2, best.q)) best = {s2, q, v};
  };

  const auto idx = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  };
  std::vector<char> feasible(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s2 = sigma2_at(i);
    for (int j = 0; j < n; ++j) {
      const double q = q_at(j);
      const bool ok = feasible_d_rho(rho, s2, q);
      feasible[idx(i, j)] = ok;
      if (ok) consider(s2, q);
    }
  }

  // Boundary crossings along σ² (fixed q).
  for (int j = 0; j < n; ++j) {
    const double q = q_at(j);
    const auto pred = [&](double s2) { return feasible_d_rho(rho, s2, q); };
    for (int i = 0; i + 1 < n; ++i) {
      const bool a = feasible[idx(i, j)];
      const bool b = feasible[idx(i + 1, j)];
      if (a == b) continue;
      const double s2 = a ? bisect_boundary(sigma2_at(i), sigma2_at(i + 1), pred)
                          : bisect_boundary(sigma2_at(i + 1), sigma2_at(i), pred);
      consider(s2, q);
    }
  }

  // Boundary crossings along q (fixed σ²).
  for (int i = 0; i < n; ++i) {
    const double s2 = sigma2_at(i);
    const auto pred = [&](double q) { return feasible_d_rho(rho, s2, q); };
    for (int j = 0; j + 1 < n; ++j) {
      const bool a = feasible[idx(i, j)];
      const bool b = feasible[idx(i, j + 1)];
      if (a == b) continue;
      const double q = a ? bisect_boundary(q_at(j), q_at(j + 1), pred)
                         : bisect_boundary(q_at(j + 1), q_at(j), pred);
      consider(s2, q);
    }
  }

  return best;
}

double envelope_functional(const JointGaussianSystem& sys, double lambda) {
  const CovarianceMatrix2 cond = conditional_covariance(sys);
  return entropy_gaussian(cond.a11) + entropy_gaussian(cond.a22) -
         (1.0 + lambda) * entropy_gaussian(cond);
}

}  // namespace graywyner
