#include "graywyner/dual_bound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "graywyner/errors.hpp"
#include "graywyner/golden_section.hpp"

namespace graywyner {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

// Golden-section cross-check: bracket offset from the envelope-validity edge
// 1/(1+ρ) and target bracket width.
constexpr double kSearchEdgeOffset = 1e-12;
constexpr double kSearchTolerance = 1e-10;

// λ may exceed |ρ| by rounding when it is derived from ν = 1/(1+ρ).
constexpr double kLambdaSlack = 1e-12;

void require_normalized(const SourcePair& src) {
  if (src.sigma2() != 1.0 || src.rho() < 0.0) {
    throw DomainError("dual objective expects a normalized source (sigma2 = 1, rho >= 0)");
  }
}

double validity_edge(double rho) { return 1.0 / (1.0 + rho); }

}  // namespace

DualVariable::DualVariable(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || !(nu > 0.5) || nu > 1.0) {
    throw DomainError("dual variable must satisfy 1/2 < nu <= 1 (got " + std::to_string(nu) +
                      ")");
  }
}

DualVariable DualVariable::from_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || !(lambda < 1.0)) {
    throw DomainError("lambda must satisfy 0 <= lambda < 1");
  }
  return DualVariable(1.0 / (1.0 + lambda));
}

double dual_objective(const DualVariable& dual, const SourcePair& src, const OperatingPoint& pt) {
  require_normalized(src);
  const double nu = dual.nu();
  const double rho = src.rho();
  const double two_nu_m1 = 2.0 * nu - 1.0;
  return 0.5 * std::log(kTwoPiE * kTwoPiE * (1.0 - rho * rho))  //
         - nu * pt.alpha()                                      //
         - nu * std::log(kTwoPiE * pt.delta())                  //
         + 0.5 * nu * std::log(nu * nu / two_nu_m1)             //
         - 0.5 * (1.0 - nu) * std::log(kTwoPiE * kTwoPiE * (1.0 - rho) * (1.0 - rho) / two_nu_m1);
}

double dual_objective_assembled(const DualVariable& dual, const SourcePair& src,
                                const OperatingPoint& pt) {
  require_normalized(src);
  const double nu = dual.nu();
  const double rho = src.rho();
  const double joint_entropy = entropy_gaussian(src.covariance());
  const double distortion_entropy = 2.0 * entropy_gaussian(pt.delta());
  return joint_entropy - nu * pt.alpha() - nu * distortion_entropy +
         nu * envelope_closed_form(dual.lambda(), rho);
}

double dual_derivative(const DualVariable& dual, const SourcePair& src, const OperatingPoint& pt) {
  require_normalized(src);
  const double nu = dual.nu();
  return std::log(nu * (1.0 - src.rho()) / ((2.0 * nu - 1.0) * pt.delta())) - pt.alpha();
}

double dual_second_derivative(const DualVariable& dual) {
  const double nu = dual.nu();
  return -1.0 / (nu * (2.0 * nu - 1.0));
}

DualVariable nu_star(const SourcePair& src, const OperatingPoint& pt) {
  const Regime regime = classify_regime(src, pt);
  if (regime != Regime::kShared) {
    throw RegimeError("stationary dual variable only exists in the SHARED regime (got " +
                      std::string(to_string(regime)) + ")");
  }
  const NormalizedQuery q = normalize(src, pt);
  const double rho = q.source.rho();
  const double d = q.point.delta() * std::exp(q.point.alpha());
  const double nu = d / (2.0 * d - 1.0 + rho);
  return DualVariable(std::clamp(nu, validity_edge(rho), 1.0));
}

DualCertificate lower_bound(const SourcePair& src, const OperatingPoint& pt) {
  const NormalizedQuery q = normalize(src, pt);
  const double rho = q.source.rho();
  const double lo = validity_edge(rho);

  double nu = 1.0;
  bool clamped = true;
  switch (classify_regime(src, pt)) {
    case Regime::kShared:
      nu = nu_star(src, pt).nu();
      clamped = false;
      break;
    case Regime::kSaturated:
      nu = 1.0;
      break;
    case Regime::kFree:
      nu = lo;
      break;
  }

  const DualVariable best(nu);
  const double value = std::max(0.0, dual_objective(best, q.source, q.point));

  const auto ell = [&](double x) { return dual_objective(DualVariable(x), q.source, q.point); };
  const ScalarOptimum search =
      golden_section_maximize(ell, lo + kSearchEdgeOffset, 1.0, kSearchTolerance);

  return DualCertificate{best, value, clamped, search.x, std::max(0.0, search.value)};
}

double envelope_closed_form(double lambda, double rho) {
  const double r = std::abs(rho);
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > r + kLambdaSlack || !(r < 1.0)) {
    throw DomainError("envelope bound requires 0 <= lambda <= |rho| < 1");
  }
  return 0.5 * std::log(1.0 / (1.0 - lambda * lambda)) -
         0.5 * lambda *
             std::log(kTwoPiE * kTwoPiE * (1.0 - r) * (1.0 - r) * (1.0 + lambda) / (1.0 - lambda));
}

}  // namespace graywyner
