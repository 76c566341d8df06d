#include "graywyner/achievability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "graywyner/errors.hpp"

namespace graywyner {

namespace {

// Number of halvings below the first uniform PAIR grid point.
constexpr int kPairTailPoints = 60;

std::optional<JointGaussianSystem> make_system(const SourcePair& src, const AuxiliarySpec& spec) {
  const double s2 = src.sigma2();
  const double rho = src.rho();
  const CovarianceMatrix2 kxy = src.covariance();

  if (spec.kind == AuxiliarySpec::Kind::kScalar) {
    const double c = spec.parameter;
    const double sign = rho < 0.0 ? -1.0 : 1.0;
    const double cov = c * std::sqrt(s2);
    auto sys = JointGaussianSystem::scalar(kxy, {cov, sign * cov});
    if (!stacked_psd(sys)) return std::nullopt;
    return sys;
  }

  const double t = spec.parameter;
  const double t_max = s2 * (1.0 - std::abs(rho));
  if (!(t > 0.0) || t > t_max + kPsdTolerance * s2) return std::nullopt;
  // X = W1 + E1, Y = W2 + E2; W_k normalized by sqrt(σ² - t).
  const double w_var = s2 - t;
  const double a = std::sqrt(w_var);
  const double cross_cov = rho * s2 / a;
  const double w_corr = std::clamp(rho * s2 / w_var, -1.0, 1.0);
  auto sys = JointGaussianSystem::pair(kxy, w_corr, {a, cross_cov}, {cross_cov, a});
  if (!stacked_psd(sys)) return std::nullopt;
  return sys;
}

// Last feasible parameter between `inside` (feasible) and `outside`.
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

JointGaussianSystem build_system(const SourcePair& src, const AuxiliarySpec& spec) {
  if (spec.kind == AuxiliarySpec::Kind::kScalar &&
      (!std::isfinite(spec.parameter) || spec.parameter < 0.0 || spec.parameter > 1.0)) {
    throw InvalidArgument("scalar auxiliary requires 0 <= c <= 1");
  }
  auto sys = make_system(src, spec);
  if (!sys) {
    throw PsdViolation(spec.kind == AuxiliarySpec::Kind::kScalar
                           ? "scalar auxiliary: stacked covariance is not PSD"
                           : "pair auxiliary requires 0 < t <= sigma2 (1 - |rho|)");
  }
  return *sys;
}

AchievablePoint achievable_point(const JointGaussianSystem& sys, double delta) {
  if (!std::isfinite(delta) || !(delta > 0.0)) {
    throw InvalidArgument("distortion must satisfy delta > 0");
  }
  const CovarianceMatrix2 cond = conditional_covariance(sys);
  AchievablePoint p;
  p.rc = mutual_information_xy_w(sys);
  p.alpha_needed = 0.5 * log_plus(cond.a11 / delta) + 0.5 * log_plus(cond.a22 / delta);
  p.distortion = std::max(std::min(delta, cond.a11), std::min(delta, cond.a22));
  return p;
}

AuxiliaryChoice optimal_auxiliary(const SourcePair& src, const OperatingPoint& pt) {
  const double d = effective_distortion(src, pt);
  switch (classify_regime(src, pt)) {
    case Regime::kShared:
      return {AuxiliarySpec::scalar(std::sqrt(std::max(0.0, 1.0 - d))), false};
    case Regime::kSaturated:
      return {AuxiliarySpec::pair(d * src.sigma2()), false};
    case Regime::kFree:
      break;
  }
  return {AuxiliarySpec::scalar(0.0), true};
}

OracleResult search_oracle(const SourcePair& src, const OperatingPoint& pt, int resolution) {
  if (resolution < 100) {
    throw DomainError("search oracle resolution must be at least 100");
  }
  const int n = resolution;

  const auto evaluate = [&](const AuxiliarySpec& spec) -> std::optional<AchievablePoint> {
    auto sys = make_system(src, spec);
    if (!sys) return std::nullopt;
    try {
      AchievablePoint p = achievable_point(*sys, pt.delta());
      if (p.alpha_needed <= pt.alpha()) return p;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  std::optional<OracleResult> best;
  const auto consider = [&](const AuxiliarySpec& spec, const AchievablePoint& p) {
    if (!best || std::make_tuple(p.rc, spec.kind, spec.parameter) <
                     std::make_tuple(best->point.rc, best->spec.kind, best->spec.parameter)) {
      best = OracleResult{p, spec};
    }
  };

  const auto scan = [&](AuxiliarySpec::Kind kind, const std::vector<double>& grid) {
    const auto make = [kind](double x) { return AuxiliarySpec{kind, x}; };
    const auto feasible = [&](double x) { return evaluate(make(x)).has_value(); };
    std::vector<char> ok(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (auto p = evaluate(make(grid[k]))) {
        ok[k] = 1;
        consider(make(grid[k]), *p);
      }
    }
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      if (ok[k] == ok[k + 1]) continue;
      const double x = ok[k] ? bisect_boundary(grid[k], grid[k + 1], feasible)
                             : bisect_boundary(grid[k + 1], grid[k], feasible);
      if (auto p = evaluate(make(x))) consider(make(x), *p);
    }
  };

  std::vector<double> c_grid(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c_grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / n;
  scan(AuxiliarySpec::Kind::kScalar, c_grid);

  const double t_max = src.sigma2() * (1.0 - std::abs(src.rho()));
  std::vector<double> t_grid;
  t_grid.reserve(static_cast<std::size_t>(n + kPairTailPoints));
  const double t_first = t_max / n;
  for (int k = kPairTailPoints; k >= 1; --k) t_grid.push_back(std::ldexp(t_first, -k));
  for (int k = 1; k <= n; ++k) t_grid.push_back(t_max * static_cast<double>(k) / n);
  scan(AuxiliarySpec::Kind::kPair, t_grid);

  if (!best) {
    throw Infeasible("no Gaussian auxiliary on the search grid meets the private-rate budget");
  }
  return *best;
}

}  // namespace graywyner
