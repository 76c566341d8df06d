#include "graywyner/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graywyner/errors.hpp"

namespace graywyner {

OperatingPoint::OperatingPoint(double delta, double alpha) : delta_(delta), alpha_(alpha) {
  if (!std::isfinite(delta) || !(delta > 0.0)) {
    throw InvalidArgument("distortion must satisfy delta > 0 (got " + std::to_string(delta) +
                          ")");
  }
  if (!std::isfinite(alpha) || !(alpha >= 0.0)) {
    throw InvalidArgument("private sum-rate must satisfy alpha >= 0 (got " +
                          std::to_string(alpha) + ")");
  }
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kShared:
      return "SHARED";
    case Regime::kSaturated:
      return "SATURATED";
    case Regime::kFree:
      return "FREE";
  }
  return "UNKNOWN";
}

NormalizedQuery normalize(const SourcePair& src, const OperatingPoint& pt) {
  return {SourcePair(1.0, std::abs(src.rho())),
          OperatingPoint(pt.delta() / src.sigma2(), pt.alpha())};
}

namespace {

// d = Δ' e^α for an already normalized query.
double unit_effective_distortion(const NormalizedQuery& q) {
  return q.point.delta() * std::exp(q.point.alpha());
}

Regime classify_unit(double rho, double d) {
  if (d > 1.0) return Regime::kFree;
  if (d < 1.0 - rho) return Regime::kSaturated;
  return Regime::kShared;
}

}  // namespace

double effective_distortion(const SourcePair& src, const OperatingPoint& pt) {
  return unit_effective_distortion(normalize(src, pt));
}

Regime classify_regime(const SourcePair& src, const OperatingPoint& pt) {
  const NormalizedQuery q = normalize(src, pt);
  return classify_unit(q.source.rho(), unit_effective_distortion(q));
}

double log_plus(double x) {
  if (!(x > 0.0)) return 0.0;
  return std::max(std::log(x), 0.0);
}

double rate_closed_form(const SourcePair& src, const OperatingPoint& pt) {
  const NormalizedQuery q = normalize(src, pt);
  const double rho = q.source.rho();
  const double d = unit_effective_distortion(q);
  switch (classify_unit(rho, d)) {
    case Regime::kShared:
      return 0.5 * log_plus((1.0 + rho) / (2.0 * d + rho - 1.0));
    case Regime::kSaturated:
      return 0.5 * log_plus((1.0 - rho * rho) / (d * d));
    case Regime::kFree:
      return 0.0;
  }
  return 0.0;
}

double wyner_ci(const SourcePair& src) {
  const double rho = std::abs(src.rho());
  return 0.5 * std::log((1.0 + rho) / (1.0 - rho));
}

}  // namespace graywyner
