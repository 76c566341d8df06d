#include "graywyner/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "graywyner/errors.hpp"

namespace graywyner {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

bool finite(double x) { return std::isfinite(x); }

}  // namespace

bool CovarianceMatrix2::is_finite() const { return finite(a11) && finite(a12) && finite(a22); }

SourcePair::SourcePair(double sigma2, double rho) : sigma2_(sigma2), rho_(rho) {
  if (!finite(sigma2) || !(sigma2 > 0.0)) {
    throw InvalidArgument("source variance must satisfy sigma2 > 0 (got " +
                          std::to_string(sigma2) + ")");
  }
  if (!finite(rho) || !(std::abs(rho) < 1.0)) {
    throw InvalidArgument("correlation must satisfy |rho| < 1 (got " + std::to_string(rho) +
                          ")");
  }
}

JointGaussianSystem::JointGaussianSystem(const CovarianceMatrix2& kxy, int aux_dim,
                                         double w_corr, std::array<Column, 2> cross)
    : kxy_(kxy), aux_dim_(aux_dim), w_corr_(w_corr), cross_(cross) {
  if (!kxy.is_finite() || !finite(w_corr) || !finite(cross[0][0]) || !finite(cross[0][1]) ||
      !finite(cross[1][0]) || !finite(cross[1][1])) {
    throw InvalidArgument("joint Gaussian system has non-finite entries");
  }
  if (std::abs(w_corr) > 1.0 + kPsdTolerance) {
    throw InvalidArgument("auxiliary correlation must satisfy |Cov(W1,W2)| <= 1");
  }
  w_corr_ = std::clamp(w_corr, -1.0, 1.0);
}

JointGaussianSystem JointGaussianSystem::scalar(const CovarianceMatrix2& kxy, Column cross) {
  return JointGaussianSystem(kxy, 1, 0.0, {cross, Column{0.0, 0.0}});
}

JointGaussianSystem JointGaussianSystem::pair(const CovarianceMatrix2& kxy, double w_corr,
                                              Column cross_w1, Column cross_w2) {
  return JointGaussianSystem(kxy, 2, w_corr, {cross_w1, cross_w2});
}

bool is_psd(const CovarianceMatrix2& k) {
  if (k.a11 < -kPsdTolerance || k.a22 < -kPsdTolerance) return false;
  return k.determinant() >= -kPsdTolerance * std::max(1.0, k.a11 * k.a22);
}

bool loewner_leq(const CovarianceMatrix2& ka, const CovarianceMatrix2& kb) {
  return is_psd(kb - ka);
}

double entropy_gaussian(double variance) {
  if (!(variance > 0.0)) {
    throw NonPositiveDeterminant("entropy of a Gaussian needs a positive variance");
  }
  return 0.5 * std::log(kTwoPiE * variance);
}

double entropy_gaussian(const CovarianceMatrix2& k) {
  const double det = k.determinant();
  if (!(det > 0.0)) {
    throw NonPositiveDeterminant("entropy of a bivariate Gaussian needs det > 0");
  }
  return 0.5 * std::log(kTwoPiE * kTwoPiE * det);
}

double mutual_information(const CovarianceMatrix2& k) {
  const double det = k.determinant();
  if (!(det > 0.0)) {
    throw NonPositiveDeterminant("mutual information needs det > 0");
  }
  return 0.5 * std::log(k.a11 * k.a22 / det);
}

CovarianceMatrix2 conditional_covariance(const JointGaussianSystem& sys) {
  const auto& b1 = sys.cross(0);
  CovarianceMatrix2 k = sys.kxy();
  k.a11 -= b1[0] * b1[0];
  k.a12 -= b1[0] * b1[1];
  k.a22 -= b1[1] * b1[1];
  if (sys.aux_dim() == 1) return k;

  // Residual of W2 after projecting out W1: Var = 1 - r², cross = b2 - r b1.
  const double r = sys.w_corr();
  const auto& b2 = sys.cross(1);
  const double rx = b2[0] - r * b1[0];
  const double ry = b2[1] - r * b1[1];
  const double resid_var = (1.0 - r) * (1.0 + r);

  if (resid_var <= kSingularTolerance) {
    // W2 is (numerically) a copy of ±W1; its cross-covariance must then be
    // explained by W1 as well. For a PSD stack |rx|² <= Var(W2|W1) Var(X|W1).
    const double bound_x = 4.0 * kSingularTolerance * std::max(1.0, std::abs(k.a11));
    const double bound_y = 4.0 * kSingularTolerance * std::max(1.0, std::abs(k.a22));
    if (rx * rx > bound_x || ry * ry > bound_y) {
      throw SingularAuxiliary("K_W is singular and the cross block is not in its range");
    }
    return k;
  }

  k.a11 -= rx * rx / resid_var;
  k.a12 -= rx * ry / resid_var;
  k.a22 -= ry * ry / resid_var;
  return k;
}

bool stacked_psd(const JointGaussianSystem& sys) {
  try {
    return is_psd(conditional_covariance(sys));
  } catch (const SingularAuxiliary&) {
    return false;
  }
}

double mutual_information_xy_w(const JointGaussianSystem& sys) {
  const double det_xy = sys.kxy().determinant();
  if (!(det_xy > 0.0)) {
    throw NonPositiveDeterminant("I(X,Y;W) needs det K_XY > 0");
  }
  const CovarianceMatrix2 cond = conditional_covariance(sys);
  const double det_cond = cond.determinant();
  if (!(det_cond > 0.0) || cond.a11 <= 0.0 || cond.a22 <= 0.0) {
    throw DegenerateConditional("covariance of (X,Y) given W is singular");
  }
  return 0.5 * std::log(det_xy / det_cond);
}

}  // namespace graywyner
