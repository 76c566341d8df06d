#pragma once

// Small-matrix Gaussian algebra for the bivariate source (X, Y) and an
// auxiliary W of dimension one or two.
//
// All information quantities are in nats. Divide by std::numbers::ln2 to
// convert to bits.

#include <array>

namespace graywyner {

// Absolute tolerance used by every PSD / Löwner-order test. All matrices seen
// by this library are 2x2 (or stacked 3x3 / 4x4) with O(1) entries.
inline constexpr double kPsdTolerance = 1e-12;

// Determinant guard for the auxiliary covariance K_W.
inline constexpr double kSingularTolerance = 1e-12;

// Symmetric 2x2 matrix [[a11, a12], [a12, a22]].
//
// Carries covariances of (X, Y), Löwner-bounded matrices K' and conditional
// covariances. PSD is not enforced at construction because differences of
// covariances (used by loewner_leq) are ordinary symmetric matrices; use
// is_psd() where the invariant matters.
struct CovarianceMatrix2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  [[nodiscard]] constexpr double determinant() const { return a11 * a22 - a12 * a12; }
  [[nodiscard]] constexpr double trace() const { return a11 + a22; }
  [[nodiscard]] bool is_finite() const;

  friend constexpr CovarianceMatrix2 operator-(const CovarianceMatrix2& a,
                                               const CovarianceMatrix2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a22 - b.a22};
  }
  friend constexpr bool operator==(const CovarianceMatrix2&, const CovarianceMatrix2&) = default;
};

// Zero-mean bivariate Gaussian source with equal variances sigma2 and
// correlation coefficient rho, |rho| < 1.
class SourcePair {
 public:
  // Throws InvalidArgument if sigma2 <= 0, |rho| >= 1 or either is not finite.
  SourcePair(double sigma2, double rho);

  [[nodiscard]] double sigma2() const { return sigma2_; }
  [[nodiscard]] double rho() const { return rho_; }
  [[nodiscard]] CovarianceMatrix2 covariance() const {
    return {sigma2_, rho_ * sigma2_, sigma2_};
  }

  friend bool operator==(const SourcePair&, const SourcePair&) = default;

 private:
  double sigma2_;
  double rho_;
};

// Covariance description of (X, Y, W) with W normalized to unit variances.
//
//   kxy         covariance of (X, Y)
//   w_corr      Cov(W1, W2) (only meaningful when aux_dim() == 2)
//   cross[k]    (Cov(X, W_k), Cov(Y, W_k))
//
// Construction checks finiteness and |w_corr| <= 1. Joint PSD of the stacked
// covariance is checked by stacked_psd(); see conditional_covariance().
class JointGaussianSystem {
 public:
  using Column = std::array<double, 2>;

  static JointGaussianSystem scalar(const CovarianceMatrix2& kxy, Column cross);
  static JointGaussianSystem pair(const CovarianceMatrix2& kxy, double w_corr, Column cross_w1,
                                  Column cross_w2);

  [[nodiscard]] int aux_dim() const { return aux_dim_; }
  [[nodiscard]] const CovarianceMatrix2& kxy() const { return kxy_; }
  [[nodiscard]] double w_corr() const { return w_corr_; }
  [[nodiscard]] const Column& cross(int k) const { return cross_[static_cast<std::size_t>(k)]; }

 private:
  JointGaussianSystem(const CovarianceMatrix2& kxy, int aux_dim, double w_corr,
                      std::array<Column, 2> cross);

  CovarianceMatrix2 kxy_;
  int aux_dim_;
  double w_corr_;
  std::array<Column, 2> cross_;
};

// True iff a11, a22 >= -eps and det >= -eps * max(1, a11 * a22).
[[nodiscard]] bool is_psd(const CovarianceMatrix2& k);

// Löwner order: ka ⪯ kb iff kb - ka is PSD.
[[nodiscard]] bool loewner_leq(const CovarianceMatrix2& ka, const CovarianceMatrix2& kb);

// Differential entropy of a scalar Gaussian, ½ ln(2πe·variance).
// Throws NonPositiveDeterminant if variance <= 0.
[[nodiscard]] double entropy_gaussian(double variance);

// Differential entropy of a bivariate Gaussian, ½ ln((2πe)² det k).
// Throws NonPositiveDeterminant if det k <= 0.
[[nodiscard]] double entropy_gaussian(const CovarianceMatrix2& k);

// I(X;Y) for (X,Y) ~ N(0, k), ½ ln(a11 a22 / det k).
[[nodiscard]] double mutual_information(const CovarianceMatrix2& k);

// Covariance of (X, Y) given W: the Schur complement of K_W in the stacked
// covariance. Computed by sequential conditioning on W1 and then on the part
// of W2 not explained by W1. When Var(W2 | W1) <= kSingularTolerance the
// second step is dropped, provided the residual cross-covariance is
// consistent with a redundant W2; otherwise SingularAuxiliary is thrown.
[[nodiscard]] CovarianceMatrix2 conditional_covariance(const JointGaussianSystem& sys);

// True iff the stacked (2+m)x(2+m) covariance is PSD, tested through the
// Schur complement of K_W.
[[nodiscard]] bool stacked_psd(const JointGaussianSystem& sys);

// I(X,Y;W) = ½ ln(det K_XY / det K_XY|W), in nats.
// Throws SingularAuxiliary, DegenerateConditional, or NonPositiveDeterminant
// if det K_XY <= 0.
[[nodiscard]] double mutual_information_xy_w(const JointGaussianSystem& sys);

}  // namespace graywyner
