#pragma once

// Subcommands of graywyner-cli. Each writes its dataset or report to `out`,
// diagnostics to `err`, and returns the process exit code.

#include <ostream>
#include <string>

#include "graywyner/achievability.hpp"
#include "graywyner/closed_form.hpp"
#include "graywyner/cli/format.hpp"

namespace graywyner::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertification = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultOracleResolution = 10000;
inline constexpr int kDefaultEnvelopeResolution = 2000;

// Tolerances of the certificate dual <= closed <= oracle.
inline constexpr double kCertTolerance = 1e-9;
inline constexpr double kGapTolerance = 2e-9;
// Allowed undershoot of the envelope grid oracle below the closed form.
inline constexpr double kEnvelopeTolerance = 3e-3;

struct OutputOptions {
  Format format = Format::kCsv;
  // Divide rates by ln 2.
  bool bits = false;
};

struct CheckOptions {
  bool enabled = false;
  // 0 disables the achievability oracle.
  int oracle_resolution = kDefaultOracleResolution;
};

struct RateCertificate {
  Regime regime = Regime::kShared;
  double closed_form = 0.0;
  std::optional<double> dual_lower;
  std::optional<double> oracle_upper;
  std::optional<double> gap;
  std::optional<AuxiliarySpec> oracle_spec;

  // dual - 1e-9 <= closed <= oracle + 1e-9 and gap >= -2e-9 for whatever
  // parts were computed.
  [[nodiscard]] bool holds() const;
};

// Throws InvalidArgument for oracle_resolution in (0, 100).
[[nodiscard]] RateCertificate certify_point(const SourcePair& src, const OperatingPoint& pt,
                                            const CheckOptions& check);

enum class SweepVariable { kDeltaExpAlpha, kDelta, kAlpha };

// Parses delta_e_alpha | delta | alpha. Throws InvalidArgument otherwise.
[[nodiscard]] SweepVariable parse_sweep_variable(const std::string& name);

struct SweepConfig {
  double rho = 0.0;
  double sigma2 = 1.0;
  // Fixed Δ for an alpha sweep; ignored otherwise.
  double delta = 1.0;
  // Fixed α for delta and delta_e_alpha sweeps; ignored for an alpha sweep.
  double alpha = 0.0;
  SweepVariable variable = SweepVariable::kDeltaExpAlpha;
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  CheckOptions check;

  // Throws InvalidArgument unless from > 0, to > from and points >= 2.
  void validate() const;
  // Evenly spaced, both ends included.
  [[nodiscard]] double value_at(int index) const;
};

struct PointArgs {
  double rho = 0.0;
  double sigma2 = 1.0;
  double delta = 0.0;
  double alpha = 0.0;
  CheckOptions check;
};

struct EnvelopeArgs {
  double lambda = 0.0;
  double rho = 0.0;
  int resolution = kDefaultEnvelopeResolution;
};

// The row's x is Δe^α.
int cmd_point(const PointArgs& args, const OutputOptions& opts, std::ostream& out,
              std::ostream& err);

int cmd_sweep(const SweepConfig& config, const OutputOptions& opts, std::ostream& out,
              std::ostream& err);

// 101 rows for Δe^α = 0.00, 0.01, ..., 1.00 at ρ = 0.5, σ² = 1, α = 0.
int cmd_figure2(const CheckOptions& check, const OutputOptions& opts, std::ostream& out,
                std::ostream& err);

// Key-value report (csv format) or a JSON object.
int cmd_envelope(const EnvelopeArgs& args, const OutputOptions& opts, std::ostream& out,
                 std::ostream& err);

}  // namespace graywyner::cli
