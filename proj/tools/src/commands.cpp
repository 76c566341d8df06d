#include "graywyner/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <utility>
#include <vector>

#include "graywyner/dual_bound.hpp"
#include "graywyner/envelope.hpp"
#include "graywyner/errors.hpp"

namespace graywyner::cli {

namespace {

constexpr double kFigureRho = 0.5;
constexpr int kFigureSteps = 100;

double scale(double nats, const OutputOptions& opts) {
  return opts.bits ? nats / std::numbers::ln2 : nats;
}

std::optional<double> scale(const std::optional<double>& nats, const OutputOptions& opts) {
  if (!nats) return std::nullopt;
  return scale(*nats, opts);
}

Row to_row(double x, const RateCertificate& cert, const OutputOptions& opts) {
  Row r;
  r.x = x;
  r.regime = std::string(to_string(cert.regime));
  r.rate_closed = scale(cert.closed_form, opts);
  r.rate_dual = scale(cert.dual_lower, opts);
  r.rate_oracle = scale(cert.oracle_upper, opts);
  r.gap = scale(cert.gap, opts);
  return r;
}

void report_violation(std::ostream& err, double x, const RateCertificate& cert) {
  err << "certification failed at x=" << format_number(x)
      << ": closed=" << format_number(cert.closed_form);
  if (cert.dual_lower) err << " dual=" << format_number(*cert.dual_lower);
  if (cert.oracle_upper) err << " oracle=" << format_number(*cert.oracle_upper);
  err << '\n';
}

struct Job {
  double x;
  SourcePair src;
  OperatingPoint pt;
};

// Certifies every (x, source, point) triple, emits the rows in order and maps
// failures to exit codes.
int run_jobs(const std::vector<Job>& jobs, const CheckOptions& check, const OutputOptions& opts,
             std::ostream& out, std::ostream& err, std::vector<Row> prefix = {}) {
  std::vector<Row> rows = std::move(prefix);
  bool ok = true;
  for (const Job& job : jobs) {
    const RateCertificate cert = certify_point(job.src, job.pt, check);
    if (!cert.holds()) {
      ok = false;
      report_violation(err, job.x, cert);
    }
    rows.push_back(to_row(job.x, cert, opts));
  }
  write_rows(out, rows, opts.format);
  return ok ? kExitOk : kExitCertification;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Infeasible& e) {
    err << "certification failed: " << e.what() << '\n';
    return kExitCertification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

bool RateCertificate::holds() const {
  if (dual_lower && !(*dual_lower - kCertTolerance <= closed_form)) return false;
  if (oracle_upper && !(closed_form <= *oracle_upper + kCertTolerance)) return false;
  if (gap && !(*gap >= -kGapTolerance)) return false;
  return true;
}

RateCertificate certify_point(const SourcePair& src, const OperatingPoint& pt,
                              const CheckOptions& check) {
  if (check.oracle_resolution < 0 || (check.oracle_resolution > 0 && check.oracle_resolution < 100)) {
    throw InvalidArgument("oracle resolution must be 0 (disabled) or at least 100");
  }
  RateCertificate cert;
  cert.regime = classify_regime(src, pt);
  cert.closed_form = rate_closed_form(src, pt);
  if (!check.enabled) return cert;
  cert.dual_lower = lower_bound(src, pt).value;
  if (check.oracle_resolution > 0) {
    const OracleResult oracle = search_oracle(src, pt, check.oracle_resolution);
    cert.oracle_upper = oracle.point.rc;
    cert.oracle_spec = oracle.spec;
    cert.gap = *cert.oracle_upper - *cert.dual_lower;
  }
  return cert;
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "delta_e_alpha") return SweepVariable::kDeltaExpAlpha;
  if (name == "delta") return SweepVariable::kDelta;
  if (name == "alpha") return SweepVariable::kAlpha;
  throw InvalidArgument("sweep variable must be one of delta_e_alpha, delta, alpha");
}

void SweepConfig::validate() const {
  if (!std::isfinite(from) || !(from > 0.0)) throw InvalidArgument("sweep requires from > 0");
  if (!std::isfinite(to) || !(to > from)) throw InvalidArgument("sweep requires to > from");
  if (points < 2) throw InvalidArgument("sweep requires points >= 2");
}

double SweepConfig::value_at(int index) const {
  if (index == points - 1) return to;
  return from + (to - from) * static_cast<double>(index) / static_cast<double>(points - 1);
}

int cmd_point(const PointArgs& args, const OutputOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const SourcePair src(args.sigma2, args.rho);
    const OperatingPoint pt(args.delta, args.alpha);
    const double x = pt.delta() * std::exp(pt.alpha());
    return run_jobs({Job{x, src, pt}}, args.check, opts, out, err);
  });
}

int cmd_sweep(const SweepConfig& config, const OutputOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const SourcePair src(config.sigma2, config.rho);
    std::vector<Job> jobs;
    jobs.reserve(static_cast<std::size_t>(config.points));
    for (int i = 0; i < config.points; ++i) {
      const double x = config.value_at(i);
      switch (config.variable) {
        case SweepVariable::kDeltaExpAlpha:
          jobs.push_back({x, src, OperatingPoint(x * std::exp(-config.alpha), config.alpha)});
          break;
        case SweepVariable::kDelta:
          jobs.push_back({x, src, OperatingPoint(x, config.alpha)});
          break;
        case SweepVariable::kAlpha:
          jobs.push_back({x, src, OperatingPoint(config.delta, x)});
          break;
      }
    }
    return run_jobs(jobs, config.check, opts, out, err);
  });
}

int cmd_figure2(const CheckOptions& check, const OutputOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const SourcePair src(1.0, kFigureRho);
    Row origin;
    origin.x = 0.0;
    origin.regime = std::string(to_string(Regime::kSaturated));
    origin.infinite = true;
    std::vector<Job> jobs;
    jobs.reserve(kFigureSteps);
    for (int i = 1; i <= kFigureSteps; ++i) {
      const double x = static_cast<double>(i) / kFigureSteps;
      jobs.push_back({x, src, OperatingPoint(x, 0.0)});
    }
    return run_jobs(jobs, check, opts, out, err, {origin});
  });
}

int cmd_envelope(const EnvelopeArgs& args, const OutputOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (!(args.lambda > 0.0) || !(args.lambda <= args.rho)) {
      throw InvalidArgument("envelope requires 0 < lambda <= rho < 1");
    }
    const EnvelopeProblem prob(args.lambda, args.rho);
    const double closed = envelope_closed_form(args.lambda, args.rho);
    const EnvelopeCandidate kkt = kkt_candidate(prob);
    const KktResiduals res = kkt_residuals(prob, kkt);
    const GridOracleResult grid = grid_oracle(prob, args.resolution);
    const double branch = rho_branch_value(prob);
    const double gap = gap_function(args.lambda, args.rho);

    const double max_residual =
        std::max({std::abs(res.stationarity_sigma2), std::abs(res.stationarity_q),
                  std::abs(res.complementary_slackness)});
    const bool pass = grid.value >= closed - kEnvelopeTolerance &&
                      grid.value <= closed + kEnvelopeTolerance && closed <= branch + 1e-12 &&
                      max_residual < 1e-12;

    const std::vector<std::pair<std::string_view, double>> fields = {
        {"lambda", args.lambda},
        {"rho", args.rho},
        {"resolution", static_cast<double>(args.resolution)},
        {"envelope_closed_form", closed},
        {"kkt_q", kkt.q},
        {"kkt_sigma2", kkt.sigma2},
        {"kkt_mu", kkt.mu},
        {"kkt_residual_sigma2", res.stationarity_sigma2},
        {"kkt_residual_q", res.stationarity_q},
        {"kkt_residual_slackness", res.complementary_slackness},
        {"rho_branch_value", branch},
        {"gap_h", gap},
        {"oracle_sigma2", grid.sigma2},
        {"oracle_q", grid.q},
        {"oracle_value", grid.value},
        {"oracle_minus_closed", grid.value - closed},
    };
    const std::string_view verdict = pass ? "PASS" : "FAIL";
    if (opts.format == Format::kJson) {
      out << "{\n";
      for (const auto& [key, value] : fields) {
        out << "  \"" << key << "\": " << format_number(value) << ",\n";
      }
      out << "  \"sandwich\": \"" << verdict << "\"\n}\n";
    } else {
      for (const auto& [key, value] : fields) out << key << ": " << format_number(value) << '\n';
      out << "sandwich: " << verdict << '\n';
    }
    if (!pass) {
      err << "certification failed: envelope sandwich check\n";
      return kExitCertification;
    }
    return kExitOk;
  });
}

}  // namespace graywyner::cli
