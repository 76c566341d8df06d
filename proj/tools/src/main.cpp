// graywyner-cli: point evaluation, sweeps and certification reports for the
// lossy Gray-Wyner common rate of a bivariate Gaussian source.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "graywyner/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace graywyner::cli;

  CLI::App app{"Common-rate evaluation for the lossy Gray-Wyner network with Gaussian sources"};
  app.require_subcommand(1);

  std::string format_name = "csv";
  std::string output_path;
  bool bits = false;
  bool check = false;
  int oracle_resolution = kDefaultOracleResolution;

  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", output_path, "Write to this file instead of standard output");
    cmd->add_flag("--bits", bits, "Report rates in bits instead of nats");
  };
  const auto add_check_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--check", check, "Compute the dual lower bound and achievability oracle");
    cmd->add_option("--oracle-resolution", oracle_resolution, "Oracle grid size, 0 disables")
        ->capture_default_str();
  };

  PointArgs point;
  auto* point_cmd = app.add_subcommand("point", "Evaluate a single operating point");
  point_cmd->add_option("--rho", point.rho, "Correlation coefficient")->required();
  point_cmd->add_option("--sigma2", point.sigma2, "Per-source variance")->capture_default_str();
  point_cmd->add_option("--delta", point.delta, "Distortion per source")->required();
  point_cmd->add_option("--alpha", point.alpha, "Private sum-rate budget, nats")
      ->capture_default_str();
  add_check_flags(point_cmd);
  add_output_flags(point_cmd);

  SweepConfig sweep;
  std::string sweep_var = "delta_e_alpha";
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the common rate along one variable");
  sweep_cmd->add_option("--rho", sweep.rho, "Correlation coefficient")->required();
  sweep_cmd->add_option("--sigma2", sweep.sigma2, "Per-source variance")->capture_default_str();
  sweep_cmd->add_option("--delta", sweep.delta, "Fixed distortion for an alpha sweep")
      ->capture_default_str();
  sweep_cmd->add_option("--alpha", sweep.alpha, "Fixed private budget, nats")
      ->capture_default_str();
  sweep_cmd->add_option("--sweep-var", sweep_var, "delta_e_alpha, delta or alpha")
      ->check(CLI::IsMember({"delta_e_alpha", "delta", "alpha"}))
      ->capture_default_str();
  sweep_cmd->add_option("--from", sweep.from, "First sweep value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last sweep value")->required();
  sweep_cmd->add_option("--points", sweep.points, "Number of sweep values")->required();
  add_check_flags(sweep_cmd);
  add_output_flags(sweep_cmd);

  auto* figure_cmd =
      app.add_subcommand("figure2", "Common rate versus delta*e^alpha at rho = 0.5, sigma2 = 1");
  add_check_flags(figure_cmd);
  add_output_flags(figure_cmd);

  EnvelopeArgs envelope;
  auto* envelope_cmd =
      app.add_subcommand("envelope", "Certify the covariance-envelope minimization");
  envelope_cmd->add_option("--lambda", envelope.lambda, "Multiplier, 0 < lambda <= rho")
      ->required();
  envelope_cmd->add_option("--rho", envelope.rho, "Correlation coefficient")->required();
  envelope_cmd->add_option("--resolution", envelope.resolution, "Grid oracle size")
      ->capture_default_str();
  add_output_flags(envelope_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitUsage;
  }

  OutputOptions opts;
  opts.format = format_name == "json" ? Format::kJson : Format::kCsv;
  opts.bits = bits;
  const CheckOptions check_opts{check, oracle_resolution};

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open " << output_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& out = output_path.empty() ? std::cout : file;

  int code = kExitOk;
  if (*point_cmd) {
    point.check = check_opts;
    code = cmd_point(point, opts, out, std::cerr);
  } else if (*sweep_cmd) {
    sweep.variable = parse_sweep_variable(sweep_var);
    sweep.check = check_opts;
    code = cmd_sweep(sweep, opts, out, std::cerr);
  } else if (*figure_cmd) {
    code = cmd_figure2(check_opts, opts, out, std::cerr);
  } else if (*envelope_cmd) {
    code = cmd_envelope(envelope, opts, out, std::cerr);
  }
  out.flush();
  return code;
}
