// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
//
//   AC1  figure2 reproduction against the frozen table, relative 1e-10, < 1 s
//   AC2  duality tightness on 9 rho x 200 delta*e^alpha, 1e-9, < 5 s
//   AC3  achievability sandwich, oracle resolution 1e4, 9 x 50 grid, < 60 s
//   AC4  envelope certification on 20 (lambda, rho) pairs, resolution 2000, < 30 s
//   AC5  property suites
//   AC6  boundary identities at delta*e^alpha = sigma2 (1 - rho), 1e-10

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graywyner/achievability.hpp"
#include "graywyner/cli/commands.hpp"
#include "graywyner/closed_form.hpp"
#include "graywyner/dual_bound.hpp"
#include "graywyner/envelope.hpp"

#ifndef GRAYWYNER_FIGURE_TABLE
#error "GRAYWYNER_FIGURE_TABLE must point at the frozen figure table"
#endif

namespace {

using namespace graywyner;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (first_failure_.empty()) first_failure_ = what;
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failed_ == 0;
    o.detail = summary + " (" + std::to_string(total_ - failed_) + "/" + std::to_string(total_) +
               " checks)";
    if (!o.pass) o.detail += "; first failure: " + first_failure_;
    return o;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

std::string num(double v) { return cli::format_number(v); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool relative_close(double got, double want, double tol) {
  if (want == 0.0) return std::abs(got) <= tol;
  return std::abs(got - want) <= tol * std::abs(want);
}

Outcome ac1_figure2() {
  Tally t;
  std::ifstream table(GRAYWYNER_FIGURE_TABLE);
  std::vector<std::pair<double, double>> expected;
  std::string line;
  std::getline(table, line);
  while (std::getline(table, line)) {
    const auto f = split(line);
    if (f.size() == 2) expected.emplace_back(std::stod(f[0]), std::stod(f[1]));
  }
  t.check(expected.size() == 100, "frozen table has " + std::to_string(expected.size()) + " rows");

  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::cmd_figure2({}, {}, out, err);
  t.check(code == cli::kExitOk, "figure2 exit code " + std::to_string(code));

  std::istringstream in(out.str());
  std::getline(in, line);
  t.check(line == cli::kCsvHeader, "header");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) rows.push_back(split(line));
  t.check(rows.size() == 101, "row count " + std::to_string(rows.size()));
  if (rows.size() != 101 || expected.size() != 100) return t.outcome("figure2");

  t.check(rows[0][0] == "0" && rows[0][2] == "inf", "origin row is not inf");
  double worst = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& row = rows[i + 1];
    const double x = std::stod(row[0]);
    const double got = std::stod(row[2]);
    const auto [want_x, want] = expected[i];
    t.check(std::abs(x - want_x) < 1e-12, "x mismatch at " + row[0]);
    t.check(relative_close(got, want, 1e-10), "value at " + row[0] + ": " + row[2] + " vs " + num(want));
    if (want != 0.0) worst = std::max(worst, std::abs(got - want) / want);
  }
  return t.outcome("100 finite rows, max relative error " + num(worst));
}

Outcome ac2_duality() {
  Tally t;
  double worst = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const SourcePair src(1.0, 0.1 * k);
    for (int i = 1; i <= 200; ++i) {
      const OperatingPoint pt(i / 200.0, 0.0);
      const double diff = std::abs(lower_bound(src, pt).value - rate_closed_form(src, pt));
      worst = std::max(worst, diff);
      t.check(diff < 1e-9, "rho=" + num(0.1 * k) + " x=" + num(i / 200.0) + " diff=" + num(diff));
    }
  }
  return t.outcome("max |dual - closed| " + num(worst));
}

Outcome ac3_sandwich() {
  Tally t;
  double worst_excess = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const SourcePair src(1.0, 0.1 * k);
    for (int i = 1; i <= 50; ++i) {
      // Alternate the private budget so both Δ and α vary.
      const double alpha = (i % 2 == 0) ? 0.0 : 0.3;
      const double x = i / 50.0;
      const OperatingPoint pt(x * std::exp(-alpha), alpha);
      const double closed = rate_closed_form(src, pt);
      const double dual = lower_bound(src, pt).value;
      const double oracle = search_oracle(src, pt, 10000).point.rc;
      const std::string where = "rho=" + num(0.1 * k) + " x=" + num(x);
      worst_excess = std::max(worst_excess, oracle - closed);
      t.check(oracle >= closed - 1e-12, where + " oracle below closed form");
      t.check(oracle <= closed + 1e-5, where + " oracle excess " + num(oracle - closed));
      t.check(oracle >= dual - 1e-9, where + " oracle undercuts dual");
    }
  }
  return t.outcome("max oracle - closed " + num(worst_excess));
}

Outcome ac4_envelope() {
  Tally t;
  constexpr int kRes = 2000;
  double worst_under = 0.0;
  double worst_arg = 0.0;
  for (double rho : {0.2, 0.4, 0.6, 0.8}) {
    for (double frac : {0.05, 0.25, 0.5, 0.75, 1.0}) {
      const double lambda = frac * rho;
      const EnvelopeProblem prob(lambda, rho);
      const std::string where = "lambda=" + num(lambda) + " rho=" + num(rho);
      const double closed = envelope_closed_form(lambda, rho);
      const auto kkt = kkt_candidate(prob);
      const auto res = kkt_residuals(prob, kkt);
      const auto grid = grid_oracle(prob, kRes);
      worst_under = std::max(worst_under, closed - grid.value);
      t.check(grid.value >= closed - 3e-3, where + " oracle below closed form");
      t.check(std::abs(res.stationarity_sigma2) < 1e-12 && std::abs(res.stationarity_q) < 1e-12 &&
                  std::abs(res.complementary_slackness) < 1e-12,
              where + " KKT residual");
      if (frac < 1.0) {
        const double err = std::max(std::abs(grid.sigma2 - kkt.sigma2), std::abs(grid.q - kkt.q));
        worst_arg = std::max(worst_arg, err);
        t.check(err <= 2.0 / kRes, where + " argmin off by " + num(err));
      }
    }
  }
  return t.outcome("max closed - oracle " + num(worst_under) + ", max argmin error " +
                   num(worst_arg));
}

Outcome ac5_properties() {
  Tally t;
  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  // ℓ concavity by second differences, analytic derivative vs central differences.
  for (double rho : {0.1, 0.5, 0.9}) {
    const SourcePair src(1.0, rho);
    for (double d : {0.05, 0.3, 0.6, 0.95, 1.2}) {
      const OperatingPoint pt(d, 0.0);
      const auto ell = [&](double nu) { return dual_objective(DualVariable(nu), src, pt); };
      for (int i = 0; i < 100; ++i) {
        const double nu = 0.51 + 0.48 * (i + 0.5) / 100.0;
        constexpr double h2 = 1e-3;
        t.check(ell(nu + h2) - 2 * ell(nu) + ell(nu - h2) <= 1e-12, "concavity at nu=" + num(nu));
        constexpr double h1 = 1e-6;
        const double fd = (ell(nu + h1) - ell(nu - h1)) / (2 * h1);
        t.check(std::abs(dual_derivative(DualVariable(nu), src, pt) - fd) < 1e-5,
                "derivative at nu=" + num(nu));
      }
    }
  }

  // Continuity at both regime boundaries.
  for (int k = 1; k <= 9; ++k) {
    const double rho = 0.1 * k;
    const SourcePair src(1.0, rho);
    for (double b : {1.0 - rho, 1.0}) {
      const double lo = rate_closed_form(src, OperatingPoint(b - 1e-9, 0.0));
      const double hi = rate_closed_form(src, OperatingPoint(b + 1e-9, 0.0));
      t.check(std::abs(lo - hi) < 1e-7, "continuity rho=" + num(rho) + " at " + num(b));
    }
  }

  // Scaling and sign symmetry, bit-exact.
  for (int i = 0; i < 2000; ++i) {
    const double s2 = 0.1 + 10.0 * u(rng);
    const double rho = -0.99 + 1.98 * u(rng);
    const double delta = 0.001 + 2.0 * u(rng);
    const double alpha = 2.0 * u(rng);
    const double r = rate_closed_form(SourcePair(s2, rho), OperatingPoint(delta, alpha));
    t.check(r == rate_closed_form(SourcePair(1.0, rho), OperatingPoint(delta / s2, alpha)),
            "scaling");
    t.check(r == rate_closed_form(SourcePair(s2, -rho), OperatingPoint(delta, alpha)), "sign");
  }

  // Monotone non-increasing in Δ and in α.
  for (double rho : {0.2, 0.6, 0.9}) {
    const SourcePair src(1.0, rho);
    for (int i = 0; i < 60; ++i) {
      double prev_alpha = std::numeric_limits<double>::infinity();
      double prev_delta = std::numeric_limits<double>::infinity();
      for (int j = 0; j < 60; ++j) {
        const double ra = rate_closed_form(src, OperatingPoint(0.005 + 0.02 * i, 0.03 * j));
        const double rd = rate_closed_form(src, OperatingPoint(0.005 + 0.02 * j, 0.03 * i));
        t.check(ra <= prev_alpha, "monotone in alpha");
        t.check(rd <= prev_delta, "monotone in delta");
        prev_alpha = ra;
        prev_delta = rd;
      }
    }
  }

  // A_ρ ⊆ D_ρ on 10⁴ random members.
  int members = 0;
  for (long attempts = 0; members < 10000 && attempts < 10'000'000; ++attempts) {
    const double rho = 0.95 * u(rng);
    const double sx = u(rng);
    const double sy = u(rng);
    const double q = 2.0 * u(rng) - 1.0;
    if (!feasible_a_rho(rho, sx, sy, q)) continue;
    ++members;
    t.check(feasible_d_rho(rho, sx * sy, q), "set inclusion");
  }
  t.check(members == 10000, "only " + std::to_string(members) + " A_rho members sampled");

  // h(λ) increasing and concave on (0, ρ].
  for (int k = 1; k <= 9; ++k) {
    const double rho = 0.1 * k;
    constexpr int n = 200;
    const double step = rho / n;
    for (int i = 1; i < n; ++i) {
      const double l = step * i;
      const double g0 = gap_function(l, rho);
      const double gp = gap_function(l + step, rho);
      t.check(gp > g0, "h increasing");
      t.check(gp - 2 * g0 + gap_function(l - step, rho) <= 1e-12, "h concave");
    }
    t.check(std::abs(gap_function(rho, rho)) < 1e-14, "h(rho) = 0");
  }
  return t.outcome("concavity, derivative, continuity, symmetry, monotonicity, inclusion, gap");
}

Outcome ac6_boundary() {
  Tally t;
  double worst = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double rho = 0.1 * k;
    for (double s2 : {1.0, 2.5}) {
      const SourcePair src(s2, rho);
      const double b = 1.0 - rho;
      const OperatingPoint pt(s2 * b, 0.0);
      const double ci = 0.5 * std::log((1.0 + rho) / (1.0 - rho));
      std::vector<std::pair<std::string, double>> values = {
          {"wyner_ci", wyner_ci(src)},
          {"shared branch", 0.5 * std::log((1.0 + rho) / (2.0 * b + rho - 1.0))},
          {"saturated branch", 0.5 * std::log((1.0 - rho * rho) / (b * b))},
          {"closed form", rate_closed_form(src, pt)},
          {"scalar construction",
           achievable_point(build_system(src, AuxiliarySpec::scalar(std::sqrt(rho))), pt.delta())
               .rc},
          {"pair construction",
           achievable_point(build_system(src, AuxiliarySpec::pair(s2 * b)), pt.delta()).rc},
      };
      if (s2 == 1.0) {
        values.emplace_back("dual at nu = 1", dual_objective(DualVariable(1.0), src, pt));
      }
      for (const auto& [name, v] : values) {
        worst = std::max(worst, std::abs(v - ci));
        t.check(std::abs(v - ci) < 1e-10, name + " at rho=" + num(rho) + ": " + num(v));
      }
    }
  }
  return t.outcome("max deviation from 1/2 ln((1+rho)/(1-rho)) " + num(worst));
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "figure2 reproduction", 1.0, ac1_figure2},
      {"AC2", "duality tightness", 5.0, ac2_duality},
      {"AC3", "achievability sandwich", 60.0, ac3_sandwich},
      {"AC4", "envelope certification", 30.0, ac4_envelope},
      {"AC5", "property suites", std::numeric_limits<double>::infinity(), ac5_properties},
      {"AC6", "boundary identities", std::numeric_limits<double>::infinity(), ac6_boundary},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + num(c.limit_seconds) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
