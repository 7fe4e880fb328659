// Copyright 2026 The ffdioph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffdioph/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffdioph/contfrac.hpp"
#include "ffdioph/errors.hpp"
#include "ffdioph/experiment.hpp"
#include "ffdioph/field.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/poly.hpp"
#include "ffdioph/report.hpp"
#include "ffdioph/rng.hpp"
#include "ffdioph/tree_geom.hpp"
#include "ffdioph/version.hpp"

namespace ffdioph {

namespace {

// "numcoeffs/dencoeffs", each side in either polynomial grammar.
std::pair<Poly, Poly> ParseRational(const FieldPtr& k,
                                    const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) {
    Fail(ErrorKind::kUsage,
         "--rational wants NUM/DEN, e.g. \"1,1,1/0,1\" or \"X^2+X+1/X\"");
  }
  Poly num = Poly::Parse(k, text.substr(0, slash));
  Poly den = Poly::Parse(k, text.substr(slash + 1));
  if (den.IsZero()) Fail(ErrorKind::kDivisionByZeroPoly, "zero denominator");
  return {std::move(num), std::move(den)};
}

void WriteOutput(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) Fail(ErrorKind::kUsage, "cannot open output file " + out_path);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

int RunCfCommand(uint32_t q, const std::string& rational, uint64_t seed,
                 int digits) {
  FieldPtr field = Field::MakeQ(q);
  if (!rational.empty()) {
    auto [num, den] = ParseRational(field, rational);
    CfRational cf = CfExpandRational(num, den);
    std::printf("%s\n", cf.Format().c_str());
    return 0;
  }
  StreamSource src(field, Rng::Stream(seed, 0));
  CfExpansion ex = CfExpand(&src, digits);
  std::printf("%s\n", ex.Format().c_str());
  return 0;
}

int RunProfileCommand(uint32_t q, const std::string& rational,
                      const std::string& out_path) {
  FieldPtr field = Field::MakeQ(q);
  auto [num, den] = ParseRational(field, rational);
  RationalSource src(num, den);
  CfExpansion ex = CfExpand(&src, INT32_MAX / 2);
  std::vector<Tent> tents = TentProfile(ex);
  std::string csv = "t_enter,peak,t_exit,deg_q\n";
  char line[96];
  for (const Tent& tent : tents) {
    std::snprintf(line, sizeof line, "%d,%d,%d,%d\n", tent.t_enter, tent.peak,
                  tent.t_exit, tent.den.deg());
    csv += line;
  }
  WriteOutput(csv, out_path);
  return 0;
}

int EmitReport(const Json& report, const std::string& format,
               const std::string& out_path, bool check) {
  WriteOutput(format == "csv" ? RenderCsv(report) : RenderJson(report),
              out_path);
  if (check && !AllChecksPass(report)) return 3;
  return 0;
}

}  // namespace

int CliMain(int argc, char** argv) {
  CLI::App app{"exact Diophantine approximation over F_q((1/X))"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // cf
  uint32_t cf_q = 2;
  std::string cf_rational;
  uint64_t cf_seed = 42;
  int cf_digits = 16;
  CLI::App* cf = app.add_subcommand(
      "cf", "continued fraction digits of a rational or random series");
  cf->add_option("--q", cf_q, "field size (prime power)");
  cf->add_option("--rational", cf_rational,
                 "NUM/DEN, each side \"c0,c1,...\" (ascending) or \"X^2+1\"");
  cf->add_option("--seed", cf_seed, "stream seed when no rational is given");
  cf->add_option("--digits", cf_digits, "digit budget for random streams");

  // profile
  uint32_t pr_q = 2;
  std::string pr_rational;
  std::string pr_out;
  CLI::App* profile = app.add_subcommand(
      "profile", "tent profile (entry, peak, exit) of a rational's geodesic");
  profile->add_option("--q", pr_q, "field size (prime power)");
  profile->add_option("--rational", pr_rational, "NUM/DEN")->required();
  profile->add_option("--out", pr_out, "output file (default stdout)");

  // experiment
  ExperimentConfig cfg;
  std::string format = "json";
  std::string out_path;
  bool check = false;
  CLI::App* exp = app.add_subcommand("experiment", "statistical experiments");
  exp->require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "field size (prime power)");
    sub->add_option("--seed", cfg.seed, "master seed");
    sub->add_option("--trials", cfg.trials, "number of independent targets");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_flag("--check", check,
                  "exit 3 unless every report check passes");
    sub->add_option("--workers", cfg.workers,
                    "worker threads (default $FFDIOPH_WORKERS or 1)");
    sub->add_option("--budget", cfg.budget, "orbit enumeration budget");
  };

  CLI::App* kh = exp->add_subcommand(
      "khintchine", "solution counts per degree window vs exact measures");
  add_common(kh);
  kh->add_option("--q0", cfg.q0, "denominator congruence modulus");
  kh->add_option("--phi", cfg.phi,
                 "test function: preset:NAME, custom:C,a,b[,t0[,cap]], or "
                 "psi:C,a,b[,t0[,cap]]");
  kh->add_option("--dmax", cfg.d_max, "last reported window depth");
  kh->add_option("--dfar", cfg.d_far,
                 "far depth for the increment section (0 = off)");
  kh->add_option("--m", cfg.tail_min_count,
                 "threshold for the \"at least m solutions\" fraction");

  CLI::App* ll = exp->add_subcommand(
      "loglaw", "extremal digit statistics along the expansion");
  add_common(ll);
  ll->add_option("--rungs", cfg.rungs, "digit-count checkpoints")
      ->delimiter(',');

  CLI::App* ds =
      exp->add_subcommand("digitstats", "digit-degree law frequencies");
  add_common(ds);
  ds->add_option("--digits-per-trial", cfg.digits_per_trial,
                 "certified digits per target");
  ds->add_option("--kmax", cfg.max_digit_checked,
                 "largest degree held to the 3-SE check");

  CLI::App* ct = exp->add_subcommand(
      "counting", "orbit, group-ball and parabolic-ball cardinalities");
  add_common(ct);
  ct->add_option("--q0", cfg.q0, "denominator congruence modulus");
  ct->add_option("--depth-top", cfg.depth_top, "last window depth");
  ct->add_option("--group-nmax", cfg.group_n_max,
                 "largest group-ball radius (even)");
  ct->add_option("--parabolic-nmax", cfg.parabolic_n_max,
                 "largest parabolic-ball radius (even)");

  CLI::App* sh = exp->add_subcommand(
      "shadow", "exhaustive shadow-measure verification");
  add_common(sh);
  sh->add_option("--deg-max", cfg.shadow_deg_max, "largest cusp depth / 2");
  sh->add_option("--t-max", cfg.shadow_t_max, "largest thickening");

  CLI::App* qi = exp->add_subcommand(
      "quasi", "pairwise window intersection ratios");
  add_common(qi);
  qi->add_option("--q0", cfg.q0, "denominator congruence modulus");
  qi->add_option("--phi", cfg.phi, "test function");
  qi->add_option("--lo", cfg.window_lo, "first window index");
  qi->add_option("--hi", cfg.window_hi, "last window index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cf->parsed()) return RunCfCommand(cf_q, cf_rational, cf_seed, cf_digits);
    if (profile->parsed()) return RunProfileCommand(pr_q, pr_rational, pr_out);
    if (kh->parsed()) return EmitReport(RunKhintchine(cfg), format, out_path, check);
    if (ll->parsed()) return EmitReport(RunLoglaw(cfg), format, out_path, check);
    if (ds->parsed()) return EmitReport(RunDigitStats(cfg), format, out_path, check);
    if (ct->parsed()) return EmitReport(RunCounting(cfg), format, out_path, check);
    if (sh->parsed()) return EmitReport(RunShadowCheck(cfg), format, out_path, check);
    if (qi->parsed()) return EmitReport(RunQuasiIndependence(cfg), format, out_path, check);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kBudgetExceeded:
      case ErrorKind::kPrecisionExhausted:
      case ErrorKind::kPrecisionTooSmall:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no command\n";
  return 1;
}

}  // namespace ffdioph
