// Copyright 2026 The BAP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "bap/coin_toss.h"
#include "bap/evaluate.h"
#include "bap/game_json.h"
#include "bap/gaussian_study.h"
#include "bap/mechanism_lp.h"
#include "bap/report.h"
#include "bap/status_macros.h"

namespace bap::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int64_t kMaxGridPoints = 1000000;

// Failures split into usage problems and everything else.
struct Failure {
  absl::Status status;
  bool usage = false;
};

struct OutputFlags {
  std::string out;
  std::string json;
  bool text = false;
};

void AddOutputFlags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--out", flags.out, "write the primary output to FILE");
  cmd->add_option("--json", flags.json, "write a JSON run report to FILE");
  cmd->add_flag("--text", flags.text, "print a rounded table instead of CSV");
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot read %s", path));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status Emit(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return absl::OkStatus();
  }
  return WriteFileAtomically(path, text);
}

absl::StatusOr<uint64_t> DefaultSeed() {
  const char* env = std::getenv("BAP_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  uint64_t seed = 0;
  if (!absl::SimpleAtoi(env, &seed)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("BAP_SEED must be a non-negative integer, got '%s'",
                        env));
  }
  return seed;
}

std::string Slug(std::string name) {
  for (char& c : name) {
    c = c == ' ' ? '-' : static_cast<char>(std::tolower(c));
  }
  return name;
}

std::string MechanismBlock(const FiniteGame& game,
                           const FiniteMechanism& mech) {
  std::string out = "mechanism q(release | x):\n";
  out += absl::StrFormat("%-10s", "x");
  for (const std::string& r : mech.releases()) {
    out += absl::StrFormat(" %10s", r);
  }
  out += '\n';
  for (int x = 0; x < game.num_data(); ++x) {
    out += absl::StrFormat("%-10s", game.tables().data[x]);
    for (int eta = 0; eta < mech.num_releases(); ++eta) {
      out += absl::StrFormat(" %10.6f", mech.q(x, eta));
    }
    out += '\n';
  }
  return out;
}

std::string TripleBlock(const RiskTriple& t) {
  return absl::StrFormat("lambda = %s\nR_B = %s\nR_E = %s\nR_A = %s\n",
                         FormatDouble(t.lambda), FormatDouble(t.r_b),
                         FormatDouble(t.r_e), FormatDouble(t.r_a));
}

// ---------------------------------------------------------------------------
// cointoss

struct CoinFlags {
  std::optional<double> lambda;
  std::string grid = "0:1:0.01";
  std::string dump_lp;
  OutputFlags output;
};

absl::StatusOr<double> CoinLambda(const CoinFlags& flags) {
  if (flags.lambda) return *flags.lambda;
  const FiniteGame game = CoinGame();
  ASSIGN_OR_RETURN(RiskTriple full,
                   EvaluateMechanism(game, FiniteMechanism::Full(game), {0.0}));
  ASSIGN_OR_RETURN(RiskTriple null,
                   EvaluateMechanism(game, FiniteMechanism::Null(game), {0.0}));
  return CalibrateLambda(full, null);
}

std::optional<Failure> RunCoinTable(const CoinFlags& flags, RunReport& report,
                                    std::ostream& out) {
  absl::StatusOr<double> lambda = CoinLambda(flags);
  if (!lambda.ok()) return Failure{lambda.status(), true};
  absl::StatusOr<std::vector<CoinTableRow>> table = CoinTossTable(*lambda);
  if (!table.ok()) return Failure{table.status(), true};
  report.lambda = *lambda;
  for (const CoinTableRow& row : *table) {
    const std::string name = Slug(row.mechanism);
    std::optional<double> param;
    if (name == "randomized-response") param = row.parameter;
    report.rows.push_back(MakeReportRow(name, param, row.risks));
  }
  const std::string body = flags.output.text
                               ? TableText(report.rows, *lambda)
                               : TableCsv(report.rows);
  if (absl::Status s = Emit(body, flags.output.out, out); !s.ok()) {
    return Failure{s};
  }
  return std::nullopt;
}

std::optional<Failure> RunCoinSweep(const CoinFlags& flags, RunReport& report,
                                    std::ostream& out) {
  absl::StatusOr<double> lambda = CoinLambda(flags);
  if (!lambda.ok()) return Failure{lambda.status(), true};
  absl::StatusOr<std::vector<double>> grid = ParseGrid(flags.grid);
  if (!grid.ok()) return Failure{grid.status(), true};
  absl::StatusOr<CoinSweep> sweep = CoinTossSweep(*grid, *lambda);
  if (!sweep.ok()) return Failure{sweep.status(), true};
  report.lambda = *lambda;
  for (size_t i = 0; i < sweep->omega.size(); ++i) {
    report.rows.push_back(MakeReportRow("randomized-response",
                                        sweep->omega[i], sweep->rows[i]));
  }
  report.config["grid"] = flags.grid;
  report.config["reference_levels"] = {{"lp_optimum", sweep->lp_optimum},
                                       {"full_level", sweep->full_level},
                                       {"null_level", sweep->null_level}};
  std::string body;
  if (flags.output.text) {
    body = absl::StrFormat(
        "lp_optimum = %.4f\nfull_level = %.4f\nnull_level = %.4f\n",
        sweep->lp_optimum, sweep->full_level, sweep->null_level);
    body += TableText(report.rows, *lambda);
  } else {
    body = SweepCsv(report.rows);
  }
  if (absl::Status s = Emit(body, flags.output.out, out); !s.ok()) {
    return Failure{s};
  }
  return std::nullopt;
}

std::optional<Failure> SolveAndPrint(const FiniteGame& game, double lambda,
                                     const std::string& dump_lp,
                                     const OutputFlags& output,
                                     RunReport& report, std::ostream& out) {
  absl::StatusOr<OptimalMechanism> opt = SolveOptimalMechanism(game, lambda);
  if (!opt.ok()) return Failure{opt.status()};
  std::string dump;
  if (!dump_lp.empty()) {
    absl::StatusOr<MechanismLP> mlp = BuildMechanismLP(game, lambda);
    if (!mlp.ok()) return Failure{mlp.status()};
    dump = DumpMechanismLP(*mlp);
  }
  report.lambda = lambda;
  report.rows.push_back(MakeReportRow("linear-program", std::nullopt,
                                      opt->risks));
  report.config["mechanism"] = MechanismToJson(opt->mechanism);
  report.config["lp_objective"] = opt->lp_objective;
  const std::string body =
      TripleBlock(opt->risks) + MechanismBlock(game, opt->mechanism);
  if (absl::Status s = Emit(body, output.out, out); !s.ok()) {
    return Failure{s};
  }
  if (!dump.empty()) {
    if (absl::Status s = WriteFileAtomically(dump_lp, dump); !s.ok()) {
      return Failure{s};
    }
  }
  return std::nullopt;
}

std::optional<Failure> RunCoinLp(const CoinFlags& flags, RunReport& report,
                                 std::ostream& out) {
  absl::StatusOr<double> lambda = CoinLambda(flags);
  if (!lambda.ok()) return Failure{lambda.status(), true};
  if (absl::Status s = RiskWeights{*lambda}.Validate(); !s.ok()) {
    return Failure{s, true};
  }
  return SolveAndPrint(CoinGame(), *lambda, flags.dump_lp, flags.output,
                       report, out);
}

// ---------------------------------------------------------------------------
// gaussian

struct GaussFlags {
  GaussianModel model;
  NumericsConfig numerics;
  std::string target = "mean";
  std::string mechanism;
  std::string grid;
  std::optional<uint64_t> seed;
  std::optional<double> lambda;
  int threads = 0;
  OutputFlags output;
};

void AddGaussFlags(CLI::App* cmd, GaussFlags& f, bool parametric) {
  cmd->add_option("--n", f.model.n, "sample size")->capture_default_str();
  cmd->add_option("--sigma0", f.model.sigma0, "prior standard deviation")
      ->capture_default_str();
  cmd->add_option("--cb", f.model.c_b, "statistician's threshold")
      ->capture_default_str();
  cmd->add_option("--ce", f.model.c_e, "adversary's threshold")
      ->capture_default_str();
  cmd->add_option("--target", f.target, "adversary target: mean or max")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Monte Carlo seed (default $BAP_SEED)");
  cmd->add_option("--mc-samples", f.numerics.mc_samples,
                  "Monte Carlo sample size")
      ->capture_default_str();
  cmd->add_option("--quad-order", f.numerics.quad_order, "quadrature order")
      ->capture_default_str();
  cmd->add_option("--inner-quad-order", f.numerics.inner_quad_order,
                  "inner quadrature order for nested expectations")
      ->capture_default_str();
  cmd->add_option("--bins", f.numerics.bins,
                  "histogram bins (0 picks the target default)")
      ->capture_default_str();
  cmd->add_option("--threads", f.threads,
                  "worker threads for grid rows (0 = all cores)")
      ->capture_default_str();
  if (parametric) {
    cmd->add_option("--mechanism", f.mechanism,
                    "noisy-full, noisy-mean, noisy-median or one-bit")
        ->required();
    cmd->add_option("--grid", f.grid,
                    "parameter grid as a:b:step or a comma list");
    cmd->add_option("--lambda", f.lambda,
                    "privacy weight (default: calibrated)");
  }
  AddOutputFlags(cmd, f.output);
}

absl::StatusOr<uint64_t> ResolveSeed(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  return DefaultSeed();
}

struct GaussSetup {
  std::optional<GaussianEvaluator> eval;
  AdversaryTarget target = AdversaryTarget::kMean;
};

std::optional<Failure> PrepareGauss(GaussFlags& f, GaussSetup& setup,
                                    RunReport& report) {
  absl::StatusOr<AdversaryTarget> target = ParseTarget(f.target);
  if (!target.ok()) return Failure{target.status(), true};
  setup.target = *target;
  absl::StatusOr<uint64_t> seed = ResolveSeed(f.seed);
  if (!seed.ok()) return Failure{seed.status(), true};
  f.numerics.seed = *seed;
  absl::StatusOr<GaussianEvaluator> eval =
      GaussianEvaluator::Create(f.model, f.numerics);
  if (!eval.ok()) return Failure{eval.status(), true};
  setup.eval.emplace(*std::move(eval));
  report.seed = *seed;
  report.config["model"] = ModelToJson(f.model);
  report.config["numerics"] = ConfigToJson(f.numerics);
  report.config["target"] = std::string(TargetName(*target));
  return std::nullopt;
}

absl::StatusOr<double> CalibratedLambda(const GaussianEvaluator& eval,
                                        AdversaryTarget target) {
  ASSIGN_OR_RETURN(GaussianRisks full,
                   eval.Evaluate(GaussianMechanism::Full(), target));
  ASSIGN_OR_RETURN(GaussianRisks null,
                   eval.Evaluate(GaussianMechanism::Null(), target));
  return CalibrateLambda(full.Triple(0.0), null.Triple(0.0));
}

std::optional<Failure> RunGaussTable(GaussFlags& f, RunReport& report,
                                     std::ostream& out) {
  GaussSetup setup;
  if (auto fail = PrepareGauss(f, setup, report)) return fail;
  absl::StatusOr<GaussianTable> table =
      BuildTable(*setup.eval, setup.target, {}, f.threads);
  if (!table.ok()) return Failure{table.status()};
  report.lambda = table->lambda;
  for (const TableRow& row : table->rows) {
    report.rows.push_back(MakeReportRow(row));
  }
  const std::string body = f.output.text
                               ? TableText(report.rows, table->lambda)
                               : TableCsv(report.rows);
  if (absl::Status s = Emit(body, f.output.out, out); !s.ok()) {
    return Failure{s};
  }
  return std::nullopt;
}

std::optional<Failure> RunGaussSweep(GaussFlags& f, bool optimize,
                                     RunReport& report, std::ostream& out) {
  absl::StatusOr<MechanismKind> kind = ParseMechanismKind(f.mechanism);
  if (!kind.ok()) return Failure{kind.status(), true};
  std::vector<double> grid;
  if (f.grid.empty()) {
    grid = DefaultGrid(*kind);
  } else {
    absl::StatusOr<std::vector<double>> parsed = ParseGrid(f.grid);
    if (!parsed.ok()) return Failure{parsed.status(), true};
    grid = *std::move(parsed);
  }
  if (absl::Status s = ValidateGrid(*kind, grid); !s.ok()) {
    return Failure{s, true};
  }
  GaussSetup setup;
  if (auto fail = PrepareGauss(f, setup, report)) return fail;
  double lambda = 0.0;
  if (f.lambda) {
    lambda = *f.lambda;
  } else {
    absl::StatusOr<double> calibrated =
        CalibratedLambda(*setup.eval, setup.target);
    if (!calibrated.ok()) return Failure{calibrated.status()};
    lambda = *calibrated;
  }
  if (absl::Status s = RiskWeights{lambda}.Validate(); !s.ok()) {
    return Failure{s, true};
  }
  absl::StatusOr<std::vector<SweepRow>> rows =
      Sweep(*setup.eval, *kind, grid, setup.target, lambda, f.threads);
  if (!rows.ok()) return Failure{rows.status()};
  report.lambda = lambda;
  report.config["mechanism"] = std::string(MechanismName(*kind));
  report.config["grid"] = grid;
  if (optimize) {
    report.rows.push_back(MakeReportRow(ArgminRow(*rows), *kind));
  } else {
    for (const SweepRow& row : *rows) {
      report.rows.push_back(MakeReportRow(row, *kind));
    }
  }
  std::string body;
  if (f.output.text) {
    body = TableText(report.rows, lambda);
  } else {
    body = optimize ? TableCsv(report.rows) : SweepCsv(report.rows);
  }
  if (absl::Status s = Emit(body, f.output.out, out); !s.ok()) {
    return Failure{s};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// game

struct GameFlags {
  std::string game;
  std::string mechanism;
  bool optimal = false;
  std::optional<double> lambda;
  std::string dump_lp;
  OutputFlags output;
};

std::optional<Failure> RunGame(const GameFlags& f, RunReport& report,
                               std::ostream& out) {
  absl::StatusOr<std::string> text = ReadFile(f.game);
  if (!text.ok()) return Failure{text.status()};
  absl::StatusOr<FiniteGame> game = ParseGame(*text);
  if (!game.ok()) {
    return Failure{absl::InvalidArgumentError(absl::StrFormat(
        "%s: %s", f.game, game.status().message()))};
  }
  report.config["game"] = f.game;
  double lambda = 0.0;
  if (f.lambda) {
    lambda = *f.lambda;
  } else {
    absl::StatusOr<RiskTriple> full =
        EvaluateMechanism(*game, FiniteMechanism::Full(*game), {0.0});
    absl::StatusOr<RiskTriple> null =
        EvaluateMechanism(*game, FiniteMechanism::Null(*game), {0.0});
    if (!full.ok()) return Failure{full.status()};
    if (!null.ok()) return Failure{null.status()};
    absl::StatusOr<double> calibrated = CalibrateLambda(*full, *null);
    if (!calibrated.ok()) {
      return Failure{absl::InvalidArgumentError(absl::StrFormat(
                         "%s; pass --lambda explicitly",
                         calibrated.status().message())),
                     true};
    }
    lambda = *calibrated;
  }
  if (absl::Status s = RiskWeights{lambda}.Validate(); !s.ok()) {
    return Failure{s, true};
  }
  if (f.optimal) {
    return SolveAndPrint(*game, lambda, f.dump_lp, f.output, report, out);
  }
  absl::StatusOr<std::string> mech_text = ReadFile(f.mechanism);
  if (!mech_text.ok()) return Failure{mech_text.status()};
  absl::StatusOr<FiniteMechanism> mech = ParseMechanism(*mech_text, *game);
  if (!mech.ok()) {
    return Failure{absl::InvalidArgumentError(absl::StrFormat(
        "%s: %s", f.mechanism, mech.status().message()))};
  }
  absl::StatusOr<RiskTriple> risks =
      EvaluateMechanism(*game, *mech, {lambda});
  if (!risks.ok()) return Failure{risks.status()};
  report.lambda = lambda;
  report.config["mechanism_file"] = f.mechanism;
  report.rows.push_back(MakeReportRow("user", std::nullopt, *risks));
  if (absl::Status s = Emit(TripleBlock(*risks), f.output.out, out); !s.ok()) {
    return Failure{s};
  }
  return std::nullopt;
}

}  // namespace

absl::StatusOr<std::vector<double>> ParseGrid(std::string_view grid_text) {
  const std::string text(absl::StripAsciiWhitespace(
      absl::string_view(grid_text.data(), grid_text.size())));
  auto number = [&](absl::string_view token) -> absl::StatusOr<double> {
    double v = 0.0;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(token), &v) ||
        !std::isfinite(v)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "grid '%s': '%s' is not a finite number", text, token));
    }
    return v;
  };
  std::vector<double> grid;
  if (text.find(':') == std::string::npos) {
    for (absl::string_view token : absl::StrSplit(text, ',')) {
      ASSIGN_OR_RETURN(double v, number(token));
      grid.push_back(v);
    }
    return grid;
  }
  const std::vector<absl::string_view> parts = absl::StrSplit(text, ':');
  if (parts.size() != 3) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "grid '%s' must have the form start:stop:step", text));
  }
  ASSIGN_OR_RETURN(double a, number(parts[0]));
  ASSIGN_OR_RETURN(double b, number(parts[1]));
  ASSIGN_OR_RETURN(double step, number(parts[2]));
  if (!(step > 0.0) || b < a) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "grid '%s' needs step > 0 and stop >= start", text));
  }
  const double span = (b - a) / step;
  if (span + 1 > kMaxGridPoints) {
    return absl::InvalidArgumentError(
        absl::StrFormat("grid '%s' has too many points", text));
  }
  const int64_t count = static_cast<int64_t>(std::floor(span + 1e-9)) + 1;
  for (int64_t i = 0; i < count; ++i) {
    const double v = a + static_cast<double>(i) * step;
    grid.push_back(std::abs(v - b) < 1e-9 * step ? b : v);
  }
  return grid;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  const Clock::time_point start = Clock::now();

  CLI::App app{"Bayes risk evaluation and design of release mechanisms",
               "bap"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", std::string(BapVersion()));

  CoinFlags coin;
  CLI::App* cointoss =
      app.add_subcommand("cointoss", "coin-toss game with randomized response");
  cointoss->require_subcommand(1);
  CLI::App* coin_table =
      cointoss->add_subcommand("table", "risks of the four reference mechanisms");
  CLI::App* coin_sweep =
      cointoss->add_subcommand("sweep", "randomized response over an omega grid");
  CLI::App* coin_lp =
      cointoss->add_subcommand("lp", "optimal mechanism by linear programming");
  for (CLI::App* cmd : {coin_table, coin_sweep, coin_lp}) {
    cmd->add_option("--lambda", coin.lambda,
                    "privacy weight (default: calibrated)");
    AddOutputFlags(cmd, coin.output);
  }
  coin_sweep->add_option("--grid", coin.grid, "omega grid")
      ->capture_default_str();
  coin_lp->add_option("--dump-lp", coin.dump_lp,
                      "write the linear program listing to FILE");

  GaussFlags gauss;
  CLI::App* gaussian =
      app.add_subcommand("gaussian", "Gaussian mean hypothesis test");
  gaussian->require_subcommand(1);
  CLI::App* gauss_table = gaussian->add_subcommand(
      "table", "reference and optimized mechanisms at the calibrated weight");
  CLI::App* gauss_sweep =
      gaussian->add_subcommand("sweep", "one mechanism over a parameter grid");
  CLI::App* gauss_opt = gaussian->add_subcommand(
      "optimize", "grid minimizer of the overall risk for one mechanism");
  AddGaussFlags(gauss_table, gauss, false);
  AddGaussFlags(gauss_sweep, gauss, true);
  AddGaussFlags(gauss_opt, gauss, true);

  GameFlags game;
  CLI::App* game_cmd =
      app.add_subcommand("game", "evaluate or optimize a user-defined game");
  game_cmd->add_option("--game", game.game, "game JSON file")->required();
  CLI::Option* mech_opt = game_cmd->add_option(
      "--mechanism-file", game.mechanism, "mechanism JSON file");
  CLI::Option* optimal_opt =
      game_cmd->add_flag("--optimal", game.optimal, "solve for the optimum");
  mech_opt->excludes(optimal_opt);
  game_cmd->add_option("--lambda", game.lambda,
                       "privacy weight (default: calibrated)");
  game_cmd->add_option("--dump-lp", game.dump_lp,
                       "write the linear program listing to FILE");
  AddOutputFlags(game_cmd, game.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (game_cmd->parsed() && !game.optimal && game.mechanism.empty()) {
      throw CLI::RequiredError("--mechanism-file or --optimal");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunReport report;
  report.command = absl::StrCat("bap ", absl::StrJoin(args, " "));
  report.version = std::string(BapVersion());
  OutputFlags* output = nullptr;
  std::optional<Failure> failure;

  if (cointoss->parsed()) {
    output = &coin.output;
    if (auto seed = DefaultSeed(); seed.ok()) report.seed = *seed;
    if (coin_table->parsed()) {
      report.config["subcommand"] = "cointoss table";
      failure = RunCoinTable(coin, report, out);
    } else if (coin_sweep->parsed()) {
      report.config["subcommand"] = "cointoss sweep";
      failure = RunCoinSweep(coin, report, out);
    } else {
      report.config["subcommand"] = "cointoss lp";
      failure = RunCoinLp(coin, report, out);
    }
  } else if (gaussian->parsed()) {
    output = &gauss.output;
    if (gauss_table->parsed()) {
      report.config["subcommand"] = "gaussian table";
      failure = RunGaussTable(gauss, report, out);
    } else {
      const bool optimize = gauss_opt->parsed();
      report.config["subcommand"] =
          optimize ? "gaussian optimize" : "gaussian sweep";
      failure = RunGaussSweep(gauss, optimize, report, out);
    }
  } else {
    output = &game.output;
    if (auto seed = DefaultSeed(); seed.ok()) report.seed = *seed;
    report.config["subcommand"] = "game";
    failure = RunGame(game, report, out);
  }

  if (failure) {
    err << "error: " << failure->status.message() << "\n";
    if (failure->usage) err << "Run with --help for usage.\n";
    return failure->usage ? kExitUsage : kExitFailure;
  }
  if (!output->json.empty()) {
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - start)
                             .count();
    const std::string doc = ReportToJson(report).dump(2) + "\n";
    if (absl::Status s = WriteFileAtomically(output->json, doc); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace bap::cli
