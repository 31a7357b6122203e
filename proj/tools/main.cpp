#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "schwarzric/pipeline.hpp"

using namespace schwarzric;

namespace {

struct Flags {
  std::string triangle;
  std::string expr;
  std::string var = "y";
  std::string moebius;
  bool oracle = false;
  bool json = false;
  bool full = false;
  int bound = 100;
  int jobs = 1;
  int degree_bound = 24;
  std::string truncation = "-5";
  std::string lambda0;
  std::string a0;
  std::string out;
};

void add_input_flags(CLI::App* cmd, Flags& f) {
  auto* tri = cmd->add_option("--triangle", f.triangle, "triangle parameters \"alpha,beta,gamma\" (rationals or inf)");
  cmd->add_option("--expr", f.expr, "R as a rational expression")->excludes(tri);
  cmd->add_option("--var", f.var, "variable name used in --expr")->capture_default_str();
  cmd->add_option("--moebius", f.moebius, "pull R back along z = (a*y + b)/(c*y + d), given as \"a,b,c,d\"");
}

void add_common_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--json", f.json, "emit a single JSON document");
  cmd->add_option("--out", f.out, "write the report to FILE instead of stdout");
  cmd->add_option("--degree-bound", f.degree_bound, "polynomial degree cap for the rational-solution oracle")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
}

EquationInput make_input(const Flags& f) {
  EquationInput in;
  if (!f.triangle.empty()) in.triangle = TriangleParams::parse(f.triangle);
  if (!f.expr.empty()) in.expr = f.expr;
  in.var = f.var;
  if (!f.moebius.empty()) in.moebius = Moebius::parse(f.moebius);
  return in;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os) throw schwarzric::Error(ErrorKind::InvalidArgument, "cli", "cannot open output file '" + f.out + "'");
  os << text;
}

int run(CLI::App& app, const Flags& f, CLI::App* analyze, CLI::App* sweep, CLI::App* series, CLI::App* oracle) {
  OracleOptions oopts;
  oopts.degree_bound = f.degree_bound;

  if (analyze->parsed()) {
    AnalyzeOptions opts{f.oracle, oopts};
    const AnalysisReport r = cmd_analyze(make_input(f), opts);
    emit(f, f.json ? render_json(r) : render_text(r));
    return r.consistency == ConsistencyReport::Status::Contradiction ? kExitInternalInconsistency : kExitOk;
  }
  if (sweep->parsed()) {
    if (f.bound < 2) throw schwarzric::Error(ErrorKind::InvalidArgument, "cli", "--bound must be at least 2");
    SweepOptions opts;
    opts.bound = f.bound;
    opts.jobs = f.jobs;
    opts.full = f.full;
    opts.cross_check = f.oracle;
    opts.oracle = oopts;
    const SweepReport r = cmd_sweep(opts);
    emit(f, f.json ? render_json(r, f.full) : render_text(r, f.full));
    return r.all_hold() && r.contradictions == 0 ? kExitOk : kExitInternalInconsistency;
  }
  if (series->parsed()) {
    SeriesCheckOptions opts;
    if (!f.lambda0.empty()) opts.lambda0 = BigRat::parse(f.lambda0);
    if (!f.a0.empty()) opts.a0_expr = f.a0;
    opts.truncation = BigRat::parse(f.truncation);
    opts.oracle = oopts;
    const SeriesCheckReport r = cmd_series_check(make_input(f), opts);
    emit(f, f.json ? render_json(r) : render_text(r));
    return kExitOk;
  }
  if (oracle->parsed()) {
    const OracleReport r = cmd_oracle(make_input(f), oopts);
    emit(f, f.json ? render_json(r) : render_text(r));
    return r.consistency && r.consistency->status == ConsistencyReport::Status::Contradiction
               ? kExitInternalInconsistency
               : kExitOk;
  }
  std::cerr << app.help();
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwarzian equations with triangular coefficient: Kimura decision, Riccati oracle, Puiseux checks"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "classify R and decide the Riccati condition");
  add_input_flags(analyze, f);
  add_common_flags(analyze, f);
  analyze->add_flag("--oracle", f.oracle, "also search for rational Riccati solutions and cross-check");

  auto* sweep = app.add_subcommand("sweep", "decide every hyperbolic integer triple up to --bound");
  sweep->add_option("--bound", f.bound, "largest finite parameter")->capture_default_str();
  sweep->add_option("--jobs", f.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sweep->add_flag("--full", f.full, "print one line per triple");
  sweep->add_flag("--oracle", f.oracle, "cross-check each verdict against the rational-solution oracle");
  add_common_flags(sweep, f);

  auto* series = app.add_subcommand("series-check", "Puiseux leading-term analysis of y''/y'^2 in w = y'");
  add_input_flags(series, f);
  add_common_flags(series, f);
  series->add_option("--lambda0", f.lambda0, "leading exponent (rational)");
  series->add_option("--a0", f.a0, "leading coefficient as an expression in y (default 1)");
  series->add_option("--truncation", f.truncation, "series cutoff exponent")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "rational solutions of the associated Riccati equation");
  add_input_flags(oracle, f);
  add_common_flags(oracle, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return run(app, f, analyze, sweep, series, oracle);
  } catch (const schwarzric::Error& e) {
    std::cerr << "error [" << e.module() << "] " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternalInconsistency;
  }
}
