#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schwarzric/kimura.hpp"
#include "schwarzric/puiseux.hpp"
#include "schwarzric/riccati.hpp"
#include "schwarzric/schwarzian.hpp"

namespace schwarzric {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInternalInconsistency = 3,
};

/// Either a triangle or an expression in `var`, optionally normalized by a Moebius pullback.
struct EquationInput {
  std::optional<TriangleParams> triangle;
  std::optional<std::string> expr;
  std::string var = "y";
  std::optional<Moebius> moebius;

  /// Echo of the input as given on the command line.
  std::string echo() const;
  /// R after parsing and the optional pullback. R = 0 when neither source is set.
  RatFunc coefficient() const;
};

struct AnalyzeOptions {
  bool run_oracle = false;
  OracleOptions oracle;
};

struct AnalysisReport {
  enum class Conclusion { NoOrderTwoSubvarieties, AlgebraicSolutionIndicated, NotTriangular };

  std::string input;
  RatFunc normalized;
  TriangularRecognition recognition;
  std::optional<TriangleParams> params;
  bool params_recognized = false;  // params recovered from R (signs lost)
  std::optional<bool> hyperbolic;
  std::optional<KimuraVerdict> kimura;
  std::optional<OracleResult> oracle;
  std::optional<ConsistencyReport::Status> consistency;
  Conclusion conclusion = Conclusion::NotTriangular;
  std::string conclusion_text;
  std::vector<std::string> citations;
};

std::string_view to_string(AnalysisReport::Conclusion c);

AnalysisReport cmd_analyze(const EquationInput& in, const AnalyzeOptions& opts = {});

struct SweepOptions {
  int bound = 100;
  int jobs = 1;
  bool full = false;
  bool cross_check = false;
  OracleOptions oracle;
};

struct SweepRow {
  TriangleParams params;
  KimuraVerdict verdict;
  std::optional<ConsistencyReport::Status> consistency;
  std::size_t rational_solutions = 0;
};

struct SweepReport {
  int bound = 0;
  std::vector<SweepRow> rows;
  std::size_t holds = 0;
  std::size_t contradictions = 0;
  bool all_hold() const { return holds == rows.size(); }
};

SweepReport cmd_sweep(const SweepOptions& opts);

struct SeriesCheckOptions {
  std::optional<BigRat> lambda0;
  std::optional<std::string> a0_expr;
  BigRat truncation{-5};
  OracleOptions oracle;
};

struct SeriesCheckReport {
  std::string input;
  RatFunc R;
  /// One entry per analyzed leading shape (lambda0, a0).
  std::vector<ConstraintReport> constraints;
  /// Rational a0 candidates from the oracle (a0 = 2u) when lambda0 = 0 and no a0 was given.
  std::vector<RatFunc> a0_solutions;
  std::vector<SolutionFamily> a0_families;
  std::vector<std::string> notes;
};

SeriesCheckReport cmd_series_check(const EquationInput& in, const SeriesCheckOptions& opts);

struct OracleReport {
  std::string input;
  RatFunc R;
  RiccatiEq riccati;
  LinearODE2 linear;
  OracleResult result;
  std::optional<ConsistencyReport> consistency;  // when R is recognized as triangular
};

OracleReport cmd_oracle(const EquationInput& in, const OracleOptions& opts);

std::string render_text(const AnalysisReport& r);
std::string render_json(const AnalysisReport& r);
std::string render_text(const SweepReport& r, bool full);
std::string render_json(const SweepReport& r, bool full);
std::string render_text(const SeriesCheckReport& r);
std::string render_json(const SeriesCheckReport& r);
std::string render_text(const OracleReport& r);
std::string render_json(const OracleReport& r);

}  // namespace schwarzric
