#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schwarzric/kimura.hpp"
#include "schwarzric/ratfunc.hpp"

namespace schwarzric {

/// du/dy + u^2 + 1/2 R(y) = 0.
struct RiccatiEq {
  RatFunc R;

  RatFunc half_R() const { return R * RatFunc(BigRat(1, 2)); }
  std::string str() const;
};

/// v'' + r v = 0; related to the Riccati equation through u = v'/v.
struct LinearODE2 {
  RatFunc r;

  std::string str() const;
};

RiccatiEq associate_riccati(const RatFunc& R);
/// v'' + 1/2 R v = 0.
LinearODE2 to_linear_ode(const RiccatiEq& e);

/// u' + u^2 + 1/2 R.
RatFunc riccati_residual(const RiccatiEq& e, const RatFunc& u);
/// a' + 1/2 a^2 + R; vanishes iff a/2 solves the Riccati equation.
RatFunc half_riccati_residual(const RatFunc& R, const RatFunc& a);
/// v'' + r v.
RatFunc linear_residual(const LinearODE2& ode, const RatFunc& v);

/// For u with only simple poles, integer residues and no polynomial part, the
/// rational v (monic up to the product form) with u = v'/v.
std::optional<RatFunc> reconstruct_linear_solution(const RatFunc& u);

/// One admissible local choice at a singular point: the signed principal square-root
/// part and the exponent contributed to the degree formula.
struct LocalOption {
  int sign = 1;
  RatFunc sqrt_part;
  BigRat exponent;
};

struct LocalData {
  std::string point;          // "y = c" or "inf"
  std::optional<BigRat> pole; // nullopt at infinity
  int order = 0;              // pole order (or order of vanishing at infinity)
  std::vector<LocalOption> options;
  enum class Status { Ok, IrrationalLocalExponent, OddOrderObstruction } status = Status::Ok;
  std::string note;
};

std::string_view to_string(LocalData::Status s);

struct CandidateRecord {
  std::vector<int> option_index;  // one per LocalData entry, in the same order
  BigRat degree;
  enum class Status { DegreeNotNonnegativeInteger, DegreeAboveCap, NoPolynomial, Solution, Family } status;
  RatFunc omega;
  std::size_t kernel_dimension = 0;
};

std::string_view to_string(CandidateRecord::Status s);

/// u = omega + P'/P for every nonzero P in span(basis).
struct SolutionFamily {
  RatFunc omega;
  std::vector<Poly> basis;

  std::string str() const;
};

struct OracleOptions {
  int degree_bound = 24;
  bool certify = true;  // keep per-candidate records
};

struct OracleResult {
  std::vector<RatFunc> solutions;        // fixed rational solutions, deduplicated
  std::vector<SolutionFamily> families;  // movable-pole families
  std::vector<LocalData> local;
  std::vector<CandidateRecord> candidates;
  std::size_t candidates_examined = 0;
  /// False only when a candidate was skipped by the degree bound.
  bool complete = true;
  std::vector<std::string> notes;
};

/// All rational u with u' + u^2 + 1/2 R = 0, via exhaustive local-exponent search.
/// Throws NonRationalPoles when 1/2 R has a pole off Q.
OracleResult rational_solutions(const RiccatiEq& e, const OracleOptions& opts = {});

struct ConsistencyReport {
  enum class Status { Consistent, Contradiction };

  Status status = Status::Consistent;
  KimuraVerdict verdict;
  OracleResult oracle;
  std::string note;
};

std::string_view to_string(ConsistencyReport::Status s);

/// Kimura decision against the rational-solution oracle for R_{alpha,beta,gamma}.
ConsistencyReport cross_check(const TriangleParams& p, const OracleOptions& opts = {});

}  // namespace schwarzric
