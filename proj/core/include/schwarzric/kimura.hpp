#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schwarzric/schwarzian.hpp"
#include "schwarzric/detail/parallel.hpp"

namespace schwarzric {

/// One row of the Kimura table. A slot holds a fraction q (meaning q + Z) or
/// nullopt for "arbitrary".
struct TableRow {
  int index = 0;
  std::array<std::optional<BigRat>, 3> slots;
  bool requires_even_sum = false;
};

/// Rows 1..15 in table order.
const std::array<TableRow, 15>& kimura_table();

/// Condition (1): eps_i * x_{perm[i]} = q_i + n_i for every non-arbitrary slot i,
/// where x = (1/alpha, 1/beta, 1/gamma).
struct ConditionOneWitness {
  int row = 0;
  std::array<int, 3> permutation{0, 1, 2};  // slot i holds parameter permutation[i]
  std::array<int, 3> signs{1, 1, 1};
  std::array<std::optional<BigInt>, 3> integers;  // nullopt for the arbitrary slot

  friend bool operator==(const ConditionOneWitness&, const ConditionOneWitness&) = default;
};

/// Condition (2): sum_i signs[i] * x_i is an odd integer.
struct ConditionTwoWitness {
  int sum_index = 0;  // 0: +++, 1: -++, 2: +-+, 3: ++-
  std::array<int, 3> signs{1, 1, 1};
  BigInt value;

  friend bool operator==(const ConditionTwoWitness&, const ConditionTwoWitness&) = default;
};

using KimuraWitness = std::variant<ConditionOneWitness, ConditionTwoWitness>;

struct KimuraVerdict {
  enum class Outcome { ConditionRicHolds, AlgebraicSolutionIndicated };

  Outcome outcome = Outcome::ConditionRicHolds;
  std::optional<KimuraWitness> witness;
  /// Number of (row, permutation, sign pattern) assignments visited by condition (1).
  int assignments_examined = 0;
  /// Number of the four sums tested by condition (2).
  int sums_examined = 0;
};

std::string_view to_string(KimuraVerdict::Outcome o);

/// 15 rows x 6 permutations x 8 sign patterns.
inline constexpr int kConditionOneAssignments = 15 * 6 * 8;

/// Permutations in lexicographic order.
const std::array<std::array<int, 3>, 6>& slot_permutations();

std::optional<ConditionTwoWitness> condition_two(const TriangleParams& p);
/// First witness by row, then permutation, then sign pattern (+ before -, slot 0 most significant).
std::optional<ConditionOneWitness> condition_one(const TriangleParams& p, int* examined = nullptr);
KimuraVerdict decide_condition_ric(const TriangleParams& p);

/// Re-verifies a witness by direct arithmetic, independent of the search.
bool replay_witness(const TriangleParams& p, const KimuraWitness& w);

std::string describe(const KimuraWitness& w);

struct SweepEntry {
  TriangleParams params;
  KimuraVerdict verdict;
};

/// All alpha <= beta <= gamma in {2..bound} u {inf} with 1/alpha + 1/beta + 1/gamma < 1,
/// in enumeration order (inf sorts last). Work is split over `jobs` threads; the
/// result order does not depend on the thread count. Requires bound >= 2.
std::vector<SweepEntry> hyperbolic_integer_sweep(int bound, int jobs = 1);

/// The hyperbolic triples enumerated by the sweep, without deciding them.
std::vector<TriangleParams> hyperbolic_integer_triples(int bound);

}  // namespace schwarzric
