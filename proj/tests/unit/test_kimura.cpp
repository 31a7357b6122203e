#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "schwarzric/kimura.hpp"

using namespace schwarzric;
using schwarzric::testing::Rng;
using schwarzric::testing::uniform;

namespace {

const ExtRational kInf = ExtRational::infinity();

// Independent transcription of the table: slot fractions as strings, "*" for arbitrary.
struct RefRow {
  const char* slots[3];
  bool even;
};
const RefRow kRef[15] = {
    {{"1/2", "1/2", "*"}, false},   {{"1/2", "1/2", "1/2"}, false}, {{"2/3", "1/3", "1/4"}, true},
    {{"1/2", "1/3", "1/4"}, false}, {{"2/3", "1/4", "1/4"}, true},  {{"1/2", "1/3", "1/5"}, false},
    {{"2/5", "1/3", "1/3"}, true},  {{"2/3", "1/5", "1/5"}, true},  {{"1/2", "2/5", "1/5"}, true},
    {{"3/5", "1/3", "1/5"}, true},  {{"2/5", "2/5", "2/5"}, true},  {{"2/3", "1/3", "1/5"}, true},
    {{"4/5", "1/5", "1/5"}, true},  {{"1/2", "2/5", "1/3"}, true},  {{"3/5", "2/5", "1/3"}, true},
};

// Smallest row index matching by brute force, 0 if none.
int reference_first_row(const TriangleParams& p) {
  const auto x = p.inverses();
  int perm[3] = {0, 1, 2};
  for (int r = 0; r < 15; ++r) {
    std::sort(perm, perm + 3);
    do {
      for (int mask = 0; mask < 8; ++mask) {
        bool ok = true;
        BigInt sum = 0;
        for (int s = 0; s < 3 && ok; ++s) {
          if (std::string(kRef[r].slots[s]) == "*") continue;
          const BigRat v = (mask >> s & 1 ? -x[perm[s]] : x[perm[s]]) - BigRat::parse(kRef[r].slots[s]);
          ok = v.is_integer();
          if (ok) sum += v.numerator();
        }
        if (ok && (!kRef[r].even || sum % 2 == 0)) return r + 1;
      }
    } while (std::next_permutation(perm, perm + 3));
  }
  return 0;
}

bool reference_condition_two(const TriangleParams& p) {
  const auto x = p.inverses();
  for (const auto& s : {std::array{1, 1, 1}, std::array{-1, 1, 1}, std::array{1, -1, 1}, std::array{1, 1, -1}}) {
    const BigRat v = BigRat(s[0]) * x[0] + BigRat(s[1]) * x[1] + BigRat(s[2]) * x[2];
    if (v.is_integer() && v.numerator() % 2 != 0) return true;
  }
  return false;
}

ExtRational random_param(Rng& rng) {
  static const int dens[] = {1, 2, 3, 4, 5, 6, 10, 12, 15, 30};
  const int num = uniform(rng, -14, 14);
  if (num == 0) return kInf;
  return ExtRational(BigRat(dens[uniform(rng, 0, 9)], num));
}

}  // namespace

TEST(KimuraTable, MatchesReferenceTranscription) {
  const auto& table = kimura_table();
  for (int r = 0; r < 15; ++r) {
    EXPECT_EQ(table[r].index, r + 1);
    EXPECT_EQ(table[r].requires_even_sum, kRef[r].even) << "row " << r + 1;
    for (int s = 0; s < 3; ++s) {
      if (std::string(kRef[r].slots[s]) == "*") {
        EXPECT_FALSE(table[r].slots[s].has_value());
      } else {
        ASSERT_TRUE(table[r].slots[s].has_value());
        EXPECT_EQ(*table[r].slots[s], BigRat::parse(kRef[r].slots[s])) << "row " << r + 1 << " slot " << s;
      }
    }
  }
}

TEST(Kimura, AgreesWithBruteForceOnRandomRationals) {
  Rng rng(31);
  int fired = 0;
  for (int i = 0; i < 3000; ++i) {
    const TriangleParams p(random_param(rng), random_param(rng), random_param(rng));
    const int row = reference_first_row(p);
    const bool two = reference_condition_two(p);
    const KimuraVerdict v = decide_condition_ric(p);
    const bool indicated = row != 0 || two;
    ASSERT_EQ(v.outcome == KimuraVerdict::Outcome::AlgebraicSolutionIndicated, indicated) << p.str();
    if (!indicated) continue;
    ++fired;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(replay_witness(p, *v.witness)) << p.str();
    if (row != 0) {
      const auto* c1 = std::get_if<ConditionOneWitness>(&*v.witness);
      ASSERT_NE(c1, nullptr) << p.str();
      EXPECT_EQ(c1->row, row) << p.str();
    }
  }
  EXPECT_GT(fired, 100);
}

TEST(Kimura, HyperbolicExamplesHold) {
  for (const auto& p : {TriangleParams(2, 3, 7), TriangleParams(2, 3, kInf), TriangleParams(kInf, kInf, kInf),
                        TriangleParams(2, 4, 5), TriangleParams(3, 3, 4)}) {
    const KimuraVerdict v = decide_condition_ric(p);
    EXPECT_EQ(v.outcome, KimuraVerdict::Outcome::ConditionRicHolds) << p.str();
    EXPECT_EQ(v.assignments_examined, kConditionOneAssignments);
    EXPECT_EQ(v.sums_examined, 4);
    EXPECT_FALSE(v.witness.has_value());
  }
}

TEST(Kimura, RowFourForTwoThreeFour) {
  const KimuraVerdict v = decide_condition_ric(TriangleParams(2, 3, 4));
  ASSERT_EQ(v.outcome, KimuraVerdict::Outcome::AlgebraicSolutionIndicated);
  const auto& w = std::get<ConditionOneWitness>(*v.witness);
  EXPECT_EQ(w.row, 4);
  EXPECT_EQ(w.permutation, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(w.signs, (std::array<int, 3>{1, 1, 1}));
  EXPECT_EQ(describe(*v.witness), "condition 1, row 4: 1/alpha = 1/2, 1/beta = 1/3, 1/gamma = 1/4");
}

TEST(Kimura, RowSixForTwoThreeFive) {
  const KimuraVerdict v = decide_condition_ric(TriangleParams(2, 3, 5));
  ASSERT_EQ(v.outcome, KimuraVerdict::Outcome::AlgebraicSolutionIndicated);
  EXPECT_EQ(std::get<ConditionOneWitness>(*v.witness).row, 6);
}

TEST(Kimura, RowSevenWithRationalParameter) {
  const KimuraVerdict v = decide_condition_ric(TriangleParams(BigRat(5, 2), 3, 3));
  ASSERT_EQ(v.outcome, KimuraVerdict::Outcome::AlgebraicSolutionIndicated);
  const auto& w = std::get<ConditionOneWitness>(*v.witness);
  EXPECT_EQ(w.row, 7);
  EXPECT_TRUE(replay_witness(TriangleParams(BigRat(5, 2), 3, 3), *v.witness));
}

TEST(Kimura, ConditionTwoExamples) {
  const auto w1 = condition_two(TriangleParams(1, kInf, kInf));
  ASSERT_TRUE(w1.has_value());
  EXPECT_EQ(w1->sum_index, 0);
  EXPECT_EQ(w1->value, 1);
  const auto w3 = condition_two(TriangleParams(1, 1, 1));
  ASSERT_TRUE(w3.has_value());
  EXPECT_EQ(w3->value, 3);
  // 1/2 + 1/2 - 1 = 0 is even; the +- sums give 0 or 1.
  const auto w = condition_two(TriangleParams(2, 2, 1));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->value, 1);
  EXPECT_FALSE(condition_two(TriangleParams(2, 3, 7)).has_value());
}

TEST(Kimura, DihedralFamilyFiresRowOne) {
  for (int n = 2; n <= 50; ++n) {
    const TriangleParams p(2, 2, n);
    const KimuraVerdict v = decide_condition_ric(p);
    ASSERT_EQ(v.outcome, KimuraVerdict::Outcome::AlgebraicSolutionIndicated);
    const auto& w = std::get<ConditionOneWitness>(*v.witness);
    EXPECT_EQ(w.row, 1);
    EXPECT_FALSE(w.integers[2].has_value());
    EXPECT_TRUE(replay_witness(p, *v.witness));
  }
}

TEST(Kimura, ReplayRejectsTamperedWitnesses) {
  const TriangleParams p(2, 3, 4);
  ConditionOneWitness w = std::get<ConditionOneWitness>(*decide_condition_ric(p).witness);
  w.row = 5;
  EXPECT_FALSE(replay_witness(p, w));
  ConditionTwoWitness c{0, {1, 1, 1}, 1};
  EXPECT_FALSE(replay_witness(p, c));
  EXPECT_TRUE(replay_witness(TriangleParams(1, kInf, kInf), c));
}

TEST(Kimura, ParityMatters) {
  // 1/alpha = -1/3 = 2/3 - 1, 1/beta = 1/3, 1/gamma = 1/4: row 3 only with l = -1, odd.
  const TriangleParams p(-3, 3, 4);
  EXPECT_NE(reference_first_row(p), 3);
  const KimuraVerdict v = decide_condition_ric(p);
  if (v.witness)
    if (const auto* w = std::get_if<ConditionOneWitness>(&*v.witness)) EXPECT_NE(w->row, 3);
}

TEST(Sweep, EnumerationOrderAndCounts) {
  const auto triples = hyperbolic_integer_triples(7);
  EXPECT_EQ(triples.size(), 71u);
  EXPECT_EQ(triples.front(), TriangleParams(2, 3, 7));
  EXPECT_EQ(triples.back(), TriangleParams(kInf, kInf, kInf));
  std::set<std::string> seen;
  for (const auto& t : triples) {
    EXPECT_TRUE(t.is_hyperbolic());
    EXPECT_TRUE(t.is_integer_triple());
    EXPECT_TRUE(seen.insert(t.str()).second);
  }
  EXPECT_EQ(hyperbolic_integer_triples(2).size(), 2u);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto a = hyperbolic_integer_sweep(20, 1);
  const auto b = hyperbolic_integer_sweep(20, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].params, b[i].params);
    EXPECT_EQ(a[i].verdict.outcome, b[i].verdict.outcome);
  }
}

TEST(Sweep, AllHoldUpToForty) {
  for (const auto& e : hyperbolic_integer_sweep(40, 2))
    ASSERT_EQ(e.verdict.outcome, KimuraVerdict::Outcome::ConditionRicHolds) << e.params.str();
}
