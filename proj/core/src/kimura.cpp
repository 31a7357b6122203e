#include "schwarzric/kimura.hpp"

#include <sstream>

#include "schwarzric/error.hpp"

namespace schwarzric {

namespace {

// Precomputed per (parameter, sign): fractional part and floor of sign * x.
struct SignedValue {
  BigRat frac;
  BigInt floor;
};

std::array<std::array<SignedValue, 2>, 3> signed_values(const std::array<BigRat, 3>& x) {
  std::array<std::array<SignedValue, 2>, 3> out;
  for (int p = 0; p < 3; ++p) {
    for (int s = 0; s < 2; ++s) {
      const BigRat v = s == 0 ? x[p] : -x[p];
      BigInt f = v.floor();
      out[p][s] = SignedValue{v - BigRat(f), std::move(f)};
    }
  }
  return out;
}

int sign_of_pattern(int pattern, int slot) { return (pattern >> (2 - slot)) & 1 ? -1 : 1; }

bool is_odd_integer(const BigRat& v) { return v.is_integer() && mpz_odd_p(v.numerator().get_mpz_t()); }

constexpr std::array<std::array<int, 3>, 4> kSumSigns{{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}};

}  // namespace

const std::array<TableRow, 15>& kimura_table() {
  static const std::array<TableRow, 15> table = [] {
    auto q = [](long n, long d) { return std::optional<BigRat>(BigRat(n, d)); };
    const std::optional<BigRat> any;
    return std::array<TableRow, 15>{{
        {1, {q(1, 2), q(1, 2), any}, false},
        {2, {q(1, 2), q(1, 2), q(1, 2)}, false},
        {3, {q(2, 3), q(1, 3), q(1, 4)}, true},
        {4, {q(1, 2), q(1, 3), q(1, 4)}, false},
        {5, {q(2, 3), q(1, 4), q(1, 4)}, true},
        {6, {q(1, 2), q(1, 3), q(1, 5)}, false},
        {7, {q(2, 5), q(1, 3), q(1, 3)}, true},
        {8, {q(2, 3), q(1, 5), q(1, 5)}, true},
        {9, {q(1, 2), q(2, 5), q(1, 5)}, true},
        {10, {q(3, 5), q(1, 3), q(1, 5)}, true},
        {11, {q(2, 5), q(2, 5), q(2, 5)}, true},
        {12, {q(2, 3), q(1, 3), q(1, 5)}, true},
        {13, {q(4, 5), q(1, 5), q(1, 5)}, true},
        {14, {q(1, 2), q(2, 5), q(1, 3)}, true},
        {15, {q(3, 5), q(2, 5), q(1, 3)}, true},
    }};
  }();
  return table;
}

const std::array<std::array<int, 3>, 6>& slot_permutations() {
  static const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

std::string_view to_string(KimuraVerdict::Outcome o) {
  return o == KimuraVerdict::Outcome::ConditionRicHolds ? "ConditionRicHolds" : "AlgebraicSolutionIndicated";
}

std::optional<ConditionTwoWitness> condition_two(const TriangleParams& p) {
  const auto x = p.inverses();
  for (int k = 0; k < 4; ++k) {
    const auto& s = kSumSigns[k];
    const BigRat sum = BigRat(s[0]) * x[0] + BigRat(s[1]) * x[1] + BigRat(s[2]) * x[2];
    if (is_odd_integer(sum)) return ConditionTwoWitness{k, s, sum.numerator()};
  }
  return std::nullopt;
}

std::optional<ConditionOneWitness> condition_one(const TriangleParams& p, int* examined) {
  const auto values = signed_values(p.inverses());
  int visited = 0;
  for (const TableRow& row : kimura_table()) {
    // match[slot][param][sign]
    bool match[3][3][2];
    for (int slot = 0; slot < 3; ++slot)
      for (int param = 0; param < 3; ++param)
        for (int s = 0; s < 2; ++s)
          match[slot][param][s] = !row.slots[slot] || values[param][s].frac == *row.slots[slot];

    for (const auto& perm : slot_permutations()) {
      for (int pattern = 0; pattern < 8; ++pattern) {
        ++visited;
        bool ok = true;
        for (int slot = 0; slot < 3 && ok; ++slot)
          ok = match[slot][perm[slot]][sign_of_pattern(pattern, slot) < 0 ? 1 : 0];
        if (!ok) continue;

        ConditionOneWitness w;
        w.row = row.index;
        w.permutation = perm;
        BigInt total = 0;
        for (int slot = 0; slot < 3; ++slot) {
          w.signs[slot] = sign_of_pattern(pattern, slot);
          if (!row.slots[slot]) continue;
          w.integers[slot] = values[perm[slot]][w.signs[slot] < 0 ? 1 : 0].floor;
          total += *w.integers[slot];
        }
        if (row.requires_even_sum && mpz_odd_p(total.get_mpz_t())) continue;
        if (examined) *examined = visited;
        return w;
      }
    }
  }
  if (examined) *examined = visited;
  return std::nullopt;
}

KimuraVerdict decide_condition_ric(const TriangleParams& p) {
  KimuraVerdict v;
  if (auto w1 = condition_one(p, &v.assignments_examined)) {
    v.outcome = KimuraVerdict::Outcome::AlgebraicSolutionIndicated;
    v.witness = std::move(*w1);
    return v;
  }
  auto w2 = condition_two(p);
  v.sums_examined = w2 ? w2->sum_index + 1 : 4;
  if (w2) {
    v.outcome = KimuraVerdict::Outcome::AlgebraicSolutionIndicated;
    v.witness = std::move(*w2);
  }
  return v;
}

bool replay_witness(const TriangleParams& p, const KimuraWitness& w) {
  const auto x = p.inverses();
  if (const auto* c2 = std::get_if<ConditionTwoWitness>(&w)) {
    BigRat sum;
    for (int i = 0; i < 3; ++i) {
      if (c2->signs[i] != 1 && c2->signs[i] != -1) return false;
      sum += BigRat(c2->signs[i]) * x[i];
    }
    return sum == BigRat(c2->value) && is_odd_integer(sum);
  }
  const auto& c1 = std::get<ConditionOneWitness>(w);
  if (c1.row < 1 || c1.row > 15) return false;
  const TableRow& row = kimura_table()[c1.row - 1];
  std::array<bool, 3> used{};
  BigInt total = 0;
  for (int slot = 0; slot < 3; ++slot) {
    const int param = c1.permutation[slot];
    if (param < 0 || param > 2 || used[param]) return false;
    used[param] = true;
    if (!row.slots[slot]) {
      if (c1.integers[slot]) return false;
      continue;
    }
    if (!c1.integers[slot]) return false;
    const BigRat lhs = BigRat(c1.signs[slot]) * x[param] - *row.slots[slot];
    if (lhs != BigRat(*c1.integers[slot])) return false;
    total += *c1.integers[slot];
  }
  return !row.requires_even_sum || mpz_even_p(total.get_mpz_t());
}

std::string describe(const KimuraWitness& w) {
  static constexpr const char* names[] = {"1/alpha", "1/beta", "1/gamma"};
  std::ostringstream os;
  if (const auto* c2 = std::get_if<ConditionTwoWitness>(&w)) {
    os << "condition 2: ";
    for (int i = 0; i < 3; ++i) {
      if (i > 0 || c2->signs[i] < 0) os << (c2->signs[i] < 0 ? (i ? " - " : "-") : " + ");
      os << names[i];
    }
    os << " = " << c2->value.get_str() << " (odd)";
    return os.str();
  }
  const auto& c1 = std::get<ConditionOneWitness>(w);
  const TableRow& row = kimura_table()[c1.row - 1];
  os << "condition 1, row " << c1.row << ":";
  for (int slot = 0; slot < 3; ++slot) {
    os << (slot ? "," : "") << ' ';
    if (!row.slots[slot]) {
      os << names[c1.permutation[slot]] << " arbitrary";
      continue;
    }
    os << (c1.signs[slot] < 0 ? "-" : "") << names[c1.permutation[slot]] << " = " << row.slots[slot]->str();
    const BigInt& n = *c1.integers[slot];
    if (n != 0) os << (n < 0 ? " - " : " + ") << BigInt(abs(n)).get_str();
  }
  if (row.requires_even_sum) {
    BigInt total = 0;
    for (const auto& n : c1.integers)
      if (n) total += *n;
    os << "; integer sum " << total.get_str() << " even";
  }
  return os.str();
}

std::vector<TriangleParams> hyperbolic_integer_triples(int bound) {
  if (bound < 2) throw Error(ErrorKind::InvalidArgument, "kimura", "sweep bound must be >= 2");
  // Values 2..bound, then bound+1 standing for infinity.
  const int inf = bound + 1;
  auto to_ext = [&](int v) { return v == inf ? ExtRational::infinity() : ExtRational(v); };
  auto inv = [&](int v) { return v == inf ? BigRat(0) : BigRat(1, v); };
  std::vector<TriangleParams> out;
  for (int a = 2; a <= inf; ++a) {
    for (int b = a; b <= inf; ++b) {
      const BigRat ab = inv(a) + inv(b);
      if (ab >= BigRat(1)) continue;
      for (int c = b; c <= inf; ++c) {
        if (ab + inv(c) < BigRat(1)) out.emplace_back(to_ext(a), to_ext(b), to_ext(c));
      }
    }
  }
  return out;
}

std::vector<SweepEntry> hyperbolic_integer_sweep(int bound, int jobs) {
  const auto triples = hyperbolic_integer_triples(bound);
  std::vector<KimuraVerdict> verdicts(triples.size());
  parallel_for_index(triples.size(), jobs, [&](std::size_t i) { verdicts[i] = decide_condition_ric(triples[i]); });
  std::vector<SweepEntry> out;
  out.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) out.push_back({triples[i], std::move(verdicts[i])});
  return out;
}

}  // namespace schwarzric
