#include <algorithm>

#include "schwarzric/error.hpp"
#include "schwarzric/ratfunc.hpp"

namespace schwarzric {

std::vector<std::pair<BigRat, int>> rational_poles(const RatFunc& r) {
  if (r.den().is_constant()) return {};
  RationalRootSplit split = rational_roots(r.den());
  if (!split.cofactor.is_constant()) {
    throw Error(ErrorKind::NotSplitOverRationals, "exact-arith",
                "denominator factor " + split.cofactor.str() + " has no rational roots");
  }
  return std::move(split.roots);
}

PartialFractions partial_fractions(const RatFunc& r) {
  PartialFractions pf;
  pf.polynomial_part = r.num().divmod(r.den()).first;
  if (r.den().is_constant()) return pf;
  for (const auto& [pole, order] : rational_poles(r)) {
    const LaurentSeries s = laurent_at(r, pole, order);
    // Reduced form: the valuation at a root of multiplicity `order` is exactly -order.
    for (int k = order; k >= 1; --k) {
      const BigRat c = s.at(-k);
      if (!c.is_zero()) pf.terms.push_back({pole, k, c});
    }
  }
  std::sort(pf.terms.begin(), pf.terms.end(), [](const auto& a, const auto& b) {
    return a.pole != b.pole ? a.pole < b.pole : a.order < b.order;
  });
  return pf;
}

RatFunc PartialFractions::recombine() const {
  RatFunc acc(polynomial_part);
  for (const auto& t : terms) {
    acc += RatFunc(Poly(t.coefficient), Poly::linear(t.pole).pow(static_cast<unsigned>(t.order)));
  }
  return acc;
}

}  // namespace schwarzric
