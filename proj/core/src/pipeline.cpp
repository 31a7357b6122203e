#include "schwarzric/pipeline.hpp"

#include <json.hpp>
#include <sstream>

#include "schwarzric/expr.hpp"

namespace schwarzric {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kCiteEquation =
    "Schwarzian equation S_t(y) + (y')^2 R(y) = 0 with associated Riccati equation du/dy + u^2 + R/2 = 0";
constexpr const char* kCiteKimura =
    "Kimura classification for triangular R: 15-row fractional table and odd-integer sum test";
constexpr const char* kCiteOrderTwo =
    "an order-two subvariety yields, via Puiseux expansion of y''/y'^2 in 1/y', an algebraic solution a0/2 "
    "of the Riccati equation";
constexpr const char* kCiteOracle = "rational Riccati solutions by exhaustive local-exponent search (Kovacic case 1)";

constexpr const char* kStatementHolds =
    "Riccati condition holds (no algebraic solution) => no order-two subvarieties; strong minimality of the "
    "equation follows by a separate model-theoretic argument not re-proved here";
constexpr const char* kStatementIndicated =
    "a Kimura witness fired: an algebraic Riccati solution is indicated, so the order-two exclusion does not apply";
constexpr const char* kStatementNotTriangular =
    "R is not in triangular form with rational parameters; the Kimura decision does not apply";

const char* param_name(int i) {
  static constexpr const char* names[] = {"alpha", "beta", "gamma"};
  return names[i];
}

ojson int_json(const BigInt& n) {
  if (n.fits_slong_p()) return ojson(n.get_si());
  return ojson(n.get_str());
}

ojson witness_json(const KimuraWitness& w) {
  ojson j;
  if (const auto* c2 = std::get_if<ConditionTwoWitness>(&w)) {
    static constexpr const char* sums[] = {"+++", "-++", "+-+", "++-"};
    j["condition"] = 2;
    j["sum"] = sums[c2->sum_index];
    j["value"] = int_json(c2->value);
  } else {
    const auto& c1 = std::get<ConditionOneWitness>(w);
    j["condition"] = 1;
    j["row"] = c1.row;
    j["permutation"] = ojson::array();
    for (int p : c1.permutation) j["permutation"].push_back(param_name(p));
    j["signs"] = ojson(std::vector<int>(c1.signs.begin(), c1.signs.end()));
    j["integers"] = ojson::array();
    for (const auto& n : c1.integers) j["integers"].push_back(n ? int_json(*n) : ojson(nullptr));
    j["parity_required"] = kimura_table()[c1.row - 1].requires_even_sum;
  }
  j["description"] = describe(w);
  return j;
}

ojson verdict_json(const KimuraVerdict& v) {
  ojson j;
  j["outcome"] = std::string(to_string(v.outcome));
  j["witness"] = v.witness ? witness_json(*v.witness) : ojson(nullptr);
  j["assignments_examined"] = v.assignments_examined;
  j["sums_examined"] = v.sums_examined;
  return j;
}

ojson params_json(const TriangleParams& p) {
  ojson j = ojson::array();
  for (const auto& s : p.slots()) j.push_back(s.str());
  return j;
}

ojson oracle_json(const OracleResult& r) {
  ojson j;
  j["solutions"] = ojson::array();
  for (const auto& u : r.solutions) j["solutions"].push_back(u.str("y"));
  j["families"] = ojson::array();
  for (const auto& f : r.families) j["families"].push_back(f.str());
  ojson searched;
  searched["candidates"] = r.candidates_examined;
  searched["complete"] = r.complete;
  searched["local"] = ojson::array();
  for (const auto& ld : r.local) {
    ojson l;
    l["point"] = ld.point;
    l["order"] = ld.order;
    l["status"] = std::string(to_string(ld.status));
    l["exponents"] = ojson::array();
    for (const auto& o : ld.options) l["exponents"].push_back(o.exponent.str());
    searched["local"].push_back(std::move(l));
  }
  searched["records"] = ojson::array();
  for (const auto& c : r.candidates) {
    ojson rec;
    rec["choice"] = ojson(c.option_index);
    rec["degree"] = c.degree.str();
    rec["status"] = std::string(to_string(c.status));
    searched["records"].push_back(std::move(rec));
  }
  searched["notes"] = ojson(r.notes);
  j["searched"] = std::move(searched);
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void render_oracle_text(std::ostringstream& os, const OracleResult& r) {
  os << "oracle: " << r.solutions.size() << " rational solution(s), " << r.families.size() << " famil"
     << (r.families.size() == 1 ? "y" : "ies") << "; " << r.candidates_examined << " candidate(s) examined"
     << (r.complete ? "" : " (incomplete: degree bound)") << "\n";
  for (const auto& u : r.solutions) os << "  u = " << u.str("y") << "\n";
  for (const auto& f : r.families) os << "  family: " << f.str() << "\n";
  for (const auto& ld : r.local) {
    os << "  local " << ld.point << " (order " << ld.order << "): ";
    if (ld.status != LocalData::Status::Ok) {
      os << to_string(ld.status) << " - " << ld.note << "\n";
      continue;
    }
    for (std::size_t i = 0; i < ld.options.size(); ++i) os << (i ? ", " : "") << ld.options[i].exponent;
    os << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

}  // namespace

std::string EquationInput::echo() const {
  std::string s;
  if (triangle) s = "triangle " + triangle->str();
  if (expr) s = "expr \"" + *expr + "\"" + (var != "y" ? " in " + var : "");
  if (s.empty()) s = "R = 0";
  if (moebius) s += " with Moebius pullback " + moebius->str();
  return s;
}

RatFunc EquationInput::coefficient() const {
  RatFunc R;
  if (triangle) R = build_triangular_R(*triangle);
  if (expr) R = parse_ratfunc(*expr, var);
  if (moebius) R = moebius_pullback(R, *moebius);
  return R;
}

std::string_view to_string(AnalysisReport::Conclusion c) {
  switch (c) {
    case AnalysisReport::Conclusion::NoOrderTwoSubvarieties: return "NoOrderTwoSubvarieties";
    case AnalysisReport::Conclusion::AlgebraicSolutionIndicated: return "AlgebraicSolutionIndicated";
    case AnalysisReport::Conclusion::NotTriangular: return "NotTriangular";
  }
  return "Unknown";
}

AnalysisReport cmd_analyze(const EquationInput& in, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.input = in.echo();
  rep.normalized = in.coefficient();
  rep.recognition = recognize_triangular(rep.normalized);
  rep.citations = {kCiteEquation, kCiteKimura, kCiteOrderTwo};
  if (in.triangle && !in.moebius) {
    rep.params = in.triangle;
  } else if (rep.recognition.params) {
    rep.params = rep.recognition.params;
    rep.params_recognized = true;
  }

  if (rep.params) {
    rep.hyperbolic = rep.params->is_hyperbolic();
    rep.kimura = decide_condition_ric(*rep.params);
  }

  if (opts.run_oracle) {
    rep.oracle = rational_solutions(associate_riccati(rep.normalized), opts.oracle);
    rep.citations.push_back(kCiteOracle);
    if (rep.kimura) {
      const bool has_rational = !rep.oracle->solutions.empty() || !rep.oracle->families.empty();
      const bool contradiction = rep.kimura->outcome == KimuraVerdict::Outcome::ConditionRicHolds && has_rational;
      rep.consistency = contradiction ? ConsistencyReport::Status::Contradiction : ConsistencyReport::Status::Consistent;
    }
  }

  if (!rep.kimura) {
    rep.conclusion = AnalysisReport::Conclusion::NotTriangular;
    rep.conclusion_text = kStatementNotTriangular;
  } else if (rep.kimura->outcome == KimuraVerdict::Outcome::ConditionRicHolds) {
    rep.conclusion = AnalysisReport::Conclusion::NoOrderTwoSubvarieties;
    rep.conclusion_text = kStatementHolds;
  } else {
    rep.conclusion = AnalysisReport::Conclusion::AlgebraicSolutionIndicated;
    rep.conclusion_text = kStatementIndicated;
  }
  return rep;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "equation: " << SchwarzianEquation{r.normalized}.str() << "\n";
  os << "riccati: " << associate_riccati(r.normalized).str() << "\n";
  os << "triangular: " << to_string(r.recognition.status);
  if (r.recognition.status != TriangularRecognition::Status::NotTriangular) {
    os << " (inverse squares " << r.recognition.inverse_squares[0] << ", " << r.recognition.inverse_squares[1] << ", "
       << r.recognition.inverse_squares[2] << ")";
  }
  if (!r.recognition.reason.empty()) os << " - " << r.recognition.reason;
  os << "\n";
  if (r.params) os << "parameters: " << r.params->str() << (r.params_recognized ? " up to sign" : "") << "\n";
  if (r.hyperbolic) os << "hyperbolic: " << (*r.hyperbolic ? "yes" : "no") << "\n";
  if (r.kimura) {
    os << "kimura: " << to_string(r.kimura->outcome);
    if (r.kimura->witness) os << " - " << describe(*r.kimura->witness);
    os << "\n";
  }
  if (r.oracle) render_oracle_text(os, *r.oracle);
  if (r.consistency) os << "cross-check: " << to_string(*r.consistency) << "\n";
  os << "conclusion: " << to_string(r.conclusion) << "\n";
  os << "  " << r.conclusion_text << "\n";
  return os.str();
}

std::string render_json(const AnalysisReport& r) {
  ojson j;
  j["input"] = r.input;
  j["normalized"] = r.normalized.str("y");
  ojson tri;
  tri["status"] = std::string(to_string(r.recognition.status));
  if (r.recognition.status != TriangularRecognition::Status::NotTriangular) {
    tri["inverse_squares"] = ojson::array();
    for (const auto& s : r.recognition.inverse_squares) tri["inverse_squares"].push_back(s.str());
  } else {
    tri["inverse_squares"] = nullptr;
  }
  tri["params"] = r.params ? params_json(*r.params) : ojson(nullptr);
  tri["reason"] = r.recognition.reason;
  j["triangular"] = std::move(tri);
  j["hyperbolic"] = r.hyperbolic ? ojson(*r.hyperbolic) : ojson(nullptr);
  j["kimura"] = r.kimura ? verdict_json(*r.kimura) : ojson(nullptr);
  if (r.oracle) {
    ojson o = oracle_json(*r.oracle);
    o["consistency"] = r.consistency ? ojson(std::string(to_string(*r.consistency))) : ojson(nullptr);
    j["oracle"] = std::move(o);
  } else {
    j["oracle"] = nullptr;
  }
  j["conclusion"] = std::string(to_string(r.conclusion));
  j["statement"] = r.conclusion_text;
  j["citations"] = ojson(r.citations);
  return dump(j);
}

SweepReport cmd_sweep(const SweepOptions& opts) {
  SweepReport rep;
  rep.bound = opts.bound;
  const auto triples = hyperbolic_integer_triples(opts.bound);
  std::vector<std::optional<SweepRow>> rows(triples.size());
  parallel_for_index(triples.size(), opts.jobs, [&](std::size_t i) {
    if (opts.cross_check) {
      ConsistencyReport c = cross_check(triples[i], OracleOptions{opts.oracle.degree_bound, false});
      rows[i] = SweepRow{triples[i], std::move(c.verdict), c.status, c.oracle.solutions.size()};
    } else {
      rows[i] = SweepRow{triples[i], decide_condition_ric(triples[i]), std::nullopt, 0};
    }
  });
  rep.rows.reserve(rows.size());
  for (auto& r : rows) {
    if (r->verdict.outcome == KimuraVerdict::Outcome::ConditionRicHolds) ++rep.holds;
    if (r->consistency == ConsistencyReport::Status::Contradiction) ++rep.contradictions;
    rep.rows.push_back(std::move(*r));
  }
  return rep;
}

std::string render_text(const SweepReport& r, bool full) {
  std::ostringstream os;
  if (full) {
    for (const auto& row : r.rows) {
      os << row.params.str() << ": " << to_string(row.verdict.outcome);
      if (row.verdict.witness) os << " - " << describe(*row.verdict.witness);
      if (row.consistency) os << " [" << to_string(*row.consistency) << "]";
      os << "\n";
    }
  }
  if (r.all_hold()) {
    os << "all " << r.rows.size() << " triples: ConditionRicHolds (bound " << r.bound << ")\n";
  } else {
    os << (r.rows.size() - r.holds) << " of " << r.rows.size() << " triples did not yield ConditionRicHolds\n";
    if (!full) {
      for (const auto& row : r.rows)
        if (row.verdict.outcome != KimuraVerdict::Outcome::ConditionRicHolds)
          os << "  " << row.params.str() << ": " << describe(*row.verdict.witness) << "\n";
    }
  }
  if (r.contradictions) os << r.contradictions << " cross-check CONTRADICTION(s)\n";
  return os.str();
}

std::string render_json(const SweepReport& r, bool full) {
  ojson j;
  j["bound"] = r.bound;
  j["triples"] = r.rows.size();
  j["condition_ric_holds"] = r.holds;
  j["all_hold"] = r.all_hold();
  j["contradictions"] = r.contradictions;
  j["rows"] = ojson::array();
  for (const auto& row : r.rows) {
    if (!full && row.verdict.outcome == KimuraVerdict::Outcome::ConditionRicHolds) continue;
    ojson e;
    e["params"] = params_json(row.params);
    e["kimura"] = verdict_json(row.verdict);
    e["consistency"] = row.consistency ? ojson(std::string(to_string(*row.consistency))) : ojson(nullptr);
    j["rows"].push_back(std::move(e));
  }
  return dump(j);
}

SeriesCheckReport cmd_series_check(const EquationInput& in, const SeriesCheckOptions& opts) {
  SeriesCheckReport rep;
  rep.input = in.echo();
  rep.R = in.coefficient();

  if (opts.lambda0) {
    const RatFunc a0 = opts.a0_expr ? parse_ratfunc(*opts.a0_expr, "y") : RatFunc(1);
    rep.constraints.push_back(leading_constraints(*opts.lambda0, a0, rep.R, opts.truncation));
    return rep;
  }

  // No leading exponent pinned: show both obstructions, then the zero-exponent constraint.
  rep.constraints.push_back(leading_constraints(BigRat(1, 2), RatFunc(1), rep.R, opts.truncation));
  rep.constraints.push_back(leading_constraints(BigRat(-1, 2), RatFunc(1), rep.R, opts.truncation));
  if (opts.a0_expr) {
    rep.constraints.push_back(leading_constraints(BigRat(0), parse_ratfunc(*opts.a0_expr, "y"), rep.R, opts.truncation));
    return rep;
  }
  const OracleResult oracle = rational_solutions(associate_riccati(rep.R), opts.oracle);
  for (const auto& u : oracle.solutions) {
    const RatFunc a0 = u * RatFunc(BigRat(2));
    if (a0.is_zero()) continue;  // a leading coefficient is nonzero by definition
    rep.a0_solutions.push_back(a0);
    rep.constraints.push_back(leading_constraints(BigRat(0), a0, rep.R, opts.truncation));
  }
  for (const auto& f : oracle.families) {
    rep.a0_families.push_back(f);
    // Representative member: P = sum of the basis.
    Poly P;
    for (const auto& b : f.basis) P += b;
    const RatFunc a0 = (f.omega + RatFunc(P.derivative(), P)) * RatFunc(BigRat(2));
    if (!a0.is_zero()) rep.constraints.push_back(leading_constraints(BigRat(0), a0, rep.R, opts.truncation));
  }
  rep.notes = oracle.notes;
  if (rep.a0_solutions.empty() && rep.a0_families.empty())
    rep.notes.push_back("no rational a0 satisfies d a0/dy + 1/2 a0^2 + R = 0");
  return rep;
}

std::string render_text(const SeriesCheckReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "R(y) = " << r.R.str("y") << "\n";
  os << "reduced equation: u'/y' + 1/2 u^2 + R(y) = 0 with u = y''/y'^2 = sum a_i w^lambda_i, w = y'\n";
  for (const auto& c : r.constraints) {
    os << "lambda0 = " << c.lambda0 << ", a0 = " << c.a0.str("y") << ": " << to_string(c.kind) << "\n";
    os << "  E(U) = " << c.residual_series.str() << "\n";
    switch (c.kind) {
      case ConstraintReport::Kind::PositiveExponentObstruction:
        os << "  coefficient of w^{" << c.obstruction_exponent << "} is " << c.obstruction_coefficient.str("y")
           << " = (lambda0 + 1/2) a0^2 = " << c.leading_balance.str("y") << ", nonzero: lambda0 > 0 impossible\n";
        break;
      case ConstraintReport::Kind::NegativeExponentObstruction:
        os << "  coefficient of w^{0} is " << c.obstruction_coefficient.str("y")
           << (c.obstruction_coefficient.is_zero() ? " (R = 0: no obstruction at w^0)\n"
                                                   : ", R cannot cancel: lambda0 < 0 impossible\n");
        break;
      case ConstraintReport::Kind::ZeroExponentConstraint:
        os << "  constraint d a0/dy + 1/2 a0^2 + R = " << c.constraint_residual.str("y")
           << (c.constraint_satisfied ? " (satisfied)" : " (violated)") << "\n";
        os << "  a0/2 = " << c.half_a0.str("y") << (c.half_a0_solves_riccati ? " solves" : " does not solve")
           << " du/dy + u^2 + R/2 = 0\n";
        break;
    }
  }
  if (!r.a0_solutions.empty()) {
    os << "rational a0 with lambda0 = 0:";
    for (std::size_t i = 0; i < r.a0_solutions.size(); ++i) os << (i ? ", " : " ") << r.a0_solutions[i].str("y");
    os << "\n";
  }
  for (const auto& f : r.a0_families) os << "a0 = 2u family: " << f.str() << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_json(const SeriesCheckReport& r) {
  ojson j;
  j["input"] = r.input;
  j["R"] = r.R.str("y");
  j["constraints"] = ojson::array();
  for (const auto& c : r.constraints) {
    ojson e;
    e["lambda0"] = c.lambda0.str();
    e["a0"] = c.a0.str("y");
    e["kind"] = std::string(to_string(c.kind));
    e["residual"] = c.residual_series.str();
    if (c.kind == ConstraintReport::Kind::ZeroExponentConstraint) {
      e["constraint_residual"] = c.constraint_residual.str("y");
      e["satisfied"] = c.constraint_satisfied;
      e["half_a0"] = c.half_a0.str("y");
      e["half_a0_solves_riccati"] = c.half_a0_solves_riccati;
    } else {
      e["obstruction_exponent"] = c.obstruction_exponent.str();
      e["obstruction_coefficient"] = c.obstruction_coefficient.str("y");
      e["leading_balance"] = c.leading_balance.str("y");
    }
    j["constraints"].push_back(std::move(e));
  }
  j["a0_solutions"] = ojson::array();
  for (const auto& a : r.a0_solutions) j["a0_solutions"].push_back(a.str("y"));
  j["a0_families"] = ojson::array();
  for (const auto& f : r.a0_families) j["a0_families"].push_back(f.str());
  j["notes"] = ojson(r.notes);
  return dump(j);
}

OracleReport cmd_oracle(const EquationInput& in, const OracleOptions& opts) {
  const RatFunc R = in.coefficient();
  OracleReport rep{in.echo(), R, associate_riccati(R), to_linear_ode(associate_riccati(R)), {}, std::nullopt};
  rep.result = rational_solutions(rep.riccati, opts);
  std::optional<TriangleParams> params;
  if (in.triangle && !in.moebius) params = in.triangle;
  else if (auto rec = recognize_triangular(R); rec.params) params = rec.params;
  if (params) {
    ConsistencyReport c;
    c.verdict = decide_condition_ric(*params);
    c.oracle = rep.result;
    const bool has_rational = !c.oracle.solutions.empty() || !c.oracle.families.empty();
    if (c.verdict.outcome == KimuraVerdict::Outcome::ConditionRicHolds) {
      c.status = has_rational ? ConsistencyReport::Status::Contradiction : ConsistencyReport::Status::Consistent;
      c.note = has_rational ? "Kimura reports no algebraic solution but a rational solution exists"
                            : "no witness, no rational solution";
    } else {
      c.note = has_rational ? "witness confirmed by a rational solution"
                            : "witness without rational solution; algebraic degree >= 2 possible";
    }
    rep.consistency = std::move(c);
  }
  return rep;
}

std::string render_text(const OracleReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "riccati: " << r.riccati.str() << "\n";
  os << "linear: " << r.linear.str() << "  (u = v'/v)\n";
  render_oracle_text(os, r.result);
  if (r.consistency) {
    os << "kimura: " << to_string(r.consistency->verdict.outcome);
    if (r.consistency->verdict.witness) os << " - " << describe(*r.consistency->verdict.witness);
    os << "\ncross-check: " << to_string(r.consistency->status) << " (" << r.consistency->note << ")\n";
  }
  return os.str();
}

std::string render_json(const OracleReport& r) {
  ojson j;
  j["input"] = r.input;
  j["riccati"] = r.riccati.str();
  j["linear"] = r.linear.str();
  j["oracle"] = oracle_json(r.result);
  if (r.consistency) {
    ojson c;
    c["kimura"] = verdict_json(r.consistency->verdict);
    c["status"] = std::string(to_string(r.consistency->status));
    c["note"] = r.consistency->note;
    j["cross_check"] = std::move(c);
  } else {
    j["cross_check"] = nullptr;
  }
  return dump(j);
}

}  // namespace schwarzric
