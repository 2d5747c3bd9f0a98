#include "slah/pipeline.hpp"

#include <cstdlib>

namespace slah {

PipelineResult run_pipeline(Problem p, const PipelineOptions& opt) {
  PipelineResult pr;
  if (p.conjecture) {
    if (p.conjecture->quant == Quantifier::Exists) {
      // N entails exists x. Q(x) iff N with Q(x) -> false is unsatisfiable
      HornClause neg;
      neg.body.push_back(p.conjecture->atom);
      neg.head = std::nullopt;
      neg.varSorts = p.conjecture->varSorts;
      p.clauses.push_back(std::move(neg));
      p.conjecture.reset();
      pr.kind = ConjectureKind::Exists;
    } else {
      pr.kind = ConjectureKind::Forall;
    }
  }
  repair_unhoused_vars(p);

  pr.avals = derive_values(p, opt.topoAvals);
  require_reducible(p, pr.avals);
  pr.con = find_connections(p, pr.avals);
  pr.tps = pick_test_points(p, pr.avals, pr.con, opt.twoPointsPerInterval);
  pr.hammered = hammer(p, pr.tps, opt.encoding);

  pr.clauseCount = p.clauses.size();
  for (const HornClause& c : p.clauses)
    pr.maxClauseVars = std::max(pr.maxClauseVars, c.varSorts.size());
  pr.problem = std::move(p);
  return pr;
}

Decision decide(const PipelineResult& pr) {
  Decision d;
  d.eval = evaluate(pr.hammered.program);
  bool goal = d.eval.derivable(kGoalPred) || d.eval.derivable(kGoalUnivPred);
  d.verdict = goal ? Verdict::Entailed : Verdict::NotEntailed;
  return d;
}

Verdict oracle_verdict(const PipelineResult& pr, unsigned long long limit) {
  OracleResult r = oracle_saturate(pr.problem, pr.tps, OracleDomains::TestPoints, limit);
  return r.entailed() ? Verdict::Entailed : Verdict::NotEntailed;
}

unsigned long long oracle_limit_from_env() {
  const char* s = std::getenv("SLAH_ORACLE_LIMIT");
  if (!s || !*s) return 1000000ULL;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end || v == 0) return 1000000ULL;
  return v;
}

}  // namespace slah
