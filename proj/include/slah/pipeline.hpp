#ifndef SLAH_PIPELINE_HPP
#define SLAH_PIPELINE_HPP

#include "slah/engine.hpp"
#include "slah/hammer.hpp"
#include "slah/normalize.hpp"
#include "slah/oracle.hpp"

namespace slah {

enum class Verdict { Entailed, NotEntailed };

enum class ConjectureKind { None, Exists, Forall };

struct PipelineOptions {
  bool twoPointsPerInterval = false;
  bool topoAvals = false;
  Encoding encoding = Encoding::Stratified;
};

struct PipelineResult {
  Problem problem;  // after conjecture lowering and variable repair
  AVals avals;
  Connections con;
  TestPoints tps;
  HammeredProgram hammered;
  ConjectureKind kind = ConjectureKind::None;
  std::size_t clauseCount = 0;
  std::size_t maxClauseVars = 0;
};

// Lowers an existential conjecture into a refutation clause, repairs
// variables outside predicate atoms, derives values, checks reducibility
// (NotReducibleError otherwise), picks test points and hammers the result
// into Datalog.
PipelineResult run_pipeline(Problem p, const PipelineOptions& opt);

struct Decision {
  Verdict verdict = Verdict::NotEntailed;
  EvalResult eval;
};

// Entailed iff a goal atom is derivable. An unsatisfiable clause set
// entails anything, so the refutation goal counts alongside the
// universal-conjecture goal.
Decision decide(const PipelineResult& pr);

Verdict oracle_verdict(const PipelineResult& pr, unsigned long long limit);

unsigned long long oracle_limit_from_env();

}  // namespace slah

#endif
