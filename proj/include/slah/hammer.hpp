#ifndef SLAH_HAMMER_HPP
#define SLAH_HAMMER_HPP

#include "slah/datalog.hpp"
#include "slah/testpoints.hpp"

namespace slah {

// How a universal conjecture is folded into the Datalog program: one rule
// whose body lists every expected instance, or expected-instance facts
// checked through stratified negation.
enum class Encoding { Clause, Stratified };

// Fresh predicate standing for a theory atom shape; its facts are the
// satisfying assignments over the argument domains.
struct TheoryPredInfo {
  std::string name;
  LinearAtom atom;
  std::vector<std::string> argVars;  // first-appearance order in the atom
  std::vector<std::vector<Value>> argDomains;
};

// Fresh unary predicate restricting a rule variable to its admissible
// test points; needed when no positive body atom constrains it.
struct SortPredInfo {
  std::string name;
  SortId sort;
  std::vector<Value> values;
};

struct HammerStats {
  unsigned long long tfactCount = 0;
  unsigned long long sfactCount = 0;
  unsigned long long deltaPhi = 0;  // expected instances of a universal conjecture
};

struct HammeredProgram {
  DatalogProgram program;
  std::vector<TheoryPredInfo> theoryPreds;
  std::vector<SortPredInfo> sortPreds;
  bool hasUniversal = false;
  bool etaComplete = true;  // meaningful only with hasUniversal
  HammerStats stats;
};

// Translates the clause set into Datalog over the test points: clause
// structure is kept, theory atoms become tabulated predicates, unconstrained
// variables get domain predicates, empty heads become the goal atom. A
// universal conjecture carried by the problem is encoded per `enc` when its
// test points cover the argument sorts; otherwise only the goal from the
// clause set itself remains.
HammeredProgram hammer(const Problem& p, const TestPoints& tp, Encoding enc);

extern const char* const kGoalPred;
extern const char* const kGoalUnivPred;
extern const char* const kExpectedPred;
extern const char* const kMissingPred;

}  // namespace slah

#endif
