#ifndef SLAH_ORACLE_HPP
#define SLAH_ORACLE_HPP

#include <set>

#include "slah/testpoints.hpp"

namespace slah {

// Reference decision procedure used to cross-check the Datalog translation:
// ground every clause over the admissible values per variable, evaluate the
// arithmetic side exactly, then saturate the ground Horn set by forward
// chaining. No clause translation, no tabulated predicates, no negation.
enum class OracleDomains {
  TestPoints,       // variables range over their test-point sets
  FullFiniteSorts,  // variables range over their full finite sorts
};

struct OracleResult {
  bool unsat = false;
  bool universalHolds = false;  // every expected conjecture instance derived
  bool hasUniversal = false;
  std::map<std::string, std::set<std::vector<Value>>> facts;

  bool entailed() const { return unsat || universalHolds; }
};

// Throws ScaleExceededError once the grounding passes `limit` clauses and
// Error when FullFiniteSorts meets an arithmetic variable.
OracleResult oracle_saturate(const Problem& p, const TestPoints& tp, OracleDomains mode,
                             unsigned long long limit);

}  // namespace slah

#endif
