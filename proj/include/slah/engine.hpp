#ifndef SLAH_ENGINE_HPP
#define SLAH_ENGINE_HPP

#include <set>

#include "slah/datalog.hpp"

namespace slah {

struct NotStratifiableError : Error {
  using Error::Error;
};

// Stratum per predicate: every rule's head sits at or above each positive
// body predicate and strictly above each negated one. Throws
// NotStratifiableError when negation is involved in a cycle.
std::map<std::string, int> stratify(const DatalogProgram& prog);

struct EvalResult {
  std::map<std::string, std::set<std::vector<Value>>> facts;

  bool derivable(const std::string& pred) const {
    auto it = facts.find(pred);
    return it != facts.end() && !it->second.empty();
  }
  unsigned long long totalFacts() const;
};

// Bottom-up fixpoint, stratum by stratum, semi-naive within a stratum.
// Negated atoms read the completed lower strata only.
EvalResult evaluate(const DatalogProgram& prog);

}  // namespace slah

#endif
